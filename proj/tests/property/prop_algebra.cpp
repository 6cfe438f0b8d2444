#include <gtest/gtest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "ncreal/evaluate.hpp"
#include "ncreal/parse.hpp"
#include "oracles.hpp"

using namespace ncreal;
using namespace ncreal::testing;

TEST(AlgebraProperty, StarIsAnAntiInvolution) {
  Gen gen(101);
  for (int t = 0; t < 300; ++t) {
    const int g = gen.uniform(1, 3);
    const Polynomial p = gen.polynomial(g, 3, 4), q = gen.polynomial(g, 3, 4), r = gen.polynomial(g, 2, 3);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(star(p * q), star(q) * star(p));
    EXPECT_EQ(star(star(p)), p);
    EXPECT_EQ(star(p + q), star(p) + star(q));
  }
}

TEST(AlgebraProperty, DegreeIsAdditive) {
  Gen gen(102);
  for (int t = 0; t < 1000; ++t) {
    const int g = gen.uniform(1, 3);
    Polynomial p = gen.polynomial(g, 5, 3), q = gen.polynomial(g, 5, 3);
    if (p.is_zero() || q.is_zero()) continue;
    EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
  }
}

TEST(AlgebraProperty, PrintThenParseIsIdentity) {
  Gen gen(103);
  for (int t = 0; t < 300; ++t) {
    const int g = gen.uniform(1, 3);
    Polynomial p(g);
    for (int k = 0; k < 4; ++k) p.add_term(gen.word(g, gen.uniform(0, 4)), gen.rational(9, 7));
    EXPECT_EQ(parse_polynomial(to_string(p), g), p) << to_string(p);
  }
}

TEST(AlgebraProperty, EvaluationIsAUnitalStarHomomorphism) {
  Gen gen(104);
  for (int t = 0; t < 200; ++t) {
    const int g = gen.uniform(1, 2);
    const Polynomial p = gen.polynomial(g, 3, 4), q = gen.polynomial(g, 3, 4);
    std::vector<Eigen::MatrixXd> X;
    for (int i = 0; i < g; ++i) X.push_back(gen.matrix(3, 3));
    const Eigen::MatrixXd Pp = evaluate<double>(p, X), Pq = evaluate<double>(q, X);
    auto close = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
      return (a - b).norm() <= 1e-10 * std::max(1.0, std::max(a.norm(), b.norm()));
    };
    EXPECT_TRUE(close(evaluate<double>(p * q, X), Pp * Pq));
    EXPECT_TRUE(close(evaluate<double>(p + q, X), Pp + Pq));
    EXPECT_TRUE(close(evaluate<double>(star(p), X), Pp.transpose()));
    EXPECT_TRUE(close(evaluate<double>(Polynomial(g, Rational(1)), X), Eigen::MatrixXd::Identity(3, 3)));
  }
}

TEST(AlgebraProperty, UnshrinkableMatchesSplitEnumeration) {
  Gen gen(105);
  for (int t = 0; t < 2000; ++t) {
    const Word w = gen.word(gen.uniform(1, 3), gen.uniform(1, 7));
    EXPECT_EQ(is_left_unshrinkable(w), !brute_shrinkable(encode(w))) << to_string(w);
  }
}
