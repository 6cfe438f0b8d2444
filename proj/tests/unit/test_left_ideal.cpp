#include <gtest/gtest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "ncreal/exact_linalg.hpp"
#include "ncreal/left_ideal.hpp"

using namespace ncreal;
using namespace ncreal::testing;

namespace {

const std::vector<std::string> kCubic{"x1^3 + 1", "x1^2 + x1*^2", "x1 x1* - x1*^2", "x1* x1 - 5"};

bool same_set(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a)
    if (std::find(b.begin(), b.end(), p) == b.end()) return false;
  return true;
}

}  // namespace

TEST(Groebner, CubicSystemBasis) {
  const LeftGroebnerBasis B = left_groebner(Ps(kCubic));
  EXPECT_TRUE(same_set(B.polys, Ps({"x1 x1*^2 - 1", "x1^2 + x1*^2", "x1 x1* - x1*^2", "x1* x1 - 5"})));
  EXPECT_EQ(B.max_degree(), 3);
}

TEST(Groebner, NormalFormOfCube) {
  const LeftGroebnerBasis B = left_groebner(Ps({"x1^2 + x1*^2"}));
  EXPECT_EQ(normal_form(P("x1^3 + 1"), B), P("1 - x1 x1*^2"));
}

TEST(Groebner, Membership) {
  const LeftGroebnerBasis B = left_groebner(Ps({"x1 x1*^2 - 1", "x1^2 + x1*^2", "x1 x1* - x1*^2", "x1* x1 - 5"}));
  EXPECT_TRUE(contains(B, P("x1^3 + 1")));
  EXPECT_TRUE(contains(B, P("x1*^2") * P("x1* x1 - 5")));
  EXPECT_FALSE(contains(B, P("1")));
  EXPECT_FALSE(contains(B, P("x1")));
}

TEST(Groebner, LeadingWordsAreSuffixFree) {
  Gen gen(51);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < gen.uniform(1, 4); ++k) gens.push_back(gen.polynomial(2, 3, 3));
    if (std::all_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
    const LeftGroebnerBasis B = left_groebner(gens);
    const auto leads = B.leading_words();
    for (std::size_t i = 0; i < leads.size(); ++i) {
      EXPECT_EQ(B.polys[i].leading_coefficient(), Rational(1));
      for (std::size_t j = 0; j < leads.size(); ++j)
        if (i != j) EXPECT_FALSE(leads[i].ends_with(leads[j]));
    }
    for (const auto& p : gens) EXPECT_TRUE(contains(B, p));
    // Cofactors express each basis element through the generators.
    for (std::size_t i = 0; i < B.size(); ++i) {
      Polynomial sum(2);
      for (std::size_t k = 0; k < gens.size(); ++k) sum += B.cofactors[i][k] * gens[k];
      EXPECT_EQ(sum, B.polys[i]);
    }
  }
}

TEST(Groebner, NormalFormCofactors) {
  Gen gen(52);
  for (int trial = 0; trial < 100; ++trial) {
    const LeftGroebnerBasis B = left_groebner({gen.polynomial(2, 2, 3) + P("x1 x2", 2), gen.polynomial(2, 2, 2)});
    const Polynomial p = gen.polynomial(2, 4, 6);
    std::vector<Polynomial> cof;
    const Polynomial r = normal_form(p, B, &cof);
    Polynomial sum = r;
    for (std::size_t j = 0; j < B.size(); ++j) sum += cof[j] * B.polys[j];
    EXPECT_EQ(sum, p);
    for (const auto& [w, c] : r.terms()) EXPECT_TRUE(is_standard(w, B));
  }
}

TEST(Groebner, TruncatedBasisIsIndependent) {
  const LeftGroebnerBasis B = left_groebner(Ps({"x1 x1*^2 - 1", "x1^2 + x1*^2", "x1 x1* - x1*^2", "x1* x1 - 5"}));
  const auto T = truncated_basis(B, 3);
  // 1 + (1 + 2) * 3 words of degree <= 3 - deg(p_i).
  ASSERT_EQ(T.size(), 10u);
  const auto words = words_up_to_degree(1, 3);
  RationalMatrix A = RationalMatrix::Zero(static_cast<Index>(T.size()), static_cast<Index>(words.size()));
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) A(i, j) = T[i].coefficient(words[j]);
  EXPECT_EQ(rank(A), static_cast<Index>(T.size()));
}

TEST(Groebner, EdgeCases) {
  EXPECT_THROW(left_groebner({}), std::invalid_argument);
  EXPECT_TRUE(left_groebner({Polynomial(1)}).empty());
  const LeftGroebnerBasis unit = left_groebner(Ps({"x1 + 1", "x1"}));
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_EQ(unit.polys[0], P("1"));
}
