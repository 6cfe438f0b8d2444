#include <gtest/gtest.h>

#include "generators.hpp"
#include "ncreal/factorization.hpp"
#include "products.hpp"

using namespace ncreal;
using namespace ncreal::testing;

TEST(FactorizationProperty, ProductsRoundTrip) {
  Gen gen(301);
  for (int t = 0; t < 100; ++t) {
    const int g = gen.uniform(1, 2);
    const RandomProduct rp = random_product(gen, g, 2, 4, 6);
    const Factorization f = factor_homogeneous(rp.product);
    EXPECT_EQ(expand(f, g), rp.product);
    ASSERT_EQ(f.factors.size(), rp.factors.size()) << to_string(rp.product);
    for (std::size_t i = 0; i < f.factors.size(); ++i)
      EXPECT_TRUE(scalar_multiple_of(rp.factors[i], f.factors[i]).has_value());
  }
}

TEST(FactorizationProperty, ScalarInvariance) {
  Gen gen(302);
  for (int t = 0; t < 50; ++t) {
    const int g = gen.uniform(1, 2);
    const Polynomial p = random_product(gen, g, 1, 3, 5).product;
    const Factorization a = factor_homogeneous(p), b = factor_homogeneous(p * Rational(7));
    EXPECT_EQ(a.factors, b.factors);
    EXPECT_EQ(b.scalar, a.scalar * 7);
  }
}

TEST(FactorizationProperty, FirstFactorHasNoSplit) {
  Gen gen(303);
  for (int t = 0; t < 50; ++t) {
    const Polynomial p = random_product(gen, gen.uniform(1, 2), 2, 3, 6).product;
    const Polynomial first = factor_homogeneous(p).factors.front();
    for (int d1 = 1; d1 < first.degree(); ++d1) EXPECT_FALSE(rank_one_split(first, d1).has_value());
  }
}
