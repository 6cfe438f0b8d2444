#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncreal/order.hpp"
#include "ncreal/polynomial.hpp"

namespace ncreal {

/// scalar * factors[0] * ... * factors[k-1], each factor monic, homogeneous
/// and irreducible.
struct Factorization {
  Rational scalar{1};
  std::vector<Polynomial> factors;
};

Polynomial expand(const Factorization& f, int num_vars);

/// p = p1 p2 with deg p1 = d1 when the (d1, deg p - d1)-Gram matrix of p has
/// rank one. Throws std::invalid_argument for zero, constant or
/// non-homogeneous p, or d1 outside 1..deg p - 1.
std::optional<std::pair<Polynomial, Polynomial>> rank_one_split(const Polynomial& p, int d1);

/// Peels irreducible left factors with the smallest possible degree.
/// Factors are normalized to leading coefficient 1 under `order`.
Factorization factor_homogeneous(const Polynomial& p, const MonomialOrder& order = {});

bool is_irreducible_homogeneous(const Polynomial& p);

/// The nonzero lambda with p = lambda q, if any.
std::optional<Rational> scalar_multiple_of(const Polynomial& p, const Polynomial& q);

/// "6 · (x1 + x2)·(x1)·(x1 + x2)".
std::string to_string(const Factorization& f);

}  // namespace ncreal
