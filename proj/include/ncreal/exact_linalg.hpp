#pragma once

#include <vector>

#include "ncreal/rational.hpp"

namespace ncreal {

/// Exact rank via fraction-free (Bareiss) elimination on an integer copy.
Index rank(const RationalMatrix& A);

/// Symmetric LDL^T with diagonal pivoting over the rationals.
///
/// On success P A P^T = L D L^T with L unit lower triangular and D >= 0,
/// where (P A P^T)(i, j) = A(perm[i], perm[j]). When A is not positive
/// semidefinite the factorization stops early and witness() holds a rational
/// vector c (original coordinates) with c^T A c < 0.
class RationalLdlt {
 public:
  RationalLdlt() = default;
  explicit RationalLdlt(const RationalMatrix& A) { compute(A); }

  /// Throws std::invalid_argument for a non-square or non-symmetric input.
  RationalLdlt& compute(const RationalMatrix& A);

  bool isPositive() const { return positive_; }
  const RationalMatrix& matrixL() const { return L_; }
  const RationalVector& vectorD() const { return D_; }
  const std::vector<Index>& permutation() const { return perm_; }
  const RationalVector& witness() const { return witness_; }
  /// Number of pivots processed before stopping (n when positive).
  Index steps() const { return steps_; }

  /// P^T L D L^T P; equals the input when isPositive().
  RationalMatrix reconstruct() const;

 private:
  bool positive_ = false;
  Index steps_ = 0;
  RationalMatrix L_;
  RationalVector D_;
  std::vector<Index> perm_;
  RationalVector witness_;
};

/// c^T A c.
Rational quadratic_form(const RationalMatrix& A, const RationalVector& c);

bool is_symmetric(const RationalMatrix& A);

}  // namespace ncreal
