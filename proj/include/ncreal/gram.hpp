#pragma once

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "ncreal/exact_linalg.hpp"
#include "ncreal/polynomial.hpp"

namespace ncreal {

/// A[i][j] is the coefficient of row_basis[i]* col_basis[j].
struct GramMatrix {
  int num_vars = 1;
  std::vector<Word> row_basis;
  std::vector<Word> col_basis;
  RationalMatrix entries;
};

/// The (d1, d2)-Gram matrix of a homogeneous p of degree d1 + d2 (or p = 0).
/// Bases are words_of_degree(g, d1) and words_of_degree(g, d2).
GramMatrix gram_matrix(const Polynomial& p, int d1, int d2);

/// sum_ij A[i][j] row_i* col_j.
Polynomial expand(const GramMatrix& G);

/// sum_i weights[i] polys[i]* polys[i] with positive rational weights.
struct SosCertificate {
  std::vector<Rational> weights;
  std::vector<Polynomial> polys;

  bool empty() const { return polys.empty(); }
};

/// The certified polynomial. An empty certificate expands to 0.
Polynomial expand(const SosCertificate& cert, int num_vars);

/// Checks that every weight is positive and the lists have equal length.
bool well_formed(const SosCertificate& cert);

/// Weighted squares from a PSD decomposition of the Gram matrix on `basis`:
/// r_k = sum_i L(i, k) basis[perm[i]], weight D_k, zero pivots dropped.
/// Each basis element is an arbitrary polynomial (not only a word).
SosCertificate certificate_from_ldlt(const RationalLdlt& ldlt, const std::vector<Polynomial>& basis);

struct SosResult {
  bool is_sos = false;
  SosCertificate certificate;  // when is_sos
  /// Gram witness c with c^T A c < 0 over words_of_degree(g, d); empty when
  /// the answer follows from degree or symmetry alone.
  RationalVector witness;
};

/// Exact SOS test for a homogeneous polynomial. Throws std::invalid_argument
/// for non-homogeneous input.
SosResult is_sos_homogeneous(const Polynomial& p);

enum class PmSos { Plus, Minus, Neither, Zero };
const char* to_string(PmSos k);

struct PmSosResult {
  PmSos kind = PmSos::Neither;
  /// Certificate for p (Plus) or for -p (Minus).
  SosCertificate certificate;
};

/// Whether p or -p is a nonzero SOS; p must be homogeneous.
PmSosResult is_pm_sos_nonzero(const Polynomial& p);

/// Coefficients (a0, ..., a4) of
///   a0 + a1 (x + x*) + a2 (x^2 + x*^2) + a3 x x* + a4 x* x.
using SymmetricQuadratic = std::array<Rational, 5>;

Polynomial to_polynomial(const SymmetricQuadratic& a, int num_vars = 1);

/// Reads p in the form above (variable x1); empty if p has any other shape.
std::optional<SymmetricQuadratic> symmetric_quadratic_coefficients(const Polynomial& p);

/// SOS test for the symmetric quadratic: -a1^2 + a0 (2a2 + a3 + a4) >= 0,
/// a0 >= 0 and [[a3, a2], [a2, a4]] PSD.
bool sos_quadratic_univariate(const SymmetricQuadratic& a);

/// Exact weighted SOS with at most three squares, or empty if not SOS.
std::optional<SosCertificate> sos_quadratic_certificate(const SymmetricQuadratic& a, int num_vars = 1);

/// Numeric decomposition into at most two squares: p ~ sum_k (v_k . m)* (v_k . m)
/// with m = (1, x, x*). Empty if p is not SOS.
std::optional<std::vector<Eigen::Vector3d>> two_square_decomposition(const SymmetricQuadratic& a);

}  // namespace ncreal
