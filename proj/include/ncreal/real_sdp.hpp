#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncreal/left_ideal.hpp"
#include "ncreal/sdp.hpp"
#include "ncreal/verdict.hpp"

namespace ncreal {

/// The semidefinite feasibility problem for non-realness of the left ideal
/// generated by a Groebner basis B with d = max degree:
///   find G >= 0, tr G = 1, and q_j with deg(q_j p_j) < 2d such that
///   m* G m = sum_j (q_j p_j + p_j* q_j*),
/// where m lists the standard words (not left multiples of a leading word)
/// of degree < d. One constraint row per word class {w, w*}.
struct RealSdp {
  LeftGroebnerBasis basis;
  int d = 0;
  std::vector<Word> gram_basis;
  /// multiplier_words[j][i] is the word multiplying the i-th coefficient of q_j.
  std::vector<std::vector<Word>> multiplier_words;
  /// free_offset[j] = index of q_j's first coefficient among the z variables.
  std::vector<Eigen::Index> free_offset;
  std::vector<Word> row_words;
  SdpProblem problem;

  /// Exact coefficients: plain G(i, j) (i <= j) per svec coordinate, and the
  /// z part of every row, sparse.
  std::vector<Rational> coord_exact;
  std::vector<std::map<Eigen::Index, Rational>> free_exact;
};

/// Throws std::invalid_argument for an empty basis.
RealSdp build_real_sdp(const LeftGroebnerBasis& B);

/// Multipliers (for the basis elements) and SOS read off a numeric solution:
/// squares from the eigenvectors of G with eigenvalue > drop_tol, multipliers
/// by least squares against the clipped G.
NonRealCertificate certificate_from_solution(const RealSdp& sdp, const FeasibilityResult& solution,
                                             double drop_tol);

/// Exact certificate near a numeric solution: the Gram matrix is rounded to
/// a dyadic grid, moved back onto the constraints by exact elimination and
/// accepted if the result is PSD. Empty when every attempt fails (typically
/// when G is singular) or the problem exceeds max_vars unknowns.
std::optional<NonRealCertificate> exact_certificate_from_solution(const RealSdp& sdp, const Eigen::MatrixXd& G,
                                                                  std::size_t max_vars = 6000);

struct ExactInfeasibility {
  bool proven = false;
  bool attempted = false;
  std::string reason;
};

/// Rational elimination of the constraints (multipliers first) followed by
/// facial reduction: diagonal entries forced to zero clear their row and
/// column. Proves infeasibility when the system is inconsistent, a
/// nonnegative combination of diagonal entries is forced negative, or a
/// fixed 2x2 principal minor is negative. Skipped (attempted = false) when
/// the unknown count exceeds max_vars.
ExactInfeasibility exact_infeasibility_check(const RealSdp& sdp, std::size_t max_vars = 6000);

}  // namespace ncreal
