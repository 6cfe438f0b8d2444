#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/QR>

#include "ncreal/eigen_sym.hpp"

namespace ncreal {

/// Length of svec for an n x n symmetric matrix.
Eigen::Index svec_size(Eigen::Index n);
/// Upper triangle, column by column; off-diagonal entries scaled by sqrt(2)
/// so that <svec(A), svec(B)> = tr(AB).
Eigen::VectorXd svec(const Eigen::MatrixXd& S);
Eigen::MatrixXd smat(const Eigen::VectorXd& v, Eigen::Index n);
/// svec index of (i, j), either order.
Eigen::Index svec_index(Eigen::Index i, Eigen::Index j);

/// Feasibility problem: find G >= 0 and z with, for every row r,
///   sum_k coord_value[k] g_k [coord_row[k] == r] - free_coeffs(r, :) z = rhs(r),
/// and tr(G) = 1 when normalize_trace. Here g = svec(G).
///
/// Every svec coordinate enters at most one row (coord_row[k] = -1 for none).
/// Redundant rows are allowed; the projector works with an orthonormal basis
/// of the constraint range, which has full rank by construction.
struct SdpProblem {
  Eigen::Index n = 0;
  std::vector<Eigen::Index> coord_row;
  Eigen::VectorXd coord_value;
  Eigen::MatrixXd free_coeffs;
  Eigen::VectorXd rhs;
  bool normalize_trace = true;
  std::vector<std::string> free_labels;

  Eigen::Index num_rows() const { return rhs.size(); }
  Eigen::Index num_free() const { return free_coeffs.cols(); }
};

/// Orthogonal projection onto the affine set of G satisfying the constraints
/// for some z, precomputed once per problem.
class AffineProjector {
 public:
  explicit AffineProjector(const SdpProblem& problem);

  /// False when no G (with trace 1, if required) satisfies the constraints.
  bool consistent() const { return consistent_; }
  Eigen::VectorXd project(const Eigen::VectorXd& g) const;
  /// Least-squares multipliers for g.
  Eigen::VectorXd recover_free(const Eigen::VectorXd& g) const;
  /// max_r |constraint residual| with the recovered multipliers, and |tr - 1|.
  double residual(const Eigen::VectorXd& g, const Eigen::VectorXd& z) const;

 private:
  SdpProblem problem_;
  bool consistent_ = true;
  std::vector<Eigen::Index> grow_of_row_;  // G-row position or -1
  Eigen::VectorXd row_norm_;               // per G-row
  Eigen::VectorXd z0_;
  Eigen::MatrixXd null_;                   // free directions left by z-only rows
  Eigen::VectorXd h0_;
  Eigen::MatrixXd Q_;                      // orthonormal basis of range(T)
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> tqr_;
  Eigen::VectorXd K_;                      // trace direction inside the linear part
  double k_norm2_ = 0;

  Eigen::VectorXd normalized_rows(const Eigen::VectorXd& g) const;
  Eigen::VectorXd spread(const Eigen::VectorXd& h) const;
  Eigen::VectorXd project_untraced(const Eigen::VectorXd& g) const;
};

/// Convenience wrapper building the projector each call.
Eigen::MatrixXd project_affine(const SdpProblem& problem, const Eigen::MatrixXd& S);

enum class FeasibilityStatus { Feasible, LikelyInfeasible, MaxIterations };
const char* to_string(FeasibilityStatus s);

struct SolverOptions {
  double tol = 1e-8;
  int max_iter = 20000;
  int stall_window = 500;
  /// Relative gap change over the window below which the run has stalled.
  double stall_rel_change = 1e-8;
  bool record_history = false;
};

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::MaxIterations;
  Eigen::MatrixXd G;
  Eigen::VectorXd z;
  int iterations = 0;
  /// Frobenius distance between the last affine and PSD iterates.
  double gap = 0;
  double affine_residual = 0;
  double min_eigenvalue = 0;
  bool affine_inconsistent = false;
  std::vector<double> history;
};

/// Alternating projections between the affine set and the PSD cone, started
/// from I/n. Deterministic.
FeasibilityResult solve_feasibility(const SdpProblem& problem, const SolverOptions& options = {});

}  // namespace ncreal
