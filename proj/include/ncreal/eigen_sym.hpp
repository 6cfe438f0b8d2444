#pragma once

#include <Eigen/Core>

namespace ncreal {

/// Cyclic Jacobi eigensolver for dense symmetric matrices.
///
/// compute() can reuse the previous eigenvectors as a starting basis, which
/// makes repeated decompositions of slowly changing matrices cheap.
class JacobiEigenSolver {
 public:
  JacobiEigenSolver() = default;
  explicit JacobiEigenSolver(const Eigen::MatrixXd& S) { compute(S); }

  /// Throws std::invalid_argument if S is not symmetric to 1e-12 relative.
  JacobiEigenSolver& compute(const Eigen::MatrixXd& S, bool warm_start = false);

  /// Ascending.
  const Eigen::VectorXd& eigenvalues() const { return values_; }
  /// Orthonormal columns matching eigenvalues().
  const Eigen::MatrixXd& eigenvectors() const { return vectors_; }
  int sweeps() const { return sweeps_; }

 private:
  Eigen::VectorXd values_;
  Eigen::MatrixXd vectors_;
  int sweeps_ = 0;
};

/// Nearest PSD matrix in Frobenius norm (negative eigenvalues clipped to 0).
Eigen::MatrixXd project_psd(const Eigen::MatrixXd& S);
/// Same, reusing `solver` (and its eigenvectors as a warm start).
Eigen::MatrixXd project_psd(const Eigen::MatrixXd& S, JacobiEigenSolver& solver);

}  // namespace ncreal
