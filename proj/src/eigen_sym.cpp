#include "ncreal/eigen_sym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Jacobi>

namespace ncreal {

JacobiEigenSolver& JacobiEigenSolver::compute(const Eigen::MatrixXd& S, bool warm_start) {
  if (S.rows() != S.cols()) throw std::invalid_argument("eigen_sym: matrix is not square");
  if (!S.allFinite()) throw std::invalid_argument("eigen_sym: matrix has non-finite entries");
  const Eigen::Index n = S.rows();
  const double scale = S.norm();
  if ((S - S.transpose()).norm() > 1e-12 * std::max(scale, 1e-300))
    throw std::invalid_argument("eigen_sym: matrix is not symmetric");

  Eigen::MatrixXd V;
  if (warm_start && vectors_.rows() == n && vectors_.cols() == n) {
    V = vectors_;
  } else {
    V = Eigen::MatrixXd::Identity(n, n);
  }
  Eigen::MatrixXd A = V.transpose() * S.selfadjointView<Eigen::Lower>() * V;
  A = (A + A.transpose()) / 2;

  const double target = 1e-14 * std::max(scale, 1e-300);
  sweeps_ = 0;
  for (; sweeps_ < 100; ++sweeps_) {
    double off = 0;
    for (Eigen::Index q = 1; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) off = std::max(off, std::abs(A(p, q)));
    if (off <= target) break;
    // Skip rotations that are negligible relative to this sweep's largest entry.
    const double skip = std::max(target, off * 1e-3 * (sweeps_ < 3 ? 1.0 : 0.0));
    for (Eigen::Index q = 1; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) {
        if (std::abs(A(p, q)) <= skip) continue;
        Eigen::JacobiRotation<double> J;
        J.makeJacobi(A, p, q);
        A.applyOnTheLeft(p, q, J.adjoint());
        A.applyOnTheRight(p, q, J);
        A(p, q) = A(q, p) = 0;
        V.applyOnTheRight(p, q, J);
      }
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return A(a, a) < A(b, b); });
  values_.resize(n);
  vectors_.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    values_(k) = A(order[k], order[k]);
    vectors_.col(k) = V.col(order[k]);
  }
  return *this;
}

Eigen::MatrixXd project_psd(const Eigen::MatrixXd& S, JacobiEigenSolver& solver) {
  solver.compute(S, true);
  const auto& V = solver.eigenvectors();
  const Eigen::VectorXd clipped = solver.eigenvalues().cwiseMax(0.0);
  Eigen::MatrixXd out = V * clipped.asDiagonal() * V.transpose();
  return (out + out.transpose()) / 2;
}

Eigen::MatrixXd project_psd(const Eigen::MatrixXd& S) {
  JacobiEigenSolver solver;
  return project_psd(S, solver);
}

}  // namespace ncreal
