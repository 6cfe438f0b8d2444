#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "ncreal/polynomial.hpp"

namespace ncreal {

/// A point (X, v) of a zero set: g square matrices of side n and a vector.
struct MatrixPoint {
  int n = 0;
  std::vector<Eigen::MatrixXd> X;
  Eigen::VectorXd v;
};

/// Checks sizes; throws std::invalid_argument on any mismatch with p's g.
void check_point(const MatrixPoint& pt, int num_vars);

/// p(X) with x_i -> X[i-1] and x_i* -> X[i-1]^T. Constants map to c * I.
template <typename Scalar>
Matrix<Scalar> evaluate(const Polynomial& p, const std::vector<Matrix<Scalar>>& X) {
  if (static_cast<int>(X.size()) < p.num_vars())
    throw std::invalid_argument("evaluate: need one matrix per variable");
  const Index n = X.empty() ? 0 : X.front().rows();
  for (const auto& M : X)
    if (M.rows() != n || M.cols() != n) throw std::invalid_argument("evaluate: matrices must be square of equal size");
  Matrix<Scalar> out = Matrix<Scalar>::Zero(n, n);
  for (const auto& [w, c] : p.terms()) {
    Matrix<Scalar> term = Matrix<Scalar>::Identity(n, n);
    for (auto l : w) {
      const auto& M = X[l.var - 1];
      term = l.starred ? Matrix<Scalar>(term * M.transpose()) : Matrix<Scalar>(term * M);
    }
    out += scalar_cast<Scalar>(c) * term;
  }
  return out;
}

Eigen::MatrixXd evaluate(const Polynomial& p, const MatrixPoint& pt);

/// p(X) v.
Eigen::VectorXd apply(const Polynomial& p, const MatrixPoint& pt);

/// Orthonormal basis (as columns) of the intersection of the kernels. Each
/// nonzero matrix is scaled to unit Frobenius norm before stacking; directions
/// with stacked singular value <= tol are kept, so ||M k|| <= tol ||M||.
Eigen::MatrixXd common_kernel(const std::vector<Eigen::MatrixXd>& mats, double tol);

}  // namespace ncreal
