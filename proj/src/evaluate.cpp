#include "ncreal/evaluate.hpp"

#include <Eigen/SVD>

namespace ncreal {

void check_point(const MatrixPoint& pt, int num_vars) {
  if (pt.n < 1) throw std::invalid_argument("point: n must be positive");
  if (static_cast<int>(pt.X.size()) < num_vars)
    throw std::invalid_argument("point: expected " + std::to_string(num_vars) + " matrices, got " +
                                std::to_string(pt.X.size()));
  for (const auto& M : pt.X)
    if (M.rows() != pt.n || M.cols() != pt.n) throw std::invalid_argument("point: matrix size differs from n");
  if (pt.v.size() != 0 && pt.v.size() != pt.n) throw std::invalid_argument("point: vector length differs from n");
}

Eigen::MatrixXd evaluate(const Polynomial& p, const MatrixPoint& pt) {
  check_point(pt, p.num_vars());
  return evaluate<double>(p, pt.X);
}

Eigen::VectorXd apply(const Polynomial& p, const MatrixPoint& pt) {
  check_point(pt, p.num_vars());
  if (pt.v.size() != pt.n) throw std::invalid_argument("point: missing vector");
  return evaluate<double>(p, pt.X) * pt.v;
}

Eigen::MatrixXd common_kernel(const std::vector<Eigen::MatrixXd>& mats, double tol) {
  if (mats.empty()) return {};
  const Index n = mats.front().cols();
  Index rows = 0;
  for (const auto& M : mats) {
    if (M.cols() != n) throw std::invalid_argument("common_kernel: column counts differ");
    rows += M.rows();
  }
  Eigen::MatrixXd stacked = Eigen::MatrixXd::Zero(std::max<Index>(rows, n), n);
  Index r = 0;
  for (const auto& M : mats) {
    const double norm = M.norm();
    if (norm > 0) stacked.middleRows(r, M.rows()) = M / norm;
    r += M.rows();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > tol) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

}  // namespace ncreal
