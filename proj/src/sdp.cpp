#include "ncreal/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace ncreal {

using Eigen::Index;

Index svec_size(Index n) { return n * (n + 1) / 2; }

Index svec_index(Index i, Index j) {
  if (i > j) std::swap(i, j);
  return j * (j + 1) / 2 + i;
}

Eigen::VectorXd svec(const Eigen::MatrixXd& S) {
  const Index n = S.rows();
  Eigen::VectorXd v(svec_size(n));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i <= j; ++i) v(svec_index(i, j)) = i == j ? S(i, i) : M_SQRT2 * (S(i, j) + S(j, i)) / 2;
  return v;
}

Eigen::MatrixXd smat(const Eigen::VectorXd& v, Index n) {
  if (v.size() != svec_size(n)) throw std::invalid_argument("smat: length does not match n");
  Eigen::MatrixXd S(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i <= j; ++i) {
      const double x = v(svec_index(i, j));
      if (i == j) {
        S(i, i) = x;
      } else {
        S(i, j) = S(j, i) = x / M_SQRT2;
      }
    }
  return S;
}

AffineProjector::AffineProjector(const SdpProblem& problem) : problem_(problem) {
  const Index n = problem.n;
  const Index N = svec_size(n);
  const Index R = problem.num_rows();
  const Index m = problem.num_free();
  if (static_cast<Index>(problem.coord_row.size()) != N || problem.coord_value.size() != N)
    throw std::invalid_argument("SdpProblem: coordinate arrays must have length n(n+1)/2");
  if (problem.free_coeffs.rows() != R) throw std::invalid_argument("SdpProblem: free_coeffs row count differs");

  Eigen::VectorXd norm2 = Eigen::VectorXd::Zero(R);
  for (Index k = 0; k < N; ++k)
    if (problem.coord_row[k] >= 0) norm2(problem.coord_row[k]) += problem.coord_value(k) * problem.coord_value(k);

  grow_of_row_.assign(R, -1);
  std::vector<Index> grows, zrows;
  for (Index r = 0; r < R; ++r) {
    if (norm2(r) > 0) {
      grow_of_row_[r] = static_cast<Index>(grows.size());
      grows.push_back(r);
    } else {
      zrows.push_back(r);
    }
  }
  const Index RG = static_cast<Index>(grows.size());
  row_norm_.resize(RG);
  for (Index i = 0; i < RG; ++i) row_norm_(i) = std::sqrt(norm2(grows[i]));

  // Rows without G coordinates: free_coeffs z = -rhs.
  z0_ = Eigen::VectorXd::Zero(m);
  null_ = Eigen::MatrixXd::Identity(m, m);
  if (!zrows.empty()) {
    Eigen::MatrixXd Aq(zrows.size(), m);
    Eigen::VectorXd bq(zrows.size());
    for (std::size_t i = 0; i < zrows.size(); ++i) {
      Aq.row(i) = problem.free_coeffs.row(zrows[i]);
      bq(i) = -problem.rhs(zrows[i]);
    }
    if (m > 0) {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(Aq, Eigen::ComputeThinU | Eigen::ComputeFullV);
      svd.setThreshold(1e-10);
      const Index rank = svd.rank();
      z0_ = svd.solve(bq);
      null_ = svd.matrixV().rightCols(m - rank);
    }
    if ((Aq * z0_ - bq).norm() > 1e-9 * (1 + bq.norm())) consistent_ = false;
  }

  Eigen::MatrixXd AR(RG, m);
  Eigen::VectorXd bR(RG);
  for (Index i = 0; i < RG; ++i) {
    AR.row(i) = problem.free_coeffs.row(grows[i]) / row_norm_(i);
    bR(i) = problem.rhs(grows[i]) / row_norm_(i);
  }
  h0_ = bR + AR * z0_;
  const Eigen::MatrixXd T = AR * null_;
  if (T.cols() > 0 && RG > 0) {
    tqr_.setThreshold(1e-10);
    tqr_.compute(T);
    Q_ = tqr_.householderQ() * Eigen::MatrixXd::Identity(RG, tqr_.rank());
  } else {
    Q_ = Eigen::MatrixXd::Zero(RG, 0);
  }

  if (problem.normalize_trace) {
    Eigen::VectorXd t = svec(Eigen::MatrixXd::Identity(n, n));
    const Eigen::VectorXd th = normalized_rows(t);
    K_ = t - spread(th - Q_ * (Q_.transpose() * th));
    k_norm2_ = K_.squaredNorm();
    if (k_norm2_ <= 1e-12 * static_cast<double>(n)) {
      // Trace is constant on the affine set; it must already equal 1.
      k_norm2_ = 0;
      const Eigen::VectorXd g0 = project_untraced(Eigen::VectorXd::Zero(N));
      if (std::abs(t.dot(g0) - 1) > 1e-9) consistent_ = false;
    }
  }
}

Eigen::VectorXd AffineProjector::normalized_rows(const Eigen::VectorXd& g) const {
  Eigen::VectorXd h = Eigen::VectorXd::Zero(row_norm_.size());
  for (Index k = 0; k < g.size(); ++k) {
    const Index r = problem_.coord_row[k];
    if (r < 0) continue;
    const Index gr = grow_of_row_[r];
    h(gr) += problem_.coord_value(k) * g(k) / row_norm_(gr);
  }
  return h;
}

Eigen::VectorXd AffineProjector::spread(const Eigen::VectorXd& h) const {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(problem_.coord_value.size());
  for (Index k = 0; k < g.size(); ++k) {
    const Index r = problem_.coord_row[k];
    if (r < 0) continue;
    const Index gr = grow_of_row_[r];
    g(k) = problem_.coord_value(k) * h(gr) / row_norm_(gr);
  }
  return g;
}

Eigen::VectorXd AffineProjector::project_untraced(const Eigen::VectorXd& g) const {
  const Eigen::VectorXd d = normalized_rows(g) - h0_;
  return g - spread(d - Q_ * (Q_.transpose() * d));
}

Eigen::VectorXd AffineProjector::project(const Eigen::VectorXd& g) const {
  Eigen::VectorXd out = project_untraced(g);
  if (problem_.normalize_trace && k_norm2_ > 0) {
    double trace = 0;
    for (Index i = 0; i < problem_.n; ++i) trace += out(svec_index(i, i));
    out += (1 - trace) / k_norm2_ * K_;
  }
  return out;
}

Eigen::VectorXd AffineProjector::recover_free(const Eigen::VectorXd& g) const {
  Eigen::VectorXd z = z0_;
  if (null_.cols() > 0 && row_norm_.size() > 0) z += null_ * tqr_.solve(Eigen::VectorXd(normalized_rows(g) - h0_));
  return z;
}

double AffineProjector::residual(const Eigen::VectorXd& g, const Eigen::VectorXd& z) const {
  Eigen::VectorXd r = -problem_.rhs;
  if (problem_.num_free() > 0) r -= problem_.free_coeffs * z;
  for (Index k = 0; k < g.size(); ++k)
    if (problem_.coord_row[k] >= 0) r(problem_.coord_row[k]) += problem_.coord_value(k) * g(k);
  double worst = r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
  if (problem_.normalize_trace) {
    double trace = 0;
    for (Index i = 0; i < problem_.n; ++i) trace += g(svec_index(i, i));
    worst = std::max(worst, std::abs(trace - 1));
  }
  return worst;
}

Eigen::MatrixXd project_affine(const SdpProblem& problem, const Eigen::MatrixXd& S) {
  AffineProjector P(problem);
  if (!P.consistent()) throw std::domain_error("project_affine: inconsistent affine system");
  return smat(P.project(svec(S)), problem.n);
}

const char* to_string(FeasibilityStatus s) {
  switch (s) {
    case FeasibilityStatus::Feasible: return "Feasible";
    case FeasibilityStatus::LikelyInfeasible: return "LikelyInfeasible";
    case FeasibilityStatus::MaxIterations: return "MaxIterations";
  }
  return "?";
}

FeasibilityResult solve_feasibility(const SdpProblem& problem, const SolverOptions& options) {
  if (options.tol <= 0) throw std::invalid_argument("solve_feasibility: tol must be positive");
  FeasibilityResult result;
  const Index n = problem.n;
  AffineProjector P(problem);
  if (!P.consistent() || n == 0) {
    result.status = FeasibilityStatus::LikelyInfeasible;
    result.affine_inconsistent = true;
    result.gap = std::numeric_limits<double>::infinity();
    return result;
  }
  Eigen::VectorXd x = svec(Eigen::MatrixXd::Identity(n, n) / static_cast<double>(n));
  JacobiEigenSolver eig;
  std::vector<double> gaps;
  for (int it = 1; it <= options.max_iter; ++it) {
    const Eigen::VectorXd a = P.project(x);
    const Eigen::MatrixXd A = smat(a, n);
    eig.compute(A, true);
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    const double gap = lambda.cwiseMin(0.0).norm();
    gaps.push_back(gap);
    result.iterations = it;
    result.gap = gap;
    result.min_eigenvalue = lambda(0);
    if (lambda(0) >= -options.tol) {
      result.status = FeasibilityStatus::Feasible;
      result.G = A;
      result.z = P.recover_free(a);
      result.affine_residual = P.residual(a, result.z);
      break;
    }
    if (it > options.stall_window && gap > 10 * options.tol) {
      const double before = gaps[it - 1 - options.stall_window];
      if (before - gap <= options.stall_rel_change * before) {
        result.status = FeasibilityStatus::LikelyInfeasible;
        break;
      }
    }
    const auto& V = eig.eigenvectors();
    x = svec(V * lambda.cwiseMax(0.0).asDiagonal() * V.transpose());
  }
  if (result.status != FeasibilityStatus::Feasible) {
    result.G = smat(P.project(x), n);
    result.z = P.recover_free(svec(result.G));
    result.affine_residual = P.residual(svec(result.G), result.z);
  }
  if (options.record_history) result.history = std::move(gaps);
  return result;
}

}  // namespace ncreal
