#include "ncreal/real_sdp.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ncreal/exact_linalg.hpp"

namespace ncreal {

using Eigen::Index;

namespace {

Word class_representative(const Word& w) {
  Word s = star(w);
  return StandardWordLess()(s, w) ? s : w;
}

/// Nearest multiple of 2^-bits relative to the magnitude of x.
Rational round_dyadic(double x, int bits = 40) {
  if (x == 0) return Rational(0);
  int exponent = 0;
  std::frexp(x, &exponent);
  const int shift = bits - exponent;
  const double scaled = std::ldexp(x, shift);
  Integer num(static_cast<long long>(std::llround(scaled)));
  Integer den(1);
  Integer two(2);
  if (shift >= 0) {
    den = boost::multiprecision::pow(two, static_cast<unsigned>(shift));
  } else {
    num *= boost::multiprecision::pow(two, static_cast<unsigned>(-shift));
  }
  return Rational(num, den);
}

}  // namespace

RealSdp build_real_sdp(const LeftGroebnerBasis& B) {
  if (B.empty()) throw std::invalid_argument("build_real_sdp: empty basis");
  RealSdp sdp;
  sdp.basis = B;
  const int g = B.num_vars;
  sdp.d = B.max_degree();
  for (const Word& w : words_below_degree(g, sdp.d))
    if (is_standard(w, B)) sdp.gram_basis.push_back(w);
  const Index n = static_cast<Index>(sdp.gram_basis.size());

  std::map<Word, Index, StandardWordLess> row_of;
  auto row = [&](const Word& w) {
    Word rep = class_representative(w);
    auto [it, inserted] = row_of.try_emplace(rep, static_cast<Index>(sdp.row_words.size()));
    if (inserted) {
      sdp.row_words.push_back(rep);
      sdp.free_exact.emplace_back();
    }
    return it->second;
  };

  SdpProblem& P = sdp.problem;
  P.n = n;
  const Index N = svec_size(n);
  P.coord_row.assign(N, -1);
  P.coord_value = Eigen::VectorXd::Zero(N);
  sdp.coord_exact.assign(N, Rational(0));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i <= j; ++i) {
      const Word u = star(sdp.gram_basis[i]) * sdp.gram_basis[j];
      const bool symmetric = u == star(u);
      const Index k = svec_index(i, j);
      P.coord_row[k] = row(u);
      if (i == j) {
        sdp.coord_exact[k] = 1;
        P.coord_value(k) = 1;
      } else {
        sdp.coord_exact[k] = symmetric ? 2 : 1;
        P.coord_value(k) = symmetric ? M_SQRT2 : 1 / M_SQRT2;
      }
    }

  Index m = 0;
  for (const auto& p : B.polys) {
    sdp.free_offset.push_back(m);
    std::vector<Word> words;
    const int e = 2 * sdp.d - 1 - p.degree();
    if (e >= 0) words = words_up_to_degree(g, e);
    for (std::size_t i = 0; i < words.size(); ++i) {
      const Word& v = words[i];
      for (const auto& [u, c] : p.terms()) {
        const Word t = v * u;
        const Rational coeff = t == star(t) ? Rational(2 * c) : c;
        auto& entry = sdp.free_exact[row(t)][m + static_cast<Index>(i)];
        entry += coeff;
      }
      P.free_labels.push_back("q" + std::to_string(sdp.multiplier_words.size() + 1) + ":" + to_string(v));
    }
    m += static_cast<Index>(words.size());
    sdp.multiplier_words.push_back(std::move(words));
  }

  const Index R = static_cast<Index>(sdp.row_words.size());
  P.free_coeffs = Eigen::MatrixXd::Zero(R, m);
  for (Index r = 0; r < R; ++r)
    for (const auto& [col, c] : sdp.free_exact[r]) P.free_coeffs(r, col) = c.convert_to<double>();
  P.rhs = Eigen::VectorXd::Zero(R);
  P.normalize_trace = true;
  return sdp;
}

NonRealCertificate certificate_from_solution(const RealSdp& sdp, const FeasibilityResult& solution, double drop_tol) {
  const int g = sdp.basis.num_vars;
  const Index n = sdp.problem.n;
  JacobiEigenSolver eig(solution.G);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const Eigen::MatrixXd& V = eig.eigenvectors();
  const Eigen::MatrixXd clipped = V * lambda.cwiseMax(0.0).asDiagonal() * V.transpose();

  NonRealCertificate cert;
  cert.exactness = Exactness::Numeric;
  for (Index k = 0; k < n; ++k) {
    if (lambda(k) <= drop_tol) continue;
    Polynomial r(g);
    for (Index i = 0; i < n; ++i) r.add_term(sdp.gram_basis[i], round_dyadic(V(i, k)));
    cert.sos.weights.push_back(round_dyadic(lambda(k)));
    cert.sos.polys.push_back(std::move(r));
  }
  AffineProjector projector(sdp.problem);
  const Eigen::VectorXd z = projector.recover_free(svec(clipped));
  for (std::size_t j = 0; j < sdp.multiplier_words.size(); ++j) {
    Polynomial q(g);
    for (std::size_t i = 0; i < sdp.multiplier_words[j].size(); ++i)
      q.add_term(sdp.multiplier_words[j][i], round_dyadic(z(sdp.free_offset[j] + static_cast<Index>(i))));
    cert.multipliers.push_back(std::move(q));
  }
  return cert;
}

namespace {

using SparseRow = std::map<Index, Rational>;

/// Incremental Gauss-Jordan elimination over the rationals. Pivots prefer the
/// smallest variable index; every stored row is reduced against all others.
class Eliminator {
 public:
  /// False if the row made the system inconsistent.
  bool add(SparseRow row, Rational rhs) {
    std::vector<Index> hit;
    for (const auto& [v, c] : row)
      if (pivots_.count(v)) hit.push_back(v);
    for (Index v : hit) {
      const Rational c = row[v];
      const auto& [prow, prhs] = pivots_.at(v);
      axpy(row, -c, prow);
      rhs -= c * prhs;
    }
    if (row.empty()) return rhs == 0;
    const Index pv = row.begin()->first;
    const Rational inv = 1 / row.begin()->second;
    for (auto& [v, c] : row) c *= inv;
    rhs *= inv;
    // Eliminate pv from the other pivot rows.
    if (auto occ = occurrences_.find(pv); occ != occurrences_.end()) {
      const std::set<Index> owners = occ->second;
      for (Index owner : owners) {
        auto& [orow, orhs] = pivots_.at(owner);
        const Rational c = orow.at(pv);
        for (const auto& [v, x] : row) {
          auto [it, inserted] = orow.try_emplace(v, -c * x);
          if (inserted) {
            occurrences_[v].insert(owner);
          } else {
            it->second -= c * x;
            if (it->second == 0) {
              orow.erase(it);
              if (v != pv) occurrences_[v].erase(owner);
            }
          }
        }
        orhs -= c * rhs;
      }
    }
    for (const auto& [v, _] : row)
      if (v != pv) occurrences_[v].insert(pv);
    occurrences_.erase(pv);
    pivots_.emplace(pv, std::make_pair(std::move(row), std::move(rhs)));
    return true;
  }

  const std::map<Index, std::pair<SparseRow, Rational>>& pivots() const { return pivots_; }

 private:
  static void axpy(SparseRow& y, const Rational& a, const SparseRow& x) {
    for (const auto& [v, c] : x) {
      auto [it, inserted] = y.try_emplace(v, a * c);
      if (!inserted) {
        it->second += a * c;
        if (it->second == 0) y.erase(it);
      }
    }
  }

  std::map<Index, std::pair<SparseRow, Rational>> pivots_;
  std::map<Index, std::set<Index>> occurrences_;
};

/// Constraint rows of the SDP (z variables 0..m-1, then plain G(i, j) at
/// m + svec_index(i, j)) and tr(G) = 1. `trace_ok` is false when the trace
/// row is inconsistent with the rest.
bool eliminate_constraints(const RealSdp& sdp, Eliminator& elim, bool& trace_ok) {
  const Index n = sdp.problem.n;
  const Index N = svec_size(n);
  const Index m = sdp.problem.num_free();
  const Index R = static_cast<Index>(sdp.row_words.size());
  std::vector<SparseRow> rows(R);
  for (Index k = 0; k < N; ++k) rows[sdp.problem.coord_row[k]][m + k] += sdp.coord_exact[k];
  for (Index r = 0; r < R; ++r)
    for (const auto& [col, c] : sdp.free_exact[r]) rows[r][col] -= c;
  for (Index r = 0; r < R; ++r) {
    SparseRow row;
    for (auto& [v, c] : rows[r])
      if (c != 0) row.emplace(v, c);
    if (!elim.add(std::move(row), Rational(0))) return false;
  }
  SparseRow trace;
  for (Index i = 0; i < n; ++i) trace.emplace(m + svec_index(i, i), Rational(1));
  trace_ok = elim.add(std::move(trace), Rational(1));
  return true;
}

Rational round_to(double x, const Integer& den) {
  return Rational(Integer(static_cast<long long>(std::llround(x * den.convert_to<double>()))), den);
}

/// Best rational approximation with denominator <= max_den, if within tol.
std::optional<Rational> small_fraction(double x, long long max_den, double tol) {
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int step = 0; step < 64; ++step) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e12) break;
    const long long ai = static_cast<long long>(a);
    const long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol) return Rational(h1, k1);
    const double frac = r - a;
    if (frac < 1e-15) break;
    r = 1 / frac;
  }
  return std::nullopt;
}

/// Rational basis of the numeric kernel of G, in reduced row echelon form.
/// The kernel dimension sits at the largest relative gap among the small
/// eigenvalues; empty when there is no clear gap or rationalization fails.
std::vector<std::vector<Rational>> rational_kernel(const Eigen::MatrixXd& G, double tol) {
  const Index n = G.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double top = std::max(ev(n - 1), 1e-300);
  Index k = 0;
  double best = 1e3;
  for (Index i = 0; i + 1 < n; ++i) {
    if (ev(i) > 1e-4 * top) break;
    const double ratio = ev(i + 1) / std::max(std::abs(ev(i)), 1e-16 * top);
    if (ratio > best) best = ratio, k = i + 1;
  }
  if (k == 0) return {};
  Eigen::MatrixXd K = es.eigenvectors().leftCols(k).transpose();
  // Gauss-Jordan with partial pivoting across columns.
  std::vector<Index> pivot_cols;
  Index row = 0;
  for (Index c = 0; c < n && row < k; ++c) {
    Index p;
    if (K.col(c).tail(k - row).cwiseAbs().maxCoeff(&p) < 1e-6) continue;
    p += row;
    K.row(row).swap(K.row(p));
    K.row(row) /= K(row, c);
    for (Index r = 0; r < k; ++r)
      if (r != row) K.row(r) -= K(r, c) * K.row(row);
    pivot_cols.push_back(c);
    ++row;
  }
  if (row < k) return {};
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(k), std::vector<Rational>(n));
  for (Index r = 0; r < k; ++r)
    for (Index c = 0; c < n; ++c) {
      const auto q = small_fraction(K(r, c), 1000, tol);
      if (!q) return {};
      out[r][c] = *q;
    }
  return out;
}

}  // namespace

std::optional<NonRealCertificate> exact_certificate_from_solution(const RealSdp& sdp, const Eigen::MatrixXd& G,
                                                                  std::size_t max_vars) {
  const int g = sdp.basis.num_vars;
  const Index n = sdp.problem.n;
  const Index N = svec_size(n);
  const Index m = sdp.problem.num_free();
  if (static_cast<std::size_t>(N + m) > max_vars || G.rows() != n || G.cols() != n || !G.allFinite())
    return std::nullopt;
  Eliminator elim;
  bool trace_ok = false;
  if (!eliminate_constraints(sdp, elim, trace_ok) || !trace_ok) return std::nullopt;

  std::vector<Polynomial> basis;
  for (const auto& w : sdp.gram_basis) basis.emplace_back(g, w);
  auto attempt = [&](const Eliminator& e) -> std::optional<NonRealCertificate> {
    for (int bits : {10, 20, 30}) {
      const Integer den = boost::multiprecision::pow(Integer(2), static_cast<unsigned>(bits));
      // Free unknowns take rounded values (z = 0), pivots are solved for.
      std::vector<Rational> value(static_cast<std::size_t>(N + m), Rational(0));
      for (Index j = 0; j < n; ++j)
        for (Index i = 0; i <= j; ++i)
          if (!e.pivots().count(m + svec_index(i, j))) value[m + svec_index(i, j)] = round_to(G(i, j), den);
      for (const auto& [pv, entry] : e.pivots()) {
        Rational x = entry.second;
        for (const auto& [v, c] : entry.first)
          if (v != pv) x -= c * value[v];
        value[pv] = x;
      }
      RationalMatrix Gr(n, n);
      for (Index j = 0; j < n; ++j)
        for (Index i = 0; i <= j; ++i) Gr(i, j) = Gr(j, i) = value[m + svec_index(i, j)];
      const RationalLdlt ldlt(Gr);
      if (!ldlt.isPositive()) continue;
      NonRealCertificate cert;
      cert.exactness = Exactness::Exact;
      cert.sos = certificate_from_ldlt(ldlt, basis);
      for (std::size_t j = 0; j < sdp.multiplier_words.size(); ++j) {
        Polynomial q(g);
        for (std::size_t i = 0; i < sdp.multiplier_words[j].size(); ++i)
          q.add_term(sdp.multiplier_words[j][i], value[sdp.free_offset[j] + static_cast<Index>(i)]);
        cert.multipliers.push_back(std::move(q));
      }
      return cert;
    }
    return std::nullopt;
  };
  if (auto cert = attempt(elim)) return cert;

  // Boundary solutions: pin G to the face given by its numeric kernel.
  for (double tol : {1e-6, 1e-4, 1e-3, 1e-2, 3e-2, 1e-1}) {
    const auto kernel = rational_kernel(G, tol);
    if (kernel.empty()) continue;
    Eliminator face = elim;
    bool consistent = true;
    for (const auto& v : kernel)
      for (Index i = 0; i < n && consistent; ++i) {
        SparseRow row;
        for (Index j = 0; j < n; ++j)
          if (v[j] != 0) row[m + svec_index(std::min(i, j), std::max(i, j))] += v[j];
        consistent = face.add(std::move(row), Rational(0));
      }
    if (!consistent) continue;
    if (auto cert = attempt(face)) return cert;
  }
  return std::nullopt;
}

ExactInfeasibility exact_infeasibility_check(const RealSdp& sdp, std::size_t max_vars) {
  ExactInfeasibility out;
  const Index n = sdp.problem.n;
  const Index N = svec_size(n);
  const Index m = sdp.problem.num_free();
  if (static_cast<std::size_t>(N + m) > max_vars) {
    out.reason = "skipped: " + std::to_string(N + m) + " unknowns exceed the limit";
    return out;
  }
  out.attempted = true;
  std::vector<Index> ci(N), cj(N);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i <= j; ++i) {
      ci[svec_index(i, j)] = i;
      cj[svec_index(i, j)] = j;
    }
  auto gvar = [&](Index i, Index j) { return m + svec_index(i, j); };
  auto name = [&](Index var) {
    const Index k = var - m;
    return "G(" + to_string(sdp.gram_basis[ci[k]]) + ", " + to_string(sdp.gram_basis[cj[k]]) + ")";
  };

  Eliminator elim;
  bool trace_ok = false;
  if (!eliminate_constraints(sdp, elim, trace_ok)) {
    out.proven = true;
    out.reason = "linear constraints are inconsistent";
    return out;
  }
  if (!trace_ok) {
    out.proven = true;
    out.reason = "the constraints force tr(G) = 0";
    return out;
  }

  std::set<Index> zero_diag;
  while (true) {
    std::vector<Index> new_zero;
    for (const auto& [pv, entry] : elim.pivots()) {
      const auto& [row, rhs] = entry;
      if (pv < m) continue;
      bool diagonal_nonnegative = true;
      for (const auto& [v, c] : row) {
        const Index k = v - m;
        if (v < m || ci[k] != cj[k] || c < 0) {
          diagonal_nonnegative = false;
          break;
        }
      }
      if (!diagonal_nonnegative) continue;
      if (rhs < 0) {
        out.proven = true;
        out.reason = row.size() == 1 ? name(pv) + " forced to " + to_string(rhs)
                                     : "a nonnegative combination of diagonal entries is forced to " + to_string(rhs);
        return out;
      }
      if (rhs == 0)
        for (const auto& [v, c] : row)
          if (zero_diag.insert(ci[v - m]).second) new_zero.push_back(ci[v - m]);
    }
    for (Index i : new_zero)
      for (Index j = 0; j < n; ++j) {
        if (i == j) continue;
        SparseRow row;
        row.emplace(gvar(i, j), Rational(1));
        if (!elim.add(std::move(row), Rational(0))) {
          out.proven = true;
          out.reason = "zero diagonal entries make the constraints inconsistent";
          return out;
        }
      }
    if (new_zero.empty()) break;
  }

  // Principal 2x2 minors whose entries are all fixed.
  std::map<Index, Rational> fixed;
  for (const auto& [pv, entry] : elim.pivots())
    if (pv >= m && entry.first.size() == 1) fixed.emplace(pv, entry.second);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < j; ++i) {
      auto a = fixed.find(gvar(i, i)), b = fixed.find(gvar(j, j)), c = fixed.find(gvar(i, j));
      if (a == fixed.end() || b == fixed.end() || c == fixed.end()) continue;
      if (a->second * b->second < c->second * c->second) {
        out.proven = true;
        out.reason = "fixed 2x2 principal minor at (" + to_string(sdp.gram_basis[i]) + ", " +
                     to_string(sdp.gram_basis[j]) + ") is negative";
        return out;
      }
    }
  out.reason = "no exact obstruction found";
  return out;
}

}  // namespace ncreal
