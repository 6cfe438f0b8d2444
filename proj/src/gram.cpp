#include "ncreal/gram.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace ncreal {

GramMatrix gram_matrix(const Polynomial& p, int d1, int d2) {
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("gram_matrix: negative degree");
  if (!p.is_zero()) {
    if (!p.is_homogeneous()) throw std::invalid_argument("gram_matrix: polynomial is not homogeneous");
    if (p.degree() != d1 + d2) throw std::invalid_argument("gram_matrix: d1 + d2 differs from deg p");
  }
  const int g = p.num_vars();
  GramMatrix G;
  G.num_vars = g;
  G.row_basis = words_of_degree(g, d1);
  G.col_basis = words_of_degree(g, d2);
  G.entries = RationalMatrix::Zero(static_cast<Index>(G.row_basis.size()), static_cast<Index>(G.col_basis.size()));
  for (const auto& [w, c] : p.terms()) {
    const Index i = static_cast<Index>(canonical_index(star(w.prefix(d1)), g));
    const Index j = static_cast<Index>(canonical_index(w.suffix(d2), g));
    G.entries(i, j) = c;
  }
  return G;
}

Polynomial expand(const GramMatrix& G) {
  Polynomial out(G.num_vars);
  for (Index i = 0; i < G.entries.rows(); ++i) {
    const Word left = star(G.row_basis[i]);
    for (Index j = 0; j < G.entries.cols(); ++j)
      if (G.entries(i, j) != 0) out.add_term(left * G.col_basis[j], G.entries(i, j));
  }
  return out;
}

Polynomial expand(const SosCertificate& cert, int num_vars) {
  Polynomial out(num_vars);
  for (std::size_t k = 0; k < cert.polys.size(); ++k) out += cert.weights[k] * (star(cert.polys[k]) * cert.polys[k]);
  return out;
}

bool well_formed(const SosCertificate& cert) {
  if (cert.weights.size() != cert.polys.size()) return false;
  for (const auto& w : cert.weights)
    if (w <= 0) return false;
  return true;
}

SosCertificate certificate_from_ldlt(const RationalLdlt& ldlt, const std::vector<Polynomial>& basis) {
  SosCertificate cert;
  const auto& L = ldlt.matrixL();
  const auto& D = ldlt.vectorD();
  const auto& perm = ldlt.permutation();
  if (basis.empty()) return cert;
  for (Index k = 0; k < D.size(); ++k) {
    if (D(k) == 0) continue;
    Polynomial r(basis.front().num_vars());
    for (Index i = k; i < L.rows(); ++i)
      if (L(i, k) != 0) r += L(i, k) * basis[perm[i]];
    cert.weights.push_back(D(k));
    cert.polys.push_back(std::move(r));
  }
  return cert;
}

SosResult is_sos_homogeneous(const Polynomial& p) {
  if (!p.is_homogeneous()) throw std::invalid_argument("is_sos_homogeneous: polynomial is not homogeneous");
  SosResult result;
  if (p.is_zero()) {
    result.is_sos = true;
    return result;
  }
  if (p.degree() % 2 != 0 || !p.is_symmetric()) return result;
  const int d = p.degree() / 2;
  const GramMatrix G = gram_matrix(p, d, d);
  const Index n = G.entries.rows();

  // Only rows with a nonzero entry matter; the rest of the Gram matrix is 0.
  std::vector<Index> active;
  for (Index i = 0; i < n; ++i) {
    bool nonzero = false;
    for (Index j = 0; j < n && !nonzero; ++j) nonzero = G.entries(i, j) != 0;
    if (nonzero) active.push_back(i);
  }
  const Index m = static_cast<Index>(active.size());
  RationalMatrix A(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) A(i, j) = G.entries(active[i], active[j]);
  RationalLdlt ldlt(A);
  if (!ldlt.isPositive()) {
    result.witness = RationalVector::Zero(n);
    for (Index i = 0; i < m; ++i) result.witness(active[i]) = ldlt.witness()(i);
    return result;
  }
  std::vector<Polynomial> basis;
  for (Index i : active) basis.emplace_back(p.num_vars(), G.row_basis[i]);
  result.is_sos = true;
  result.certificate = certificate_from_ldlt(ldlt, basis);
  return result;
}

const char* to_string(PmSos k) {
  switch (k) {
    case PmSos::Plus: return "plus";
    case PmSos::Minus: return "minus";
    case PmSos::Neither: return "neither";
    case PmSos::Zero: return "zero";
  }
  return "?";
}

PmSosResult is_pm_sos_nonzero(const Polynomial& p) {
  PmSosResult out;
  if (p.is_zero()) {
    out.kind = PmSos::Zero;
    return out;
  }
  if (auto plus = is_sos_homogeneous(p); plus.is_sos) {
    out.kind = PmSos::Plus;
    out.certificate = std::move(plus.certificate);
  } else if (auto minus = is_sos_homogeneous(-p); minus.is_sos) {
    out.kind = PmSos::Minus;
    out.certificate = std::move(minus.certificate);
  }
  return out;
}

Polynomial to_polynomial(const SymmetricQuadratic& a, int num_vars) {
  const Letter X = x(1), Xs = xs(1);
  Polynomial p(num_vars);
  p.add_term(Word{}, a[0]);
  p.add_term(Word{X}, a[1]);
  p.add_term(Word{Xs}, a[1]);
  p.add_term(Word{X, X}, a[2]);
  p.add_term(Word{Xs, Xs}, a[2]);
  p.add_term(Word{X, Xs}, a[3]);
  p.add_term(Word{Xs, X}, a[4]);
  return p;
}

std::optional<SymmetricQuadratic> symmetric_quadratic_coefficients(const Polynomial& p) {
  for (const auto& [w, c] : p.terms())
    if (w.degree() > 2 || w.max_var() > 1) return std::nullopt;
  const Letter X = x(1), Xs = xs(1);
  SymmetricQuadratic a{p.coefficient(Word{}), p.coefficient(Word{X}), p.coefficient(Word{X, X}),
                       p.coefficient(Word{X, Xs}), p.coefficient(Word{Xs, X})};
  if (p.coefficient(Word{Xs}) != a[1] || p.coefficient(Word{Xs, Xs}) != a[2]) return std::nullopt;
  return a;
}

bool sos_quadratic_univariate(const SymmetricQuadratic& a) {
  const Rational S = 2 * a[2] + a[3] + a[4];
  const bool block_psd = a[3] >= 0 && a[4] >= 0 && a[3] * a[4] - a[2] * a[2] >= 0;
  return a[0] >= 0 && block_psd && -a[1] * a[1] + a[0] * S >= 0;
}

std::optional<SosCertificate> sos_quadratic_certificate(const SymmetricQuadratic& a, int num_vars) {
  if (!sos_quadratic_univariate(a)) return std::nullopt;
  const Rational S = 2 * a[2] + a[3] + a[4];
  // p = c' + Q(x + m) where Q is the homogeneous part.
  Rational m(0), shift_constant = a[0];
  if (S != 0) {
    m = a[1] / S;
    shift_constant = (a[0] * S - a[1] * a[1]) / S;
  }
  RationalMatrix B(2, 2);
  B << a[4], a[2], a[2], a[3];
  RationalLdlt ldlt(B);
  const Polynomial one(num_vars, Rational(1));
  std::vector<Polynomial> basis{Polynomial::letter(num_vars, x(1)) + m * one,
                                Polynomial::letter(num_vars, xs(1)) + m * one};
  SosCertificate cert = certificate_from_ldlt(ldlt, basis);
  if (shift_constant != 0) {
    cert.weights.push_back(shift_constant);
    cert.polys.push_back(one);
  }
  return cert;
}

std::optional<std::vector<Eigen::Vector3d>> two_square_decomposition(const SymmetricQuadratic& a) {
  if (!sos_quadratic_univariate(a)) return std::nullopt;
  double c[5];
  for (int i = 0; i < 5; ++i) c[i] = a[i].convert_to<double>();
  auto gram = [&](double mu) {
    Eigen::Matrix3d G;
    G << c[0], mu, c[1] - mu, mu, c[4], c[2], c[1] - mu, c[2], c[3];
    return G;
  };
  // det G(mu) is quadratic in mu; recover it from three samples.
  const double f0 = gram(0).determinant(), fp = gram(1).determinant(), fm = gram(-1).determinant();
  const double qa = (fp + fm) / 2 - f0, qb = (fp - fm) / 2, qc = f0;
  std::vector<double> candidates;
  const double S = 2 * c[2] + c[3] + c[4];
  candidates.push_back(S != 0 ? c[1] / S * (c[4] + c[2]) : 0.0);
  const double scale = std::max({std::abs(qa), std::abs(qb), std::abs(qc), 1e-300});
  if (std::abs(qa) > 1e-14 * scale) {
    const double disc = qb * qb - 4 * qa * qc;
    if (disc >= -1e-12 * scale * scale) {
      const double r = std::sqrt(std::max(disc, 0.0));
      candidates.push_back((-qb + r) / (2 * qa));
      candidates.push_back((-qb - r) / (2 * qa));
    }
  } else if (std::abs(qb) > 1e-14 * scale) {
    candidates.push_back(-qc / qb);
  }
  const double norm = std::max(1.0, std::abs(c[0]) + std::abs(c[1]) + std::abs(c[2]) + std::abs(c[3]) + std::abs(c[4]));
  const double tol = 1e-9 * norm;
  for (double mu : candidates) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(gram(mu));
    const auto& vals = es.eigenvalues();
    if (vals(0) < -tol) continue;
    std::vector<Eigen::Vector3d> squares;
    for (int k = 2; k >= 0; --k)
      if (vals(k) > tol) squares.push_back(std::sqrt(vals(k)) * es.eigenvectors().col(k));
    if (squares.size() <= 2) return squares;
  }
  return std::nullopt;
}

}  // namespace ncreal
