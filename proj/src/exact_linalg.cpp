#include "ncreal/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ncreal {

Index rank(const RationalMatrix& A) {
  // Integer rows after clearing denominators; zero rows dropped.
  std::vector<std::vector<Integer>> rows;
  for (Index i = 0; i < A.rows(); ++i) {
    Integer lcm(1);
    bool nonzero = false;
    for (Index j = 0; j < A.cols(); ++j) {
      if (A(i, j) == 0) continue;
      nonzero = true;
      Integer den = boost::multiprecision::denominator(A(i, j));
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    if (!nonzero) continue;
    std::vector<Integer> row(A.cols());
    for (Index j = 0; j < A.cols(); ++j)
      row[j] = boost::multiprecision::numerator(A(i, j)) * (lcm / boost::multiprecision::denominator(A(i, j)));
    rows.push_back(std::move(row));
  }
  const Index m = static_cast<Index>(rows.size());
  const Index n = A.cols();
  Index r = 0;
  Integer prev(1);
  for (Index col = 0; col < n && r < m; ++col) {
    Index pivot = r;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[r], rows[pivot]);
    for (Index i = r + 1; i < m; ++i) {
      for (Index j = col + 1; j < n; ++j)
        rows[i][j] = (rows[r][col] * rows[i][j] - rows[i][col] * rows[r][j]) / prev;
      rows[i][col] = 0;
    }
    prev = rows[r][col];
    ++r;
  }
  return r;
}

bool is_symmetric(const RationalMatrix& A) {
  if (A.rows() != A.cols()) return false;
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < i; ++j)
      if (A(i, j) != A(j, i)) return false;
  return true;
}

Rational quadratic_form(const RationalMatrix& A, const RationalVector& c) {
  Rational s(0);
  for (Index i = 0; i < A.rows(); ++i) {
    if (c(i) == 0) continue;
    Rational row(0);
    for (Index j = 0; j < A.cols(); ++j)
      if (c(j) != 0 && A(i, j) != 0) row += A(i, j) * c(j);
    s += c(i) * row;
  }
  return s;
}

RationalLdlt& RationalLdlt::compute(const RationalMatrix& A) {
  if (!is_symmetric(A)) throw std::invalid_argument("RationalLdlt: matrix must be square and symmetric");
  const Index n = A.rows();
  RationalMatrix W = A;
  L_ = RationalMatrix::Identity(n, n);
  D_ = RationalVector::Zero(n);
  perm_.resize(n);
  for (Index i = 0; i < n; ++i) perm_[i] = i;
  witness_.resize(0);
  positive_ = true;

  auto swap_index = [&](Index a, Index b) {
    if (a == b) return;
    W.row(a).swap(W.row(b));
    W.col(a).swap(W.col(b));
    for (Index c = 0; c < a; ++c) std::swap(L_(a, c), L_(b, c));
    std::swap(perm_[a], perm_[b]);
  };

  // y lives on the trailing block k..n-1 of the permuted coordinates.
  auto set_witness = [&](Index k, const RationalVector& y) {
    RationalVector x = RationalVector::Zero(n);
    x.tail(n - k) = y;
    // Solve L11^T z = -L21^T y, back substitution.
    for (Index i = k - 1; i >= 0; --i) {
      Rational s(0);
      for (Index r = k; r < n; ++r) s -= L_(r, i) * y(r - k);
      for (Index r = i + 1; r < k; ++r) s -= L_(r, i) * x(r);
      x(i) = s;
    }
    witness_ = RationalVector::Zero(n);
    for (Index i = 0; i < n; ++i) witness_(perm_[i]) = x(i);
    positive_ = false;
    steps_ = k;
  };

  for (Index k = 0; k < n; ++k) {
    Index best = k;
    for (Index i = k; i < n; ++i) {
      if (W(i, i) < 0) {
        RationalVector y = RationalVector::Zero(n - k);
        y(i - k) = 1;
        set_witness(k, y);
        return *this;
      }
      if (W(i, i) > W(best, best)) best = i;
    }
    if (W(best, best) == 0) {
      for (Index i = k; i < n; ++i)
        for (Index j = k; j < i; ++j)
          if (W(i, j) != 0) {
            RationalVector y = RationalVector::Zero(n - k);
            y(i - k) = 1;
            y(j - k) = W(i, j) > 0 ? -1 : 1;
            set_witness(k, y);
            return *this;
          }
      steps_ = n;
      return *this;
    }
    swap_index(k, best);
    const Rational pivot = W(k, k);
    D_(k) = pivot;
    for (Index i = k + 1; i < n; ++i) L_(i, k) = W(i, k) / pivot;
    for (Index i = k + 1; i < n; ++i) {
      if (L_(i, k) == 0) continue;
      for (Index j = k + 1; j <= i; ++j) {
        W(i, j) -= L_(i, k) * W(k, j);
        W(j, i) = W(i, j);
      }
    }
  }
  steps_ = n;
  return *this;
}

RationalMatrix RationalLdlt::reconstruct() const {
  const Index n = L_.rows();
  RationalMatrix LD = L_;
  for (Index k = 0; k < n; ++k) LD.col(k) *= D_(k);
  RationalMatrix B = LD * L_.transpose();
  RationalMatrix out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out(perm_[i], perm_[j]) = B(i, j);
  return out;
}

}  // namespace ncreal
