#include "ncreal/factorization.hpp"

#include <map>
#include <stdexcept>

#include "ncreal/exact_linalg.hpp"

namespace ncreal {
namespace {

void require_homogeneous_nonconstant(const Polynomial& p, const char* who) {
  if (p.is_zero() || p.is_constant()) throw std::invalid_argument(std::string(who) + ": zero or constant input");
  if (!p.is_homogeneous()) throw std::invalid_argument(std::string(who) + ": polynomial is not homogeneous");
}

/// The nonzero rows and columns of the (d1, d - d1)-Gram matrix.
struct CompactGram {
  std::vector<Word> rows;  // row words r (entries are coefficients of r* c)
  std::vector<Word> cols;
  RationalMatrix entries;
};

CompactGram compact_gram(const Polynomial& p, int d1) {
  const int d2 = p.degree() - d1;
  std::map<Word, Index, StandardWordLess> row_index, col_index;
  CompactGram G;
  for (const auto& [w, c] : p.terms()) {
    Word r = star(w.prefix(d1));
    Word s = w.suffix(d2);
    if (row_index.try_emplace(r, static_cast<Index>(G.rows.size())).second) G.rows.push_back(r);
    if (col_index.try_emplace(s, static_cast<Index>(G.cols.size())).second) G.cols.push_back(s);
  }
  G.entries = RationalMatrix::Zero(static_cast<Index>(G.rows.size()), static_cast<Index>(G.cols.size()));
  for (const auto& [w, c] : p.terms())
    G.entries(row_index.at(star(w.prefix(d1))), col_index.at(w.suffix(d2))) = c;
  return G;
}

}  // namespace

Polynomial expand(const Factorization& f, int num_vars) { return f.scalar * product(f.factors, num_vars); }

std::optional<std::pair<Polynomial, Polynomial>> rank_one_split(const Polynomial& p, int d1) {
  require_homogeneous_nonconstant(p, "rank_one_split");
  if (d1 < 1 || d1 >= p.degree()) throw std::invalid_argument("rank_one_split: d1 out of range");
  const CompactGram G = compact_gram(p, d1);
  if (rank(G.entries) != 1) return std::nullopt;
  // Row 0 and column 0 are nonzero by construction.
  const Index r = 0;
  Index c = 0;
  while (G.entries(r, c) == 0) ++c;
  const int g = p.num_vars();
  Polynomial p1(g), p2(g);
  for (Index i = 0; i < G.entries.rows(); ++i)
    p1.add_term(star(G.rows[i]), G.entries(i, c) / G.entries(r, c));
  for (Index j = 0; j < G.entries.cols(); ++j) p2.add_term(G.cols[j], G.entries(r, j));
  return std::make_pair(std::move(p1), std::move(p2));
}

Factorization factor_homogeneous(const Polynomial& p, const MonomialOrder& order) {
  require_homogeneous_nonconstant(p, "factor_homogeneous");
  Factorization out;
  Polynomial rest = p;
  while (true) {
    std::optional<std::pair<Polynomial, Polynomial>> split;
    for (int d1 = 1; d1 < rest.degree() && !split; ++d1) split = rank_one_split(rest, d1);
    if (!split) break;
    const Rational lc = split->first.leading_coefficient(order);
    out.factors.push_back(split->first * Rational(1 / lc));
    rest = lc * split->second;
  }
  const Rational lc = rest.leading_coefficient(order);
  out.factors.push_back(rest * Rational(1 / lc));
  out.scalar = lc;
  return out;
}

bool is_irreducible_homogeneous(const Polynomial& p) {
  require_homogeneous_nonconstant(p, "is_irreducible_homogeneous");
  for (int d1 = 1; d1 < p.degree(); ++d1)
    if (rank_one_split(p, d1)) return false;
  return true;
}

std::optional<Rational> scalar_multiple_of(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero() || p.is_zero() || p.size() != q.size()) return std::nullopt;
  const Word& lead = q.leading_word();
  const Rational lambda = p.coefficient(lead) / q.leading_coefficient();
  if (lambda == 0 || !(p == lambda * q)) return std::nullopt;
  return lambda;
}

std::string to_string(const Factorization& f) {
  std::string out = to_string(f.scalar) + " ·";
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    out += i == 0 ? " (" : "·(";
    out += to_string(f.factors[i]) + ")";
  }
  return out;
}

}  // namespace ncreal
