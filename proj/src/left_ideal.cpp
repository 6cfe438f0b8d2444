#include "ncreal/left_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncreal {

int LeftGroebnerBasis::max_degree() const {
  int d = kZeroDegree;
  for (const auto& p : polys) d = std::max(d, p.degree());
  return d;
}

std::vector<Word> LeftGroebnerBasis::leading_words() const {
  std::vector<Word> out;
  for (const auto& p : polys) out.push_back(p.leading_word(order));
  return out;
}

namespace {

// Index pair (i, j) such that lead(p_j) = omega lead(p_i); i < j on ties.
bool find_reducible_pair(const std::vector<Word>& leads, std::size_t& i_out, std::size_t& j_out) {
  for (std::size_t j = 0; j < leads.size(); ++j)
    for (std::size_t i = 0; i < leads.size(); ++i) {
      if (i == j || !leads[j].ends_with(leads[i])) continue;
      if (leads[i] == leads[j] && i > j) continue;
      i_out = i;
      j_out = j;
      return true;
    }
  return false;
}

}  // namespace

LeftGroebnerBasis left_groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw std::invalid_argument("left_groebner: no generators");
  const int g = gens.front().num_vars();
  LeftGroebnerBasis B;
  B.num_vars = g;
  B.order = order;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].num_vars() != g) throw std::invalid_argument("left_groebner: generators over different variable counts");
    if (gens[k].is_zero()) continue;
    const Rational inv = 1 / gens[k].leading_coefficient(order);
    std::vector<Polynomial> cof(gens.size(), Polynomial(g));
    cof[k] = Polynomial(g, inv);
    B.polys.push_back(gens[k] * inv);
    B.cofactors.push_back(std::move(cof));
  }
  std::vector<Word> leads = B.leading_words();
  std::size_t i = 0, j = 0;
  while (find_reducible_pair(leads, i, j)) {
    const Polynomial omega(g, leads[j].prefix(leads[j].degree() - leads[i].degree()));
    Polynomial reduced = B.polys[j] - omega * B.polys[i];
    if (reduced.is_zero()) {
      B.polys.erase(B.polys.begin() + static_cast<std::ptrdiff_t>(j));
      B.cofactors.erase(B.cofactors.begin() + static_cast<std::ptrdiff_t>(j));
      leads.erase(leads.begin() + static_cast<std::ptrdiff_t>(j));
      continue;
    }
    const Rational inv = 1 / reduced.leading_coefficient(order);
    for (std::size_t k = 0; k < gens.size(); ++k)
      B.cofactors[j][k] = (B.cofactors[j][k] - omega * B.cofactors[i][k]) * inv;
    B.polys[j] = reduced * inv;
    leads[j] = B.polys[j].leading_word(order);
  }
  return B;
}

Polynomial normal_form(const Polynomial& p, const LeftGroebnerBasis& B, std::vector<Polynomial>* cofactors) {
  const int g = p.num_vars();
  if (cofactors) cofactors->assign(B.size(), Polynomial(g));
  const std::vector<Word> leads = B.leading_words();
  Polynomial rest = p, result(g);
  while (!rest.is_zero()) {
    const Word t = rest.leading_word(B.order);
    const Rational c = rest.coefficient(t);
    std::size_t i = 0;
    while (i < leads.size() && !t.ends_with(leads[i])) ++i;
    if (i == leads.size()) {
      result.add_term(t, c);
      rest.add_term(t, -c);
      continue;
    }
    const Polynomial m(g, t.prefix(t.degree() - leads[i].degree()), c);
    rest -= m * B.polys[i];
    if (cofactors) (*cofactors)[i] += m;
  }
  return result;
}

bool contains(const LeftGroebnerBasis& B, const Polynomial& p) { return normal_form(p, B).is_zero(); }

bool is_standard(const Word& w, const LeftGroebnerBasis& B) {
  for (const auto& p : B.polys)
    if (w.ends_with(p.leading_word(B.order))) return false;
  return true;
}

std::vector<Polynomial> truncated_basis(const LeftGroebnerBasis& B, int e) {
  if (e < B.max_degree()) throw std::invalid_argument("truncated_basis: e is below the basis degree");
  std::vector<Polynomial> out;
  for (const auto& p : B.polys)
    for (const Word& v : words_up_to_degree(B.num_vars, e - p.degree())) out.push_back(Polynomial(B.num_vars, v) * p);
  return out;
}

}  // namespace ncreal
