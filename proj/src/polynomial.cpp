#include "ncreal/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ncreal {

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

Polynomial::Polynomial(int num_vars, const Rational& constant) : Polynomial(num_vars) {
  add_term(Word{}, constant);
}

Polynomial::Polynomial(int num_vars, const Word& w, const Rational& coeff) : Polynomial(num_vars) {
  if (w.max_var() > num_vars) throw std::invalid_argument("word uses a variable beyond num_vars");
  add_term(w, coeff);
}

int Polynomial::degree() const {
  return terms_.empty() ? kZeroDegree : terms_.rbegin()->first.degree();
}

int Polynomial::min_degree() const {
  return terms_.empty() ? kZeroDegree : terms_.begin()->first.degree();
}

Rational Polynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

bool Polynomial::is_symmetric() const { return *this == star(*this); }

const Word& Polynomial::leading_word(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::invalid_argument("leading word of the zero polynomial");
  if (order.is_default()) return terms_.rbegin()->first;
  const Word* best = &terms_.begin()->first;
  for (const auto& [w, c] : terms_)
    if (order.less(*best, w)) best = &w;
  return *best;
}

const Rational& Polynomial::leading_coefficient(const MonomialOrder& order) const {
  return terms_.find(leading_word(order))->second;
}

Polynomial Polynomial::with_num_vars(int num_vars) const {
  if (num_vars < num_vars_) {
    for (const auto& [w, c] : terms_)
      if (w.max_var() > num_vars) throw std::invalid_argument("cannot shrink variable count below a used variable");
  }
  Polynomial out(num_vars);
  out.terms_ = terms_;
  return out;
}

void Polynomial::require_same_vars(const Polynomial& rhs) const {
  if (num_vars_ != rhs.num_vars_)
    throw std::invalid_argument("polynomials over different variable counts (" + std::to_string(num_vars_) +
                                " vs " + std::to_string(rhs.num_vars_) + ")");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_vars(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_vars(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_vars(b);
  Polynomial out(a.num_vars_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

Polynomial star(const Polynomial& p) {
  Polynomial out(p.num_vars());
  for (const auto& [w, c] : p.terms()) out.add_term(star(w), c);
  return out;
}

Polynomial homogeneous_part(const Polynomial& p, int degree) {
  Polynomial out(p.num_vars());
  for (const auto& [w, c] : p.terms())
    if (w.degree() == degree) out.add_term(w, c);
  return out;
}

Polynomial leading_polynomial(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("leading polynomial of zero");
  return homogeneous_part(p, p.degree());
}

bool is_analytic(const Polynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.first.is_analytic(); });
}

bool is_antianalytic(const Polynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.first.is_antianalytic(); });
}

Polynomial monic(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  Rational lc = p.leading_coefficient(order);
  return p * Rational(1 / lc);
}

double max_abs_coefficient(const Polynomial& p) {
  double m = 0;
  for (const auto& [w, c] : p.terms()) m = std::max(m, std::abs(c.convert_to<double>()));
  return m;
}

Polynomial product(const std::vector<Polynomial>& factors, int num_vars) {
  Polynomial out(num_vars, Rational(1));
  for (const auto& f : factors) out = out * f;
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + ' ';
      out += to_string(w);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace ncreal
