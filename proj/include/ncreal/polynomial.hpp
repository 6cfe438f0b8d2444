#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ncreal/order.hpp"
#include "ncreal/rational.hpp"
#include "ncreal/word.hpp"

namespace ncreal {

/// Degree reported for the zero polynomial. Never do arithmetic with it.
inline constexpr int kZeroDegree = -1;

/// Element of the free *-algebra R<x, x*> over g variables, with exact
/// rational coefficients. No stored coefficient is ever zero.
class Polynomial {
 public:
  using Terms = std::map<Word, Rational, StandardWordLess>;

  explicit Polynomial(int num_vars = 1);
  Polynomial(int num_vars, const Rational& constant);
  Polynomial(int num_vars, const Word& w, const Rational& coeff = Rational(1));

  static Polynomial letter(int num_vars, Letter l) { return Polynomial(num_vars, Word{l}); }

  int num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// kZeroDegree for the zero polynomial.
  int degree() const;
  /// Smallest degree of a stored word, kZeroDegree for zero.
  int min_degree() const;

  Rational coefficient(const Word& w) const;
  void add_term(const Word& w, const Rational& c);

  bool is_constant() const { return degree() <= 0; }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_homogeneous() const;
  bool is_symmetric() const;

  /// Greatest word and its coefficient with respect to `order`. Requires p != 0.
  const Word& leading_word(const MonomialOrder& order = {}) const;
  const Rational& leading_coefficient(const MonomialOrder& order = {}) const;

  /// Same polynomial over a larger (or equal) variable count.
  Polynomial with_num_vars(int num_vars) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void require_same_vars(const Polynomial& rhs) const;

  int num_vars_;
  Terms terms_;
};

/// The involution: coefficientwise, each word reversed and letterwise starred.
Polynomial star(const Polynomial& p);

/// Terms of the given degree.
Polynomial homogeneous_part(const Polynomial& p, int degree);

/// Terms of maximal degree. Throws std::invalid_argument for p = 0.
Polynomial leading_polynomial(const Polynomial& p);

/// No starred letter anywhere (vacuously true for 0).
bool is_analytic(const Polynomial& p);
/// Every word consists of starred letters only (constants included).
bool is_antianalytic(const Polynomial& p);

/// Divides by the leading coefficient under `order`. Zero stays zero.
Polynomial monic(const Polynomial& p, const MonomialOrder& order = {});

/// Largest absolute coefficient as a double, 0 for the zero polynomial.
double max_abs_coefficient(const Polynomial& p);

/// p1 p2 ... pk; the empty product is 1.
Polynomial product(const std::vector<Polynomial>& factors, int num_vars);

std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace ncreal
