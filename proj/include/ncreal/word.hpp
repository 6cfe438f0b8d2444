#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ncreal {

/// One of x_1..x_g or its adjoint x_1*..x_g*. Variables are 1-based.
struct Letter {
  int var = 1;
  bool starred = false;

  constexpr Letter star() const { return {var, !starred}; }
  /// Dense index: x1 -> 0, x1* -> 1, x2 -> 2, ...
  constexpr int code() const { return 2 * (var - 1) + (starred ? 1 : 0); }
  static constexpr Letter from_code(int code) { return {code / 2 + 1, code % 2 == 1}; }

  friend constexpr bool operator==(Letter, Letter) = default;
};

inline constexpr Letter x(int var) { return {var, false}; }
inline constexpr Letter xs(int var) { return {var, true}; }

/// An element of the free monoid on the 2g letters; the empty word is 1.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  int degree() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Largest variable index used, 0 for the empty word.
  int max_var() const;
  bool is_analytic() const;
  bool is_antianalytic() const;

  /// First n letters / last n letters.
  Word prefix(int n) const;
  Word suffix(int n) const;
  bool ends_with(const Word& tail) const;
  bool starts_with(const Word& head) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// The involution: reverse and star every letter.
Word star(const Word& w);

/// False iff w = u u* v for some nonempty word u. The empty word counts as
/// unshrinkable.
bool is_left_unshrinkable(const Word& w);

/// If w = u u* v with u nonempty, the shortest such u (and the matching v).
struct ShrinkSplit {
  Word u;
  Word v;
};
bool find_shrink_split(const Word& w, ShrinkSplit& out);

/// All words of exactly degree d over g variables, in canonical order
/// (lexicographic on letter codes: x1 < x1* < x2 < ...).
std::vector<Word> words_of_degree(int g, int d);
/// All words of degree < d, ascending degree, canonical order within a degree.
std::vector<Word> words_below_degree(int g, int d);
/// All words of degree <= e.
std::vector<Word> words_up_to_degree(int g, int e);

/// Number of words of degree exactly d: (2g)^d.
std::size_t count_words(int g, int d);

/// Position of w inside words_of_degree(g, w.degree()).
std::size_t canonical_index(const Word& w, int g);

std::string to_string(const Word& w);

}  // namespace ncreal
