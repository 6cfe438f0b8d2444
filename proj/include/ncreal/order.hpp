#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ncreal/word.hpp"

namespace ncreal {

/// Degree-first total order on words; ties broken left to right by a letter
/// ranking. The default ranking is x1 > x1* > x2 > x2* > ...
///
/// The order is multiplicative on the left: u < v implies wu < wv.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  /// Letters from greatest to least. Unlisted letters rank below every listed
  /// one, among themselves in default order.
  explicit MonomialOrder(std::vector<Letter> descending);

  /// Parses a comma separated ranking such as "x1,x1*,x2,x2*".
  static MonomialOrder parse(std::string_view ranking);

  std::weak_ordering compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

  bool is_default() const { return descending_.empty(); }
  const std::vector<Letter>& ranking() const { return descending_; }
  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  int position(Letter l) const;

  std::vector<Letter> descending_;
};

/// Ascending default order; the key order of Polynomial term maps.
struct StandardWordLess {
  bool operator()(const Word& a, const Word& b) const;
};

}  // namespace ncreal
