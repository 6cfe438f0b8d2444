#include "ncreal/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncreal {

MonomialOrder::MonomialOrder(std::vector<Letter> descending) : descending_(std::move(descending)) {
  for (std::size_t i = 0; i < descending_.size(); ++i) {
    if (descending_[i].var < 1) throw std::invalid_argument("monomial order: variable index must be >= 1");
    for (std::size_t j = 0; j < i; ++j)
      if (descending_[i] == descending_[j])
        throw std::invalid_argument("monomial order: letter listed twice");
  }
}

MonomialOrder MonomialOrder::parse(std::string_view ranking) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos <= ranking.size()) {
    auto comma = ranking.find(',', pos);
    std::string_view item = ranking.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.size() < 2 || item.front() != 'x')
      throw std::invalid_argument("monomial order: bad letter '" + std::string(item) + "'");
    bool starred = item.back() == '*';
    if (starred) item.remove_suffix(1);
    std::string digits(item.substr(1));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw std::invalid_argument("monomial order: bad letter '" + std::string(item) + "'");
    letters.push_back({std::stoi(digits), starred});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return MonomialOrder(std::move(letters));
}

int MonomialOrder::position(Letter l) const {
  if (descending_.empty()) return l.code();
  for (std::size_t i = 0; i < descending_.size(); ++i)
    if (descending_[i] == l) return static_cast<int>(i);
  return static_cast<int>(descending_.size()) + l.code();
}

std::weak_ordering MonomialOrder::compare(const Word& a, const Word& b) const {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = 0; i < a.degree(); ++i) {
    if (a[i] == b[i]) continue;
    // Smaller position means greater letter.
    return position(b[i]) <=> position(a[i]);
  }
  return std::weak_ordering::equivalent;
}

std::string MonomialOrder::to_string() const {
  if (descending_.empty()) return "default";
  std::string out;
  for (auto l : descending_) {
    if (!out.empty()) out += ',';
    out += 'x' + std::to_string(l.var) + (l.starred ? "*" : "");
  }
  return out;
}

bool StandardWordLess::operator()(const Word& a, const Word& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i < a.degree(); ++i)
    if (!(a[i] == b[i])) return a[i].code() > b[i].code();
  return false;
}

}  // namespace ncreal
