#pragma once

#include <string>
#include <vector>

#include "ncreal/parse.hpp"

namespace ncreal::testing {

inline Polynomial P(const std::string& text, int g = 1) { return parse_polynomial(text, g); }

inline std::vector<Polynomial> Ps(const std::vector<std::string>& texts, int g = 1) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, g));
  return out;
}

inline Word W(const std::string& text, int g = 2) {
  const Polynomial p = parse_polynomial(text, g);
  return p.terms().begin()->first;
}

}  // namespace ncreal::testing
