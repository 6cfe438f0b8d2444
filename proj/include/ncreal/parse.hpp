#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncreal/polynomial.hpp"

namespace ncreal {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the polynomial grammar
///   LETTER := 'x' INT ['*'];  FACTOR := LETTER ['^' INT];  MONO := FACTOR+
///   COEFF := INT ['/' INT];   TERM := COEFF [MONO] | MONO
///   POLY := ['-'] TERM (('+'|'-') TERM)*
/// Throws ParseError on malformed text or a variable index outside 1..g.
Polynomial parse_polynomial(std::string_view text, int num_vars);

/// Largest variable index appearing in `text` (0 if none). Throws ParseError.
int max_variable_index(std::string_view text);

/// Parses every line of a generator file: one polynomial per line, blank lines
/// and lines starting with '#' ignored. With num_vars = 0 the variable count
/// is the largest index used (at least 1).
std::vector<Polynomial> parse_generators(std::istream& in, int num_vars = 0);
std::vector<Polynomial> parse_generators(const std::vector<std::string>& lines, int num_vars = 0);

}  // namespace ncreal
