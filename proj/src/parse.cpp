#include "ncreal/parse.hpp"

#include <algorithm>
#include <cctype>
#include <istream>

namespace ncreal {
namespace {

struct RawTerm {
  Rational coeff;
  std::vector<Letter> letters;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> out;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    out.push_back(term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      out.push_back(term(c == '-'));
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool next_is_digit() {
    skip_ws();
    return !at_end() && std::isdigit(static_cast<unsigned char>(peek()));
  }

  bool next_is_letter() {
    skip_ws();
    return !at_end() && peek() == 'x';
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  RawTerm term(bool negative) {
    RawTerm t;
    t.coeff = Rational(1);
    bool has_coeff = false;
    if (next_is_digit()) {
      Integer num(digits());
      Integer den(1);
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        std::size_t where = pos_;
        den = Integer(digits());
        if (den == 0) throw ParseError("zero denominator", where);
      }
      t.coeff = Rational(num, den);
      has_coeff = true;
    }
    bool has_mono = false;
    while (next_is_letter()) {
      factor(t.letters);
      has_mono = true;
    }
    if (!has_coeff && !has_mono) fail("expected a coefficient or a variable");
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  void factor(std::vector<Letter>& letters) {
    ++pos_;  // 'x'
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index after 'x'");
    std::size_t where = pos_;
    std::string idx = digits();
    if (idx.size() > 6) throw ParseError("variable index too large", where);
    Letter l{std::stoi(idx), false};
    if (l.var < 1) throw ParseError("variable indices start at 1", where);
    skip_ws();
    if (!at_end() && peek() == '*') {
      l.starred = true;
      ++pos_;
    }
    int power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      std::size_t pwhere = pos_;
      std::string p = digits();
      if (p.size() > 4) throw ParseError("exponent too large", pwhere);
      power = std::stoi(p);
    }
    for (int i = 0; i < power; ++i) letters.push_back(l);
    if (l.var > max_var_) {
      max_var_ = l.var;
      max_var_pos_ = where;
    }
  }

 public:
  int max_var() const { return max_var_; }
  std::size_t max_var_position() const { return max_var_pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int max_var_ = 0;
  std::size_t max_var_pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int num_vars) {
  Parser parser(text);
  auto raw = parser.parse();
  if (parser.max_var() > num_vars)
    throw ParseError("variable x" + std::to_string(parser.max_var()) + " exceeds g = " + std::to_string(num_vars),
                     parser.max_var_position());
  Polynomial p(num_vars);
  for (auto& t : raw) p.add_term(Word(std::move(t.letters)), t.coeff);
  return p;
}

int max_variable_index(std::string_view text) {
  Parser parser(text);
  parser.parse();
  return parser.max_var();
}

namespace {

bool is_content_line(const std::string& line) {
  auto first = std::find_if(line.begin(), line.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  return first != line.end() && *first != '#';
}

}  // namespace

std::vector<Polynomial> parse_generators(const std::vector<std::string>& lines, int num_vars) {
  std::vector<const std::string*> content;
  for (const auto& line : lines)
    if (is_content_line(line)) content.push_back(&line);
  int g = num_vars;
  if (g == 0) {
    g = 1;
    for (const auto* line : content) g = std::max(g, max_variable_index(*line));
  }
  std::vector<Polynomial> out;
  for (const auto* line : content) out.push_back(parse_polynomial(*line, g));
  return out;
}

std::vector<Polynomial> parse_generators(std::istream& in, int num_vars) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return parse_generators(lines, num_vars);
}

}  // namespace ncreal
