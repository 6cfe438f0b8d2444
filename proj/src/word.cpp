#include "ncreal/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncreal {

int Word::max_var() const {
  int m = 0;
  for (auto l : letters_) m = std::max(m, l.var);
  return m;
}

bool Word::is_analytic() const {
  return std::none_of(letters_.begin(), letters_.end(), [](Letter l) { return l.starred; });
}

bool Word::is_antianalytic() const {
  return std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return l.starred; });
}

Word Word::prefix(int n) const {
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

Word Word::suffix(int n) const {
  return Word(std::vector<Letter>(letters_.end() - n, letters_.end()));
}

bool Word::ends_with(const Word& tail) const {
  if (tail.degree() > degree()) return false;
  return std::equal(tail.letters_.begin(), tail.letters_.end(), letters_.end() - tail.degree());
}

bool Word::starts_with(const Word& head) const {
  if (head.degree() > degree()) return false;
  return std::equal(head.letters_.begin(), head.letters_.end(), letters_.begin());
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word star(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.degree());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->star());
  return Word(std::move(out));
}

bool find_shrink_split(const Word& w, ShrinkSplit& out) {
  const int n = w.degree();
  for (int k = 1; 2 * k <= n; ++k) {
    bool match = true;
    // letter k+i must be the star of letter k+1-i (1-based), i = 1..k
    for (int i = 1; i <= k && match; ++i) match = w[k + i - 1] == w[k - i].star();
    if (match) {
      out.u = w.prefix(k);
      out.v = w.suffix(n - 2 * k);
      return true;
    }
  }
  return false;
}

bool is_left_unshrinkable(const Word& w) {
  ShrinkSplit split;
  return !find_shrink_split(w, split);
}

std::size_t count_words(int g, int d) {
  std::size_t n = 1;
  for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(2 * g);
  return n;
}

std::vector<Word> words_of_degree(int g, int d) {
  if (g < 1 || d < 0) throw std::invalid_argument("words_of_degree: need g >= 1 and d >= 0");
  const std::size_t total = count_words(g, d);
  std::vector<Word> out;
  out.reserve(total);
  std::vector<int> codes(d, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<Letter> letters(d);
    for (int i = 0; i < d; ++i) letters[i] = Letter::from_code(codes[i]);
    out.emplace_back(std::move(letters));
    for (int i = d - 1; i >= 0; --i) {
      if (++codes[i] < 2 * g) break;
      codes[i] = 0;
    }
  }
  return out;
}

std::vector<Word> words_below_degree(int g, int d) {
  std::vector<Word> out;
  for (int k = 0; k < d; ++k) {
    auto block = words_of_degree(g, k);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<Word> words_up_to_degree(int g, int e) { return words_below_degree(g, e + 1); }

std::size_t canonical_index(const Word& w, int g) {
  std::size_t idx = 0;
  const std::size_t radix = 2 * static_cast<std::size_t>(g);
  for (auto l : w) idx = idx * radix + static_cast<std::size_t>(l.code());
  return idx;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int i = 0; i < w.degree();) {
    int run = 1;
    while (i + run < w.degree() && w[i + run] == w[i]) ++run;
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(w[i].var);
    if (w[i].starred) out += '*';
    if (run > 1) out += '^' + std::to_string(run);
    i += run;
  }
  return out;
}

}  // namespace ncreal
