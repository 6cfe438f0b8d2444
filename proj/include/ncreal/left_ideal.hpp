#pragma once

#include <vector>

#include "ncreal/order.hpp"
#include "ncreal/polynomial.hpp"

namespace ncreal {

/// Monic generators whose leading words are pairwise not left multiples of
/// one another. cofactors[i] expresses polys[i] as sum_k cofactors[i][k] gens[k]
/// over the generator list passed to left_groebner.
struct LeftGroebnerBasis {
  int num_vars = 1;
  MonomialOrder order;
  std::vector<Polynomial> polys;
  std::vector<std::vector<Polynomial>> cofactors;

  bool empty() const { return polys.empty(); }
  std::size_t size() const { return polys.size(); }
  /// Largest degree in the basis, kZeroDegree when empty.
  int max_degree() const;
  std::vector<Word> leading_words() const;
};

/// Interreduces left leading words. Zero generators are ignored; all-zero
/// input gives the empty basis. Throws std::invalid_argument for an empty list
/// or mismatched variable counts.
LeftGroebnerBasis left_groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order = {});

/// Full reduction: no term of the result is a left multiple of a leading word.
/// When `cofactors` is given it receives c with p = sum_i c[i] polys[i] + result.
Polynomial normal_form(const Polynomial& p, const LeftGroebnerBasis& B, std::vector<Polynomial>* cofactors = nullptr);

bool contains(const LeftGroebnerBasis& B, const Polynomial& p);

/// True iff w is not a left multiple of any leading word of B.
bool is_standard(const Word& w, const LeftGroebnerBasis& B);

/// { v polys[i] : deg v <= e - deg polys[i] }, a linear basis of the elements
/// of degree <= e in the ideal. Throws std::invalid_argument if e is smaller
/// than a basis degree.
std::vector<Polynomial> truncated_basis(const LeftGroebnerBasis& B, int e);

}  // namespace ncreal
