#include "braid3/burau.hpp"

#include <stdexcept>

namespace braid3 {

BurauMatrix operator*(const BurauMatrix& x, const BurauMatrix& y) {
  BurauMatrix out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
    }
  }
  return out;
}

BurauMatrix burau_matrix(Letter l) {
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly minus_t = LaurentPoly::monomial(-1, 1);
  const LaurentPoly t_inv = LaurentPoly::monomial(1, -1);
  const LaurentPoly minus_t_inv = LaurentPoly::monomial(-1, -1);
  BurauMatrix out;
  if (l.gen == Generator::A) {
    if (l.sign > 0) {
      out.m = {{{minus_t, 1}, {0, 1}}};
    } else {
      out.m = {{{minus_t_inv, t_inv}, {0, 1}}};
    }
  } else if (l.gen == Generator::B) {
    if (l.sign > 0) {
      out.m = {{{1, 0}, {t, minus_t}}};
    } else {
      out.m = {{{1, 0}, {1, minus_t_inv}}};
    }
  } else {
    throw std::invalid_argument("burau_matrix expects a standard generator");
  }
  return out;
}

BurauMatrix burau_matrix(const BraidWord& w) {
  BurauMatrix acc;
  for (const Letter& l : free_reduce(expand_to_standard(w))) acc = acc * burau_matrix(l);
  return acc;
}

bool braids_equal(const BraidWord& u, const BraidWord& v) {
  if (writhe(u) != writhe(v)) return false;
  if (!(permutation_of(u) == permutation_of(v))) return false;
  return burau_matrix(u) == burau_matrix(v);
}

}  // namespace braid3
