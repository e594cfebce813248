#pragma once

#include <array>

#include "braid3/braid_word.hpp"
#include "braid3/laurent.hpp"

namespace braid3 {

/// Reduced Burau matrix of a 3-braid, row-vector convention:
///   a -> [[-t, 1], [0, 1]],  b -> [[1, 0], [t, -t]].
/// Words multiply left to right, matching the word convention.
struct BurauMatrix {
  std::array<std::array<LaurentPoly, 2>, 2> m{{{LaurentPoly(1), LaurentPoly(0)},
                                                {LaurentPoly(0), LaurentPoly(1)}}};

  friend BurauMatrix operator*(const BurauMatrix& x, const BurauMatrix& y);
  friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;
};

BurauMatrix burau_matrix(Letter standard_letter);
BurauMatrix burau_matrix(const BraidWord& w);

}  // namespace braid3
