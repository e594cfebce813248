#pragma once

#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include "braid3/braid_word.hpp"
#include "braid3/laurent.hpp"

namespace braid3 {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;

struct SeifertData {
  IntMatrix matrix;
  /// Coefficients c_0..c_{2d} of the palindromic representative with value 1 at t = 1.
  std::vector<BigInt> alexander;
};

/// Seifert matrix of the braid-closure surface: three disks, one band per
/// crossing of the cyclically reduced standard word. Throws
/// DisconnectedSurface if a generator is absent.
SeifertData seifert_matrix(const BraidWord& w);

/// det(A - t A^T) normalized as in SeifertData::alexander.
std::vector<BigInt> alexander_polynomial(const IntMatrix& a);
inline const std::vector<BigInt>& alexander_polynomial(const SeifertData& s) { return s.alexander; }

/// Alexander polynomial from det(I - Burau(w)) / (1 + t + t^2), same normalization.
std::vector<BigInt> burau_alexander(const BraidWord& w);

/// Signature of (1 - w) A + (1 - conj w) A^T at w = exp(2 pi i angle).
/// Throws AtJump when the Alexander polynomial is numerically zero there.
int levine_tristram_at(const SeifertData& s, double angle);

struct Jump {
  double theta = 0;
  int multiplicity = 1;
};

inline constexpr double kJumpTolerance = 1e-9;

/// Unit-circle roots of the Alexander polynomial as angle fractions in (0, 1/2].
std::vector<Jump> unit_circle_jumps(const SeifertData& s, double tolerance = kJumpTolerance);

struct Arc {
  double lo = 0;
  double hi = 0;
  int value = 0;
};

struct SignatureProfile {
  std::vector<Jump> jumps;
  std::vector<Arc> arcs;
  int sigma_hat = 0;
  std::vector<Arc> maximizing_arcs;

  /// Value on the arc containing `theta` in (0, 1/2]; theta must not be a jump.
  int value_at(double theta) const;
};

SignatureProfile sigma_hat_and_profile(const SeifertData& s);

/// max |sigma_theta + 2 writhe theta| over theta in (0, 1/3). Throws NotAKnot.
double gambaudo_ghys_deviation(const BraidWord& w, int samples);

/// Signature at angle 1/2 of the closure of w. Throws NotAKnot.
int signature_oracle(const BraidWord& w);

}  // namespace braid3
