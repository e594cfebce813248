#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braid3 {

/// Integer Laurent polynomial in one variable t. Arithmetic is checked and
/// throws std::overflow_error instead of wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT: implicit from integers is intended
  /// c[0] t^low + c[1] t^(low+1) + ...
  LaurentPoly(int low, std::vector<std::int64_t> coeffs);

  static LaurentPoly monomial(std::int64_t c, int exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int exponent) const noexcept;
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Exact division; throws std::domain_error when `divisor` does not divide.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  std::int64_t evaluate_at_one() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace braid3
