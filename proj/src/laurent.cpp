#include "braid3/laurent.hpp"

#include <stdexcept>

namespace braid3 {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(int low, std::vector<std::int64_t> coeffs)
    : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(std::int64_t c, int exponent) { return LaurentPoly(exponent, {c}); }

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  coeffs_ = std::vector<std::int64_t>(coeffs_.begin() + static_cast<long>(first),
                                      coeffs_.begin() + static_cast<long>(last));
  low_ += static_cast<int>(first);
}

std::int64_t LaurentPoly::coeff(int exponent) const noexcept {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = checked_mul(c, -1);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(high(), rhs.high());
  std::vector<std::int64_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (int e = lo; e <= hi; ++e) out[static_cast<std::size_t>(e - lo)] = checked_add(coeff(e), rhs.coeff(e));
  *this = LaurentPoly(lo, std::move(out));
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return LaurentPoly(a.low_ + b.low_, std::move(out));
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  // Long division from the low end; the divisor's lowest coefficient must
  // divide every step.
  std::vector<std::int64_t> rem = coeffs_;
  const auto& d = divisor.coeffs_;
  if (rem.size() < d.size()) throw std::domain_error("polynomial division is not exact");
  std::vector<std::int64_t> q(rem.size() - d.size() + 1, 0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (rem[i] % d[0] != 0) throw std::domain_error("polynomial division is not exact");
    q[i] = rem[i] / d[0];
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] = checked_add(rem[i + j], checked_mul(-q[i], d[j]));
  }
  for (std::int64_t r : rem) {
    if (r != 0) throw std::domain_error("polynomial division is not exact");
  }
  return LaurentPoly(low_ - divisor.low_, std::move(q));
}

std::int64_t LaurentPoly::evaluate_at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s = checked_add(s, c);
  return s;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(i);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1 || e == 0) out += std::to_string(mag);
    if (e != 0) {
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace braid3
