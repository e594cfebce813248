#pragma once

#include <span>
#include <string>
#include <vector>

#include "braid3/braid_word.hpp"

namespace braid3 {

/// delta^n tau_1^{u_1} ... tau_t^{u_t}; t is u.size().
struct XuForm {
  long n = 0;
  std::vector<long> u;

  long t() const noexcept { return static_cast<long>(u.size()); }
  long U() const noexcept;

  friend bool operator==(const XuForm&, const XuForm&) = default;
};

/// Lexicographic order on (-n, t, u_1, ..., u_t).
bool xu_less(const XuForm& lhs, const XuForm& rhs) noexcept;

/// Normal form plus a conjugator c with  to_word(form) = c^-1 * w * c  in B3.
struct XuResult {
  XuForm form;
  BraidWord conjugator;
};

XuResult xu_normalize_certified(const BraidWord& w);
XuForm xu_normalize(const BraidWord& w);

/// Conditions (a)/(b)/(c): t = 0; or t = 1 with (n = 1 mod 3 => u_1 = 1); or
/// t >= 2 with n + t = 0 mod 3 and u cyclically lexicographically minimal.
/// Any u_i < 1 makes the tuple invalid.
bool is_xu_normal(long n, std::span<const long> u);
inline bool is_xu_normal(const XuForm& f) { return is_xu_normal(f.n, f.u); }

BraidWord to_word(const XuForm& f);
/// `d^n` followed by the syllables in canonical text form, e.g. `d^-2 a^2 b^2`.
std::string to_string(const XuForm& f);

bool conjugate_in_b3(const BraidWord& u, const BraidWord& v);

enum class LinkRelation { Conjugate, SameLinkNotConjugate, Different };

/// Oriented-link comparison of closures: conjugacy, conjugacy after reversal,
/// or membership in one Birman-Menasco exceptional family.
LinkRelation link_relation(const BraidWord& u, const BraidWord& v);
bool same_closure_link(const BraidWord& u, const BraidWord& v);

/// min(xu(w), xu(rev(w))) under xu_less.
XuForm canonical_link_form(const BraidWord& w);

/// Index of the lexicographically least rotation of `seq`.
std::size_t least_rotation(std::span<const long> seq) noexcept;

}  // namespace braid3
