#pragma once

#include <string>
#include <vector>

#include "braid3/braid_word.hpp"
#include "braid3/xu_form.hpp"

namespace braid3 {

enum class GarsideCase { A, B, C, D };

/// Delta^ell s1^{p_1} s2^{p_2} ... with s1 = a and alternating generators.
struct GarsideForm {
  long ell = 0;
  std::vector<long> p;
  GarsideCase kind = GarsideCase::A;

  long r() const noexcept { return static_cast<long>(p.size()); }
  friend bool operator==(const GarsideForm&, const GarsideForm&) = default;
};

struct GarsideResult {
  GarsideForm form;
  BraidWord conjugator;  // to_word(form) = c^-1 * w * c
};

GarsideResult garside_normalize_certified(const BraidWord& w);
GarsideForm garside_normalize(const BraidWord& w);

/// Throws InvalidForm unless is_xu_normal(f).
GarsideForm xu_to_garside(const XuForm& f);

/// Checks the case conditions and that `kind` matches them.
bool is_garside_normal(const GarsideForm& g);

BraidWord to_word(const GarsideForm& g);
/// `D^l` (Delta = aba) followed by the syllables, e.g. `D^1 a^3`; `D^0` is dropped when syllables follow.
std::string to_string(const GarsideForm& g);
char case_letter(GarsideCase c) noexcept;

}  // namespace braid3
