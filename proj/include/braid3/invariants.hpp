#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braid3/braid_word.hpp"
#include "braid3/garside_form.hpp"
#include "braid3/xu_form.hpp"

namespace braid3 {

struct PositivityClass {
  bool strongly_quasipositive = false;
  bool braid_positive = false;
};

/// Criterion for closures of braid index 3: SQP iff n >= 0; braid positive
/// iff 2n >= t or (n, t) = (0, 1).
PositivityClass positivity_class(const XuForm& f);

/// True when the closure is the unknot or a two-strand torus link, i.e. the
/// class (up to reversal) contains a^k b or a^k b^-1.
bool braid_index_below_three(const BraidWord& w);

/// sigma = -U - 4n/3 + 2t/3 for t > 0; torus branch 2 - 2n + 4 floor(n/6)
/// for t = 0. Throws NotAKnot.
int signature_from_xu(const XuForm& f);

/// -2 ell + r - sum p_i; cases C and D only (UnsupportedCase otherwise).
int signature_from_garside(const GarsideForm& g);

/// U/2 + n - 1. Throws NotStronglyQuasipositive, NotAKnot.
long seifert_genus_sqp(const XuForm& f);

enum class Family { None, T3Torus, T2ConnectedSum, Pretzel, FigureEight };

struct FamilyTag {
  Family variant = Family::None;
  std::vector<long> params;
  bool mirrored = false;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// e.g. `T2ConnectedSum(1,2)`, `mirror Pretzel(4,3,5)`, `None`.
std::string to_string(const FamilyTag& tag);

/// Matches the closure against T(3,n) (n = 1,2 mod 3, |n| >= 4),
/// T(2,2m+1) # T(2,2n+1), P(2p,2q+1,2r+1,1) with p >= 1, the figure-eight,
/// and mirrors. Parameters are bounded by |writhe|. Throws NotAKnot.
FamilyTag recognize_special_family(const BraidWord& w);

enum class Top4Verdict { Equal, Strict, FigureEight };

struct Top4Classification {
  Top4Verdict verdict = Top4Verdict::Strict;
  FamilyTag family;
};

std::string to_string(Top4Verdict v);

/// Equal iff the closure or its mirror is a two-strand torus connected sum,
/// one of the pretzels above, T(3,4) or T(3,5). Throws NotAKnot.
Top4Classification classify_top4genus(const BraidWord& w);

}  // namespace braid3
