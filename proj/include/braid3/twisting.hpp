#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braid3/braid_word.hpp"
#include "braid3/xu_form.hpp"

namespace braid3 {

enum class MoveKind {
  CrossingChange,  // invert the letter at `position` (a, b or x)
  Annihilate,      // delete tau_i ... tau_{i+5} starting at `position`
  Saddle,          // delete a positive a/b/x, or turn a delta into a, b or x
  Rewrite,         // equal braid
  Conjugate,       // conjugate braid
  Trusted,         // declared untwisting of a whole closure, see `source`
};

/// One step of an untwisting certificate. `result` is the word after the
/// step; it only has to equal the locally edited word as a braid.
struct Move {
  MoveKind kind = MoveKind::Rewrite;
  std::size_t position = 0;
  BraidWord result;
  /// Trusted moves: the current word must be conjugate to `source`.
  BraidWord source;
  std::string label;
  /// In half-twists: crossing change 2, annihilation 4, saddle 1.
  long half_weight = 0;
};

std::string to_string(MoveKind k);
std::string describe(const Move& m);

/// Word-level path from a braid to one whose closure is the unknot. Saddles
/// bound the genus of a cobordism, twists bound the untwisting number, so
/// the total weight bounds the topological 4-genus.
struct Certificate {
  BraidWord start;
  std::vector<Move> moves;
  long bound = 0;
  std::string family;
};

/// Re-executes every move. Throws InvalidForm on the first illegal step, on a
/// weight mismatch, or when the last word is not an unknot form.
void replay(const Certificate& c);

/// The unknot forms d, d^-1, d^-1 a^2.
bool is_unknot_form(const XuForm& f);

/// Scripted untwisting for torus knots, d^{3l+2} a^u, d^{3l+1} a^u b^v,
/// braid-positive forms with all u_i >= 2, and (abx)^{2k} a b x^2 a b x^2.
/// Throws NotStronglyQuasipositive, NotAKnot.
std::optional<Certificate> g4top_upper_from_twisting(const XuForm& f);

}  // namespace braid3
