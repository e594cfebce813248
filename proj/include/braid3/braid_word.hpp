#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braid3 {

// Band generators of B3: a = s1, b = s2, x = a^-1 b a, and delta = b a.
enum class Generator : std::uint8_t { A, B, X, Delta };

struct Letter {
  Generator gen = Generator::A;
  int sign = 1;  // +1 or -1

  constexpr Letter inverse() const noexcept { return {gen, -sign}; }
  friend constexpr bool operator==(Letter, Letter) = default;
};

/// tau_i: a for i = 1 (mod 3), b for i = 2, x for i = 0.
Generator tau(long i) noexcept;
/// Inverse of tau(): a -> 1, b -> 2, x -> 0. Undefined for Delta.
int tau_index(Generator g) noexcept;

/// A finite word over {a, b, x, delta}^{+-1}. Words act left to right.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit BraidWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter l) { letters_.push_back(l); }
  /// Appends `g^power` (power may be negative).
  void append_power(Generator g, long power);
  BraidWord& operator*=(const BraidWord& rhs);
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) {
    lhs *= rhs;
    return lhs;
  }

  BraidWord inverse() const;
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<Letter> letters_;
};

inline constexpr std::size_t kDefaultLetterCap = 1'000'000;

/// Grammar: tokens a b x d (d = delta), uppercase for inverses, each
/// optionally followed by `^k` with k a (possibly negative) integer.
/// Whitespace is ignored between tokens. Throws SyntaxError or ResourceError.
BraidWord parse_braid_word(std::string_view text,
                           std::size_t max_letters = kDefaultLetterCap);

/// Canonical text: lowercase letters, run-length `^k` powers (k = -1 written
/// out), single spaces between syllables, `d` for delta. Empty word -> "".
std::string to_string(const BraidWord& w);

/// `g^power` as a word.
BraidWord power_word(Generator g, long power);

long writhe(const BraidWord& w) noexcept;

struct StrandPermutation {
  // images[i] is the final position of the strand starting at position i
  // (0-based positions).
  std::array<int, 3> images{0, 1, 2};

  StrandPermutation then(const StrandPermutation& next) const noexcept;
  int cycle_count() const noexcept;
  /// Sorted cycle lengths.
  std::array<int, 3> cycle_type() const noexcept;
  friend bool operator==(const StrandPermutation&, const StrandPermutation&) = default;
};

StrandPermutation permutation_of(Letter l) noexcept;
StrandPermutation permutation_of(const BraidWord& w) noexcept;

/// Number of components of the closure (1 iff the closure is a knot).
int closure_components(const BraidWord& w) noexcept;

/// Read backwards, swapping a <-> b; x and delta are fixed.
BraidWord reverse_braid(const BraidWord& w);

/// Expansion into a^{+-1}, b^{+-1}: x = a^-1 b a, delta = b a.
BraidWord expand_to_standard(const BraidWord& w);

/// Expands to standard generators and flips every sign in place.
BraidWord mirror_braid(const BraidWord& w);

/// Cancels adjacent inverse pairs.
BraidWord free_reduce(const BraidWord& w);

/// Equality in B3, decided by writhe, strand permutation, and the reduced
/// Burau matrix (faithful on B3).
bool braids_equal(const BraidWord& u, const BraidWord& v);

}  // namespace braid3
