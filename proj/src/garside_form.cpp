#include "braid3/garside_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "braid3/errors.hpp"

namespace braid3 {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long floor_mod(long a, long b) { return a - b * floor_div(a, b); }

// Delta^ell * (positive word in s1/s2). Letters are stored as 0/1 relative
// to a global flip so that moving Delta across the word is O(1).
class Normalizer {
 public:
  void append_letter(Letter l) {
    int s = l.gen == Generator::A ? 0 : 1;
    if (l.sign > 0) {
      append_positive(s);
    } else {
      // P s^-1 = P Delta^-1 s t = Delta^-1 flip(P) s t
      --ell_;
      flip_ ^= 1;
      append_positive(s);
      append_positive(s ^ 1);
    }
  }

  void append_positive(int s) {
    stored_.push_back(s ^ flip_);
    const std::size_t n = stored_.size();
    if (n >= 3) {
      const int x = stored_[n - 3], y = stored_[n - 2], z = stored_[n - 1];
      if (x == z && x != y) {
        stored_.resize(n - 3);
        ++ell_;
        flip_ ^= 1;
      }
    }
  }

  int wrapped(std::size_t i) const { return actual(stored_[i]) ^ static_cast<int>(floor_mod(ell_, 2)); }

  // Moves the first letter to the back: conjugation by flip^ell(s_1).
  void rotate_front() {
    const int c = wrapped(0);
    stored_.pop_front();
    conjugator_.push_back({c == 0 ? Generator::A : Generator::B, 1});
    append_positive(c);
  }

  bool wrap_reducible() const {
    const std::size_t n = stored_.size();
    if (n < 3) return false;
    const int l1 = actual(stored_[n - 2]), l2 = actual(stored_[n - 1]);
    const int f1 = wrapped(0), f2 = wrapped(1);
    return (l1 == f1 && l1 != l2) || (l2 == f2 && l2 != f1);
  }

  void cyclic_reduce() {
    while (wrap_reducible()) rotate_front();
  }

  // Delta^-1 (Delta^ell P) Delta = Delta^ell flip(P)
  void conjugate_by_delta() {
    flip_ ^= 1;
    conjugator_ *= BraidWord{{Generator::A, 1}, {Generator::B, 1}, {Generator::A, 1}};
  }

  void conjugate_by(const BraidWord& c) { conjugator_ *= c; }

  std::vector<int> letters() const {
    std::vector<int> out;
    out.reserve(stored_.size());
    for (int s : stored_) out.push_back(actual(s));
    return out;
  }

  long ell() const noexcept { return ell_; }
  std::size_t size() const noexcept { return stored_.size(); }
  BraidWord take_conjugator() { return std::move(conjugator_); }

 private:
  int actual(int s) const noexcept { return s ^ flip_; }

  long ell_ = 0;
  int flip_ = 0;
  std::deque<int> stored_;
  BraidWord conjugator_;
};

std::vector<long> syllable_lengths(const std::vector<int>& letters) {
  std::vector<long> out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0 && letters[i] == letters[i - 1]) {
      ++out.back();
    } else {
      out.push_back(1);
    }
  }
  return out;
}

BraidWord letters_word(std::initializer_list<char> s) {
  BraidWord w;
  for (char c : s) w.push_back({c == 'a' || c == 'A' ? Generator::A : Generator::B, c == 'A' || c == 'B' ? -1 : 1});
  return w;
}

}  // namespace

char case_letter(GarsideCase c) noexcept {
  switch (c) {
    case GarsideCase::A:
      return 'A';
    case GarsideCase::B:
      return 'B';
    case GarsideCase::C:
      return 'C';
    case GarsideCase::D:
      return 'D';
  }
  return '?';
}

GarsideResult garside_normalize_certified(const BraidWord& w) {
  Normalizer nz;
  for (const Letter& l : free_reduce(expand_to_standard(w))) nz.append_letter(l);
  nz.cyclic_reduce();

  std::vector<int> letters = nz.letters();
  std::vector<long> syl = syllable_lengths(letters);
  const bool odd = floor_mod(nz.ell(), 2) == 1;

  if (syl.size() >= 2 && (letters.front() ^ static_cast<int>(odd)) == letters.back()) {
    for (long k = 0; k < syl.front(); ++k) nz.rotate_front();
    letters = nz.letters();
    syl = syllable_lengths(letters);
  }
  if (syl.size() >= 2) {
    const std::size_t r = least_rotation(syl);
    for (std::size_t s = 0; s < r; ++s) {
      for (long k = 0; k < syl[s]; ++k) nz.rotate_front();
    }
    letters = nz.letters();
  }
  if (!letters.empty() && letters.front() == 1) {
    nz.conjugate_by_delta();
    letters = nz.letters();
  }

  GarsideResult out;
  GarsideForm& g = out.form;
  g.ell = nz.ell();
  g.p = syllable_lengths(letters);

  if (odd && g.p.empty()) {
    // Delta = aba ~ a^2 b
    nz.conjugate_by(letters_word({'A'}));
    g.ell -= 1;
    g.p = {2, 1};
  } else if (odd && g.p.size() == 1 && g.p[0] == 1) {
    // Delta a = abaa ~ a^3 b
    nz.conjugate_by(letters_word({'a', 'b'}));
    g.ell -= 1;
    g.p = {3, 1};
  }

  const bool ell_odd = floor_mod(g.ell, 2) == 1;
  if (!ell_odd && g.p.size() <= 1) {
    g.kind = GarsideCase::A;
  } else if (!ell_odd && g.p.size() == 2 && g.p[1] == 1) {
    g.kind = GarsideCase::B;
  } else {
    g.kind = ell_odd ? GarsideCase::D : GarsideCase::C;
  }
  if (!is_garside_normal(g)) throw std::logic_error("Garside normalization produced an unlisted case");
  out.conjugator = nz.take_conjugator();
  return out;
}

GarsideForm garside_normalize(const BraidWord& w) { return garside_normalize_certified(w).form; }

bool is_garside_normal(const GarsideForm& g) {
  for (long v : g.p) {
    if (v < 1) return false;
  }
  const bool ell_even = floor_mod(g.ell, 2) == 0;
  const std::size_t r = g.p.size();
  switch (g.kind) {
    case GarsideCase::A:
      return ell_even && r <= 1;
    case GarsideCase::B:
      return ell_even && r == 2 && g.p[0] >= 1 && g.p[0] <= 3 && g.p[1] == 1;
    case GarsideCase::C:
    case GarsideCase::D: {
      if (r < 1 || (g.kind == GarsideCase::C) != ell_even) return false;
      if (floor_mod(g.ell - static_cast<long>(r), 2) != 0) return false;
      for (long v : g.p) {
        if (v < 2) return false;
      }
      const std::size_t k = least_rotation(g.p);
      for (std::size_t i = 0; i < r; ++i) {
        if (g.p[(k + i) % r] != g.p[i]) return g.p[i] < g.p[(k + i) % r];
      }
      return true;
    }
  }
  return false;
}

GarsideForm xu_to_garside(const XuForm& f) {
  if (!is_xu_normal(f)) throw InvalidForm("not an Xu normal form: " + to_string(f));
  const long k = floor_div(f.n, 3);
  const long res = floor_mod(f.n, 3);
  GarsideForm g;
  if (f.t() == 0) {
    g.ell = 2 * k;
    if (res == 0) {
      g.kind = GarsideCase::A;
    } else {
      g.p = {res == 1 ? 1L : 3L, 1};
      g.kind = GarsideCase::B;
    }
    return g;
  }
  if (f.t() == 1) {
    const long u1 = f.u[0];
    if (res == 0) {
      g = {2 * k, {u1}, GarsideCase::A};
    } else if (res == 1) {
      g = {2 * k, {2, 1}, GarsideCase::B};
    } else {
      g = {2 * k + 1, {1 + u1}, GarsideCase::D};
    }
    return g;
  }
  g.ell = (2 * f.n - f.t()) / 3;
  for (long v : f.u) g.p.push_back(1 + v);
  const std::size_t r = least_rotation(g.p);
  std::rotate(g.p.begin(), g.p.begin() + static_cast<long>(r), g.p.end());
  g.kind = floor_mod(g.ell, 2) == 0 ? GarsideCase::C : GarsideCase::D;
  return g;
}

BraidWord to_word(const GarsideForm& g) {
  BraidWord w;
  for (long i = 0; i < std::abs(g.ell); ++i) {
    const BraidWord delta = letters_word({'a', 'b', 'a'});
    w *= g.ell > 0 ? delta : delta.inverse();
  }
  for (std::size_t i = 0; i < g.p.size(); ++i) {
    w.append_power(i % 2 == 0 ? Generator::A : Generator::B, g.p[i]);
  }
  return w;
}

std::string to_string(const GarsideForm& g) {
  BraidWord rest;
  for (std::size_t i = 0; i < g.p.size(); ++i) rest.append_power(i % 2 == 0 ? Generator::A : Generator::B, g.p[i]);
  if (rest.empty()) return "D^" + std::to_string(g.ell);
  if (g.ell == 0) return to_string(rest);
  return "D^" + std::to_string(g.ell) + " " + to_string(rest);
}

}  // namespace braid3
