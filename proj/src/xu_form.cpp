#include "braid3/xu_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace braid3 {

namespace {

long mod3(long i) noexcept {
  const long r = i % 3;
  return r < 0 ? r + 3 : r;
}

// delta^n * (positive tau word). Letters are stored relative to a global
// offset so that moving a delta across the whole word is O(1).
class Normalizer {
 public:
  void append_letter(Letter l) {
    if (l.gen == Generator::Delta) {
      shift(l.sign);
      return;
    }
    const long i = tau_index(l.gen);
    if (l.sign > 0) {
      append_tau(i);
    } else {
      // tau_i^-1 = delta^-1 tau_{i+1}
      shift(-1);
      append_tau(i + 1);
    }
  }

  void append_tau(long i) {
    i = mod3(i);
    if (!stored_.empty() && actual(stored_.back()) == mod3(i + 1)) {
      // tau_{j} tau_{j-1} = delta
      stored_.pop_back();
      shift(1);
      return;
    }
    stored_.push_back(mod3(i - offset_));
  }

  // Moves the first letter to the back: conjugation by tau_{f-n}.
  void rotate_front() {
    const long f = actual(stored_.front());
    const long wrapped = mod3(f - n_);
    stored_.pop_front();
    conjugator_.push_back({tau(wrapped), 1});
    append_tau(wrapped);
  }

  bool wrap_reducible() const {
    if (stored_.size() < 2) return false;
    const long wrapped = mod3(actual(stored_.front()) - n_);
    return wrapped == mod3(actual(stored_.back()) - 1);
  }

  void cyclic_reduce() {
    while (wrap_reducible()) rotate_front();
  }

  std::vector<long> indices() const {
    std::vector<long> out;
    out.reserve(stored_.size());
    for (long s : stored_) out.push_back(actual(s));
    return out;
  }

  void shift(long k) {
    n_ += k;
    offset_ = mod3(offset_ + k);
  }

  // delta^-m N delta^m
  void conjugate_by_delta(long m) {
    offset_ = mod3(offset_ + m);
    conjugator_.append_power(Generator::Delta, m);
  }

  long n() const noexcept { return n_; }
  std::size_t size() const noexcept { return stored_.size(); }
  long front_index() const { return actual(stored_.front()); }
  BraidWord take_conjugator() { return std::move(conjugator_); }

 private:
  long actual(long stored) const noexcept { return mod3(stored + offset_); }

  long n_ = 0;
  long offset_ = 0;
  std::deque<long> stored_;
  BraidWord conjugator_;
};

struct Syllables {
  std::vector<long> index;
  std::vector<long> length;
};

Syllables syllables_of(const std::vector<long>& idx) {
  Syllables s;
  for (long i : idx) {
    if (!s.index.empty() && s.index.back() == i) {
      ++s.length.back();
    } else {
      s.index.push_back(i);
      s.length.push_back(1);
    }
  }
  return s;
}

}  // namespace

long XuForm::U() const noexcept {
  long s = 0;
  for (long v : u) s += v;
  return s;
}

bool xu_less(const XuForm& lhs, const XuForm& rhs) noexcept {
  if (lhs.n != rhs.n) return lhs.n > rhs.n;
  if (lhs.t() != rhs.t()) return lhs.t() < rhs.t();
  return std::lexicographical_compare(lhs.u.begin(), lhs.u.end(), rhs.u.begin(), rhs.u.end());
}

std::size_t least_rotation(std::span<const long> seq) noexcept {
  const std::size_t n = seq.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const long a = seq[(i + k) % n];
    const long b = seq[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

XuResult xu_normalize_certified(const BraidWord& w) {
  Normalizer nz;
  for (const Letter& l : w) nz.append_letter(l);
  nz.cyclic_reduce();

  Syllables syl = syllables_of(nz.indices());
  std::size_t t = syl.index.size();

  if (t >= 2 && mod3(syl.index.front() - nz.n()) == syl.index.back()) {
    for (long k = 0; k < syl.length.front(); ++k) nz.rotate_front();
    syl = syllables_of(nz.indices());
    t = syl.index.size();
  }

  if (t >= 2) {
    const std::size_t r = least_rotation(syl.length);
    for (std::size_t s = 0; s < r; ++s) {
      for (long k = 0; k < syl.length[s]; ++k) nz.rotate_front();
    }
  }

  if (nz.size() > 0) nz.conjugate_by_delta(mod3(1 - nz.front_index()));

  XuResult out;
  out.form.n = nz.n();
  out.form.u = syllables_of(nz.indices()).length;
  out.conjugator = nz.take_conjugator();
  return out;
}

XuForm xu_normalize(const BraidWord& w) { return xu_normalize_certified(w).form; }

bool is_xu_normal(long n, std::span<const long> u) {
  for (long v : u) {
    if (v < 1) return false;
  }
  const std::size_t t = u.size();
  if (t == 0) return true;
  if (t == 1) return mod3(n) != 1 || u[0] == 1;
  if (mod3(n + static_cast<long>(t)) != 0) return false;
  const std::size_t r = least_rotation(u);
  for (std::size_t k = 0; k < t; ++k) {
    if (u[(r + k) % t] != u[k]) return u[k] < u[(r + k) % t];
  }
  return true;
}

BraidWord to_word(const XuForm& f) {
  BraidWord w;
  w.append_power(Generator::Delta, f.n);
  for (std::size_t i = 0; i < f.u.size(); ++i) w.append_power(tau(static_cast<long>(i) + 1), f.u[i]);
  return w;
}

std::string to_string(const XuForm& f) {
  std::string out = "d^" + std::to_string(f.n);
  BraidWord rest;
  for (std::size_t i = 0; i < f.u.size(); ++i) rest.append_power(tau(static_cast<long>(i) + 1), f.u[i]);
  if (!rest.empty()) out += " " + to_string(rest);
  return out;
}

bool conjugate_in_b3(const BraidWord& u, const BraidWord& v) { return xu_normalize(u) == xu_normalize(v); }

namespace {

BraidWord two_bridge_word(long k, int s) {
  BraidWord w = power_word(Generator::A, k);
  w.append_power(Generator::B, s);
  return w;
}

BraidWord pretzel_word(long p, long q, long r) {
  BraidWord w = power_word(Generator::A, p);
  w.append_power(Generator::B, q);
  w.append_power(Generator::X, r);
  return w;
}

bool pretzel_exponent_ok(long e) { return e != 0 && e != -1 && e != -2; }

// Forms reachable from w by conjugation or reversal.
struct ClassForms {
  XuForm direct;
  XuForm reversed;
  bool contains(const XuForm& f) const { return f == direct || f == reversed; }
};

ClassForms class_forms(const BraidWord& w) {
  return {xu_normalize(w), xu_normalize(reverse_braid(w))};
}

bool unknot_pair(const ClassForms& cu, const ClassForms& cv) {
  static const XuForm forms[3] = {xu_normalize(parse_braid_word("ab")), xu_normalize(parse_braid_word("aB")),
                                  xu_normalize(parse_braid_word("AB"))};
  auto is_unknot = [&](const ClassForms& c) {
    return std::any_of(std::begin(forms), std::end(forms), [&](const XuForm& f) { return c.contains(f); });
  };
  return is_unknot(cu) && is_unknot(cv);
}

bool two_bridge_pair(const BraidWord& u, const ClassForms& cu, const ClassForms& cv) {
  const long wu = writhe(u);
  for (int s : {1, -1}) {
    const long k = wu - s;
    if (std::abs(k) == 1) continue;
    if (!cu.contains(xu_normalize(two_bridge_word(k, s)))) continue;
    if (cv.contains(xu_normalize(two_bridge_word(k, -s)))) return true;
  }
  return false;
}

bool pretzel_pair(const BraidWord& u, const ClassForms& cu, const ClassForms& cv) {
  const long wu = writhe(u);
  const long bound = cu.direct.U() + 2 * std::abs(cu.direct.n) + 4;
  for (int sign : {1, -1}) {
    const long total = sign * wu;
    for (long p = -bound; p <= bound; ++p) {
      if (!pretzel_exponent_ok(p)) continue;
      for (long q = -bound; q <= bound; ++q) {
        const long r = total - p - q;
        if (!pretzel_exponent_ok(q) || !pretzel_exponent_ok(r)) continue;
        if (p == q || q == r || p == r) continue;
        if (std::abs(p) + std::abs(q) + std::abs(r) > bound) continue;
        BraidWord gamma = pretzel_word(p, q, r);
        if (sign < 0) gamma = gamma.inverse();
        if (!cu.contains(xu_normalize(gamma))) continue;
        BraidWord beta = pretzel_word(p, r, q);
        if (sign < 0) beta = beta.inverse();
        if (cv.contains(xu_normalize(beta))) return true;
      }
    }
  }
  return false;
}

}  // namespace

LinkRelation link_relation(const BraidWord& u, const BraidWord& v) {
  const ClassForms cu = class_forms(u);
  const ClassForms cv = class_forms(v);
  if (cu.direct == cv.direct) return LinkRelation::Conjugate;
  if (cu.reversed == cv.direct) return LinkRelation::SameLinkNotConjugate;
  if (unknot_pair(cu, cv) || two_bridge_pair(u, cu, cv) ||
      (writhe(u) == writhe(v) && pretzel_pair(u, cu, cv))) {
    return LinkRelation::SameLinkNotConjugate;
  }
  return LinkRelation::Different;
}

bool same_closure_link(const BraidWord& u, const BraidWord& v) {
  return link_relation(u, v) != LinkRelation::Different;
}

XuForm canonical_link_form(const BraidWord& w) {
  XuForm a = xu_normalize(w);
  XuForm b = xu_normalize(reverse_braid(w));
  return xu_less(b, a) ? b : a;
}

}  // namespace braid3
