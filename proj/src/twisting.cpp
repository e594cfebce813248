#include "braid3/twisting.hpp"

#include <algorithm>
#include <stdexcept>

#include "braid3/errors.hpp"

namespace braid3 {

namespace {

long mod3(long i) noexcept {
  const long r = i % 3;
  return r < 0 ? r + 3 : r;
}

BraidWord deltas(long k) { return power_word(Generator::Delta, k); }

BraidWord taus(std::initializer_list<long> indices) {
  BraidWord w;
  for (long i : indices) w.push_back({tau(i), 1});
  return w;
}

// tau_lo^2 tau_{lo+1}^2 ... tau_hi^2, shifted by `shift`
BraidWord squares(long lo, long hi, long shift = 0) {
  BraidWord w;
  for (long i = lo; i <= hi; ++i) w.append_power(tau(i + shift), 2);
  return w;
}

BraidWord window(long i) { return taus({i, i + 1, i + 2, i + 3, i + 4, i + 5}); }

BraidWord W(const char* text) { return parse_braid_word(text); }

BraidWord erase(const BraidWord& w, std::size_t pos, std::size_t count) {
  std::vector<Letter> v(w.begin(), w.end());
  v.erase(v.begin() + static_cast<long>(pos), v.begin() + static_cast<long>(pos + count));
  return BraidWord(std::move(v));
}

BraidWord replace(const BraidWord& w, std::size_t pos, Letter l) {
  std::vector<Letter> v(w.begin(), w.end());
  v[pos] = l;
  return BraidWord(std::move(v));
}

const XuForm& tangle_form() {
  static const XuForm f = xu_normalize(W("a^2 b x a^2 b x"));
  return f;
}

// Half-weight of a declared untwisting of the closure of `source`, if listed.
std::optional<long> trusted_half_weight(const BraidWord& source) {
  const XuForm f = xu_normalize(source);
  if (f.t() == 0 && f.n >= 4 && mod3(f.n) == 1) return 2 * (2 * (f.n - 1) / 3 + 1);
  if (f == tangle_form()) return 4;
  return std::nullopt;
}

void fail(std::size_t step, const std::string& why) {
  throw InvalidForm("certificate step " + std::to_string(step) + ": " + why);
}

class Script {
 public:
  Script(const BraidWord& start, std::string family) : cur_(start) {
    cert_.start = start;
    cert_.family = std::move(family);
  }

  const BraidWord& current() const noexcept { return cur_; }

  void crossing_change(std::size_t pos) {
    push(MoveKind::CrossingChange, pos, free_reduce(replace(cur_, pos, cur_[pos].inverse())), 2);
  }

  void annihilate(std::size_t pos) { push(MoveKind::Annihilate, pos, erase(cur_, pos, 6), 4); }

  void saddle(std::size_t pos) { push(MoveKind::Saddle, pos, erase(cur_, pos, 1), 1); }

  void saddle_to(std::size_t pos, Generator g) { push(MoveKind::Saddle, pos, replace(cur_, pos, {g, 1}), 1); }

  void rewrite(const BraidWord& w) { push(MoveKind::Rewrite, 0, w, 0); }
  void conjugate(const BraidWord& w) { push(MoveKind::Conjugate, 0, w, 0); }

  void trusted(const std::string& label, const BraidWord& result) {
    Move m{MoveKind::Trusted, 0, result, cur_, label, *trusted_half_weight(cur_)};
    cur_ = result;
    halves_ += m.half_weight;
    cert_.moves.push_back(std::move(m));
  }

  Certificate finish() {
    cert_.bound = halves_ / 2;
    return std::move(cert_);
  }

 private:
  void push(MoveKind kind, std::size_t pos, BraidWord result, long halves) {
    cur_ = result;
    halves_ += halves;
    cert_.moves.push_back({kind, pos, std::move(result), {}, {}, halves});
  }

  BraidWord cur_;
  long halves_ = 0;
  Certificate cert_;
};

// closure of d^n, n = 1 or 2 mod 3
void untwist_torus(Script& s, long n) {
  if (mod3(n) == 2) {
    s.rewrite(deltas(n - 1) * W("ba"));
    s.crossing_change(static_cast<std::size_t>(n - 1));
    s.conjugate(deltas(n - 1));
    --n;
  }
  if (n >= 4) s.trusted("torus knot T(3," + std::to_string(n) + ")", deltas(1));
}

// d^{3l+2} a^u
void untwist_exact1(Script& s, long l, long u) {
  const long n = 3 * l + 2;
  for (; u > 2; u -= 2) s.crossing_change(static_cast<std::size_t>(n + u - 1));
  for (;; --l) {
    if (l == 0) {
      s.rewrite(W("a b a^4"));
      s.crossing_change(5);
      s.crossing_change(3);
      return;
    }
    s.rewrite(deltas(3 * l - 3) * W("x^5 b x a b x a^2"));
    s.conjugate(deltas(3 * l - 3) * W("b^5 a b x a b x x"));
    s.annihilate(static_cast<std::size_t>(3 * l - 3 + 5));
    if (l == 1) {
      s.crossing_change(4);
      s.crossing_change(2);
      return;
    }
    s.conjugate(deltas(3 * (l - 1) + 2) * W("a^2"));
  }
}

// d^{3l+1} a^u b^v
void untwist_exact2(Script& s, long l, long u, long v) {
  const long n = 3 * l + 1;
  for (; v > 2; v -= 2) s.crossing_change(static_cast<std::size_t>(n + u + v - 1));
  for (; u > 2; u -= 2) s.crossing_change(static_cast<std::size_t>(n + u - 1));
  for (;; l -= 2) {
    if (l == 0) {
      s.crossing_change(4);
      s.crossing_change(2);
      return;
    }
    if (l == 1) {
      s.conjugate(W("a b^4 a b x a b x x"));
      s.annihilate(5);
      s.crossing_change(4);
      s.crossing_change(2);
      return;
    }
    s.conjugate(deltas(3 * l - 3) * W("a b^4 a b x a b x x"));
    s.annihilate(static_cast<std::size_t>(3 * l - 3 + 5));
    s.conjugate(deltas(3 * l - 6) * W("a^3 b^3 a b x a b x"));
    s.annihilate(static_cast<std::size_t>(3 * l - 6 + 6));
    s.conjugate(deltas(3 * (l - 2) + 1) * W("a^2 b^2"));
  }
}

BraidWord reduced_even(long r, long l) {
  return taus({1 - r}) * deltas(3 * l + r - 1) * squares(1, r - 2) * taus({r - 1, r, r + 1}) * squares(r + 2, 2 * r);
}

BraidWord reduced_odd(long r, long l) {
  return taus({1 - r}) * deltas(3 * l + r + 1) * squares(1, r - 1) * taus({r, r + 1, r + 2}) *
         squares(r + 3, 2 * r + 1);
}

// d^n tau_1^{u_1} ... tau_t^{u_t} with all u_i >= 2, 2n >= t, t >= 3
void untwist_braid_positive(Script& s, const XuForm& f) {
  const long t = f.t();
  const bool even = t % 2 == 0;
  const long r = t / 2;
  const long l = even ? (f.n - r) / 3 : (f.n - r - 2) / 3;
  const long first_one = even ? r - 1 : r;

  std::vector<long> start(static_cast<std::size_t>(t));
  long pos = f.n;
  for (long i = 0; i < t; ++i) {
    start[static_cast<std::size_t>(i)] = pos;
    pos += f.u[static_cast<std::size_t>(i)];
  }
  for (long i = t; i >= 1; --i) {
    const long keep = (i >= first_one && i < first_one + 3) ? 1 : 2;
    for (long k = f.u[static_cast<std::size_t>(i - 1)]; k > keep; --k) {
      s.saddle(static_cast<std::size_t>(start[static_cast<std::size_t>(i - 1)]));
    }
  }
  s.saddle_to(0, tau(1 - r));

  long rr = r;
  if (even) {
    for (; rr >= 3; --rr) {
      const BraidWord head = taus({1 - rr}) * deltas(3 * l + rr - 2) * squares(1, rr - 3, -1) * taus({rr - 3, rr - 2});
      s.conjugate(head * window(rr - 3) * taus({rr + 2}) * squares(rr + 3, 2 * rr));
      s.annihilate(head.size());
      s.conjugate(reduced_even(rr - 1, l));
    }
    s.conjugate(deltas(3 * l) * taus({2}) * window(1) * taus({6}));
    s.annihilate(static_cast<std::size_t>(3 * l + 1));
    s.conjugate(deltas(3 * l + 1));
    untwist_torus(s, 3 * l + 1);
    return;
  }
  for (; rr >= 3; --rr) {
    const BraidWord head = taus({1 - rr}) * deltas(3 * l + rr) * squares(1, rr - 2, -1) * taus({rr - 2, rr - 1});
    s.conjugate(head * window(rr - 2) * taus({rr + 3}) * squares(rr + 4, 2 * rr + 1));
    s.annihilate(head.size());
    s.conjugate(reduced_odd(rr - 1, l));
  }
  if (rr == 2) {
    const BraidWord head = taus({0}) * deltas(3 * l + 2) * taus({1, 2});
    s.conjugate(head * window(1) * taus({6}));
    s.annihilate(head.size());
  }
  s.conjugate(deltas(3 * l + 4));
  untwist_torus(s, 3 * l + 4);
}

// (abx)^{2k} a b x^2 a b x^2
void untwist_abx(Script& s, long k) {
  BraidWord w;
  for (long i = 0; i < 2 * k; ++i) w *= W("abx");
  s.conjugate(w * W("a b x^2 a b x^2"));
  for (long i = 0; i < k; ++i) s.annihilate(0);
  s.conjugate(W("a^2 b x a^2 b x"));
  s.trusted("tangle move on a b x a^2 b x", W("ab"));
}

bool is_abx_family(const XuForm& f, long& k) {
  if (f.n != 0 || f.t() < 6 || f.t() % 6 != 0) return false;
  k = f.t() / 6 - 1;
  std::vector<long> want(static_cast<std::size_t>(6 * k + 2), 1);
  for (long v : {2, 1, 1, 2}) want.push_back(v);
  return f.u == want;
}

}  // namespace

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::CrossingChange:
      return "crossing-change";
    case MoveKind::Annihilate:
      return "annihilate";
    case MoveKind::Saddle:
      return "saddle";
    case MoveKind::Rewrite:
      return "rewrite";
    case MoveKind::Conjugate:
      return "conjugate";
    case MoveKind::Trusted:
      return "untwist";
  }
  return "?";
}

std::string describe(const Move& m) {
  std::string out = to_string(m.kind);
  switch (m.kind) {
    case MoveKind::CrossingChange:
    case MoveKind::Annihilate:
    case MoveKind::Saddle:
      out += " at " + std::to_string(m.position);
      break;
    case MoveKind::Trusted:
      out += " " + m.label + " (" + std::to_string(m.half_weight / 2) + " twists)";
      break;
    default:
      break;
  }
  const std::string w = to_string(m.result);
  return out + " -> " + (w.empty() ? "1" : w);
}

bool is_unknot_form(const XuForm& f) {
  static const XuForm forms[3] = {xu_normalize(W("ab")), xu_normalize(W("aB")), xu_normalize(W("AB"))};
  return std::find(std::begin(forms), std::end(forms), f) != std::end(forms);
}

void replay(const Certificate& c) {
  BraidWord cur = c.start;
  if (closure_components(cur) != 1) fail(0, "start does not close to a knot");
  long halves = 0;
  bool in_saddles = false;
  for (std::size_t i = 0; i < c.moves.size(); ++i) {
    const Move& m = c.moves[i];
    const std::size_t step = i + 1;
    const bool local = m.kind == MoveKind::CrossingChange || m.kind == MoveKind::Annihilate || m.kind == MoveKind::Saddle;
    if (local && m.position >= cur.size()) fail(step, "position out of range");
    switch (m.kind) {
      case MoveKind::CrossingChange: {
        if (m.half_weight != 2) fail(step, "crossing change must weigh one twist");
        if (cur[m.position].gen == Generator::Delta) fail(step, "crossing change on delta");
        if (!braids_equal(m.result, replace(cur, m.position, cur[m.position].inverse()))) fail(step, "wrong result");
        break;
      }
      case MoveKind::Annihilate: {
        if (m.half_weight != 4) fail(step, "annihilation must weigh two twists");
        if (m.position + 6 > cur.size()) fail(step, "window out of range");
        for (std::size_t j = 0; j < 6; ++j) {
          const Letter l = cur[m.position + j];
          if (l.gen == Generator::Delta || l.sign < 0) fail(step, "window is not positive");
          if (j > 0 && mod3(tau_index(l.gen) - tau_index(cur[m.position + j - 1].gen)) != 1) {
            fail(step, "window is not tau_i ... tau_{i+5}");
          }
        }
        if (!braids_equal(m.result, erase(cur, m.position, 6))) fail(step, "wrong result");
        break;
      }
      case MoveKind::Saddle: {
        if (m.half_weight != 1) fail(step, "saddle must weigh one half");
        const Letter l = cur[m.position];
        if (l.sign < 0) fail(step, "saddle on a negative letter");
        bool ok = false;
        if (l.gen == Generator::Delta) {
          for (Generator g : {Generator::A, Generator::B, Generator::X}) {
            ok = ok || braids_equal(m.result, replace(cur, m.position, {g, 1}));
          }
        } else {
          ok = braids_equal(m.result, erase(cur, m.position, 1));
        }
        if (!ok) fail(step, "wrong result");
        break;
      }
      case MoveKind::Rewrite:
        if (m.half_weight != 0 || !braids_equal(m.result, cur)) fail(step, "rewrite changes the braid");
        break;
      case MoveKind::Conjugate:
        if (m.half_weight != 0 || !conjugate_in_b3(m.result, cur)) fail(step, "not a conjugate");
        break;
      case MoveKind::Trusted: {
        if (!conjugate_in_b3(m.source, cur)) fail(step, "source does not match the current word");
        const std::optional<long> w = trusted_half_weight(m.source);
        if (!w || *w != m.half_weight) fail(step, "undeclared untwisting");
        if (!is_unknot_form(xu_normalize(m.result))) fail(step, "untwisting must end in the unknot");
        break;
      }
    }
    const bool saddle = m.kind == MoveKind::Saddle;
    if (saddle && !in_saddles && closure_components(cur) != 1) fail(step, "saddles must start at a knot");
    cur = m.result;
    halves += m.half_weight;
    const bool next_saddle = i + 1 < c.moves.size() && c.moves[i + 1].kind == MoveKind::Saddle;
    if (saddle && !next_saddle && closure_components(cur) != 1) fail(step, "saddles must end at a knot");
    in_saddles = saddle && next_saddle;
  }
  if (halves != 2 * c.bound) fail(c.moves.size(), "declared bound does not match the move weights");
  if (!is_unknot_form(xu_normalize(cur))) fail(c.moves.size(), "last word is not an unknot");
}

std::optional<Certificate> g4top_upper_from_twisting(const XuForm& f) {
  if (f.n < 0) throw NotStronglyQuasipositive();
  const BraidWord start = to_word(f);
  const int comps = closure_components(start);
  if (comps != 1) throw NotAKnot(comps);

  const long t = f.t();
  std::optional<Script> s;
  long k = 0;
  if (t == 0) {
    s.emplace(start, "torus");
    untwist_torus(*s, f.n);
  } else if (t == 1 && mod3(f.n) == 2) {
    s.emplace(start, "d^{3l+2} a^u");
    untwist_exact1(*s, (f.n - 2) / 3, f.u[0]);
  } else if (t == 2 && mod3(f.n) == 1) {
    s.emplace(start, "d^{3l+1} a^u b^v");
    untwist_exact2(*s, (f.n - 1) / 3, f.u[0], f.u[1]);
  } else if (is_abx_family(f, k)) {
    s.emplace(start, "(abx)^{2k} a b x^2 a b x^2");
    untwist_abx(*s, k);
  } else if (t >= 3 && 2 * f.n >= t && std::all_of(f.u.begin(), f.u.end(), [](long v) { return v >= 2; })) {
    s.emplace(start, "braid positive");
    untwist_braid_positive(*s, f);
  } else {
    return std::nullopt;
  }
  Certificate c = s->finish();
  replay(c);
  return c;
}

}  // namespace braid3
