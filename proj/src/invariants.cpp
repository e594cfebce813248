#include "braid3/invariants.hpp"

#include <cstdlib>
#include <stdexcept>

#include "braid3/errors.hpp"
#include "braid3/seifert.hpp"

namespace braid3 {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_knot(const BraidWord& w) {
  const int c = closure_components(w);
  if (c != 1) throw NotAKnot(c);
}

int torus_signature(long n) { return static_cast<int>(2 - 2 * n + 4 * floor_div(n, 6)); }

BraidWord word_of(std::initializer_list<std::pair<Generator, long>> syllables) {
  BraidWord w;
  for (const auto& [g, k] : syllables) w.append_power(g, k);
  return w;
}

// Normal forms of w and of its reverse; a candidate matches when its own
// normal form is one of them.
struct LinkForms {
  XuForm direct;
  XuForm reversed;

  explicit LinkForms(const BraidWord& w) : direct(xu_normalize(w)), reversed(xu_normalize(reverse_braid(w))) {}

  bool matches(const BraidWord& candidate) const {
    const XuForm f = xu_normalize(candidate);
    return f == direct || f == reversed;
  }
};

// 0 when no match, +1 for a direct match, -1 for a match of the mirror.
int match_up_to_mirror(const LinkForms& forms, const BraidWord& candidate) {
  if (forms.matches(candidate)) return 1;
  if (forms.matches(mirror_braid(candidate))) return -1;
  return 0;
}

FamilyTag tagged(Family v, std::vector<long> params, int side) { return {v, std::move(params), side < 0}; }

}  // namespace

PositivityClass positivity_class(const XuForm& f) {
  PositivityClass p;
  p.strongly_quasipositive = f.n >= 0;
  p.braid_positive = 2 * f.n >= f.t() || (f.n == 0 && f.t() == 1);
  return p;
}

bool braid_index_below_three(const BraidWord& w) {
  const LinkForms forms(w);
  const long wr = writhe(w);
  for (long k : {wr - 1, wr + 1}) {
    if (forms.matches(word_of({{Generator::A, k}, {Generator::B, wr - k}}))) return true;
  }
  return false;
}

int signature_from_xu(const XuForm& f) {
  require_knot(to_word(f));
  int sigma = 0;
  if (f.t() > 0) {
    const long num = -3 * f.U() - 4 * f.n + 2 * f.t();
    if (num % 3 != 0) throw std::logic_error("non-integral signature for " + to_string(f));
    sigma = static_cast<int>(num / 3);
  } else {
    sigma = f.n > 0 ? torus_signature(f.n) : -torus_signature(-f.n);
  }
#ifndef NDEBUG
  if (signature_oracle(to_word(f)) != sigma) {
    throw std::logic_error("signature formula disagrees with the Seifert oracle on " + to_string(f));
  }
#endif
  return sigma;
}

int signature_from_garside(const GarsideForm& g) {
  if (g.kind != GarsideCase::C && g.kind != GarsideCase::D) {
    throw UnsupportedCase(std::string("signature formula needs case C or D, got case ") + case_letter(g.kind));
  }
  require_knot(to_word(g));
  long s = -2 * g.ell + g.r();
  for (long p : g.p) s -= p;
  return static_cast<int>(s);
}

long seifert_genus_sqp(const XuForm& f) {
  if (f.n < 0) throw NotStronglyQuasipositive();
  require_knot(to_word(f));
  const long twice = f.U() + 2 * f.n - 2;
  if (twice % 2 != 0) throw std::logic_error("non-integral genus for " + to_string(f));
  return twice / 2;
}

std::string to_string(const FamilyTag& tag) {
  std::string name;
  switch (tag.variant) {
    case Family::None:
      return "None";
    case Family::T3Torus:
      name = "T3Torus";
      break;
    case Family::T2ConnectedSum:
      name = "T2ConnectedSum";
      break;
    case Family::Pretzel:
      name = "Pretzel";
      break;
    case Family::FigureEight:
      name = "FigureEight";
      break;
  }
  if (!tag.params.empty()) {
    name += "(";
    for (std::size_t i = 0; i < tag.params.size(); ++i) {
      if (i > 0) name += ",";
      name += std::to_string(tag.params[i]);
    }
    name += ")";
  }
  return tag.mirrored ? "mirror " + name : name;
}

FamilyTag recognize_special_family(const BraidWord& w) {
  require_knot(w);
  const LinkForms forms(w);
  const long bound = std::abs(writhe(w));

  if (int side = match_up_to_mirror(forms, parse_braid_word("aBaB"))) return tagged(Family::FigureEight, {}, side);

  for (long total = 0; 2 * total + 2 <= bound + 2; ++total) {
    for (long m = 0; 2 * m <= total; ++m) {
      const long n = total - m;
      const BraidWord rep = word_of({{Generator::A, 2 * m + 1}, {Generator::B, 2 * n + 1}});
      if (int side = match_up_to_mirror(forms, rep)) return tagged(Family::T2ConnectedSum, {m, n}, side);
      if (m == 0) {
        // T(2,2n+1) is also the closure of a^{2n+1} b^-1
        const BraidWord alt = word_of({{Generator::A, 2 * n + 1}, {Generator::B, -1}});
        if (int side = match_up_to_mirror(forms, alt)) return tagged(Family::T2ConnectedSum, {0, n}, side);
      }
    }
  }

  if (forms.direct.t() == 0 && std::abs(forms.direct.n) >= 4) {
    const long n = forms.direct.n;
    return tagged(Family::T3Torus, {std::abs(n)}, n > 0 ? 1 : -1);
  }

  for (long p = 1; 2 * p + 2 <= bound; ++p) {
    for (long q = 0; 2 * p + 2 * q + 2 <= bound; ++q) {
      const long r2 = bound - 2 * p - 2 * q - 2;
      if (r2 % 2 != 0) continue;
      const long r = r2 / 2;
      const BraidWord rep = word_of({{Generator::A, 2 * p}, {Generator::B, 2 * q + 1}, {Generator::X, 2 * r + 1}});
      if (int side = match_up_to_mirror(forms, rep)) {
        return tagged(Family::Pretzel, {2 * p, 2 * q + 1, 2 * r + 1}, side);
      }
    }
  }
  return {};
}

std::string to_string(Top4Verdict v) {
  switch (v) {
    case Top4Verdict::Equal:
      return "Equal";
    case Top4Verdict::Strict:
      return "Strict";
    case Top4Verdict::FigureEight:
      return "FigureEight";
  }
  return "?";
}

Top4Classification classify_top4genus(const BraidWord& w) {
  Top4Classification out;
  out.family = recognize_special_family(w);
  switch (out.family.variant) {
    case Family::FigureEight:
      out.verdict = Top4Verdict::FigureEight;
      return out;
    case Family::T2ConnectedSum:
    case Family::Pretzel:
      out.verdict = Top4Verdict::Equal;
      break;
    case Family::T3Torus:
      out.verdict = out.family.params[0] <= 5 ? Top4Verdict::Equal : Top4Verdict::Strict;
      break;
    case Family::None:
      out.verdict = Top4Verdict::Strict;
      break;
  }
  if (out.verdict == Top4Verdict::Equal) {
    XuForm f = xu_normalize(w);
    if (f.n < 0) f = xu_normalize(mirror_braid(w));
    if (f.n >= 0 && std::abs(signature_from_xu(f)) != 2 * seifert_genus_sqp(f)) {
      throw std::logic_error("|sigma| != 2g on an equality-family member " + to_string(f));
    }
  }
  return out;
}

}  // namespace braid3
