#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braid3/errors.hpp"
#include "braid3/four_genus.hpp"
#include "braid3/invariants.hpp"
#include "braid3/seifert.hpp"
#include "braid3/twisting.hpp"

using namespace braid3;

namespace {

XuForm F(long n, std::vector<long> u) { return {n, std::move(u)}; }

XuForm abx(long k) {
  std::vector<long> u(static_cast<std::size_t>(6 * k + 2), 1);
  for (long v : {2, 1, 1, 2}) u.push_back(v);
  return {0, u};
}

long count(const Certificate& c, MoveKind k) {
  long out = 0;
  for (const Move& m : c.moves) out += m.kind == k ? 1 : 0;
  return out;
}

long halves(const Certificate& c) {
  long out = 0;
  for (const Move& m : c.moves) {
    switch (m.kind) {
      case MoveKind::CrossingChange:
        out += 2;
        break;
      case MoveKind::Annihilate:
        out += 4;
        break;
      case MoveKind::Saddle:
        out += 1;
        break;
      case MoveKind::Trusted:
        out += m.half_weight;
        break;
      default:
        break;
    }
  }
  return out;
}

int abs_sigma(const XuForm& f) { return std::abs(signature_oracle(to_word(f))); }

int sigma_hat(const XuForm& f) { return sigma_hat_and_profile(seifert_matrix(to_word(f))).sigma_hat; }

// Checks shared by every certificate: replay, weights, and the lower bounds it must respect.
void check_sound(const XuForm& f, const Certificate& c) {
  CHECK_NOTHROW(replay(c));
  CHECK(halves(c) == 2 * c.bound);
  CHECK(c.start == to_word(f));
  CHECK(2 * c.bound >= abs_sigma(f));
  CHECK(2 * c.bound >= sigma_hat(f));
  CHECK(c.bound <= seifert_genus_sqp(f));
}

}  // namespace

TEST_CASE("torus knots") {
  for (long n : {1, 2, 4, 5, 7, 8, 10, 11, 13}) {
    CAPTURE(n);
    const auto c = g4top_upper_from_twisting(F(n, {}));
    REQUIRE(c.has_value());
    CHECK(c->family == "torus");
    // the 4-genus of T(3,n)
    CHECK(c->bound == std::min(n - 1, (2 * n + 2) / 3));
    check_sound(F(n, {}), *c);
  }
  CHECK(g4top_upper_from_twisting(F(7, {}))->bound == 5);
}

TEST_CASE("d^{3l+2} a^u") {
  const auto c = g4top_upper_from_twisting(F(2, {4}));
  REQUIRE(c.has_value());
  CHECK(c->bound == 3);
  for (long l = 0; l <= 2; ++l) {
    for (long u = 2; u <= 8; u += 2) {
      const XuForm f = F(3 * l + 2, {u});
      CAPTURE(to_string(f));
      const auto cert = g4top_upper_from_twisting(f);
      REQUIRE(cert.has_value());
      CHECK(cert->bound == u / 2 + 2 * l + 1);
      CHECK(2 * cert->bound == abs_sigma(f));
      check_sound(f, *cert);
    }
  }
}

TEST_CASE("d^{3l+1} a^u b^v") {
  for (long l = 0; l <= 2; ++l) {
    for (long u = 2; u <= 6; u += 2) {
      for (long v = 2; v <= 6; v += 2) {
        const XuForm f = F(3 * l + 1, {u, v});
        CAPTURE(to_string(f));
        const auto cert = g4top_upper_from_twisting(f);
        REQUIRE(cert.has_value());
        CHECK(cert->bound == (u + v) / 2 + 2 * l);
        CHECK(2 * cert->bound == abs_sigma(f));
        check_sound(f, *cert);
      }
    }
  }
}

TEST_CASE("(abx)^{2k} a b x^2 a b x^2") {
  for (long k = 0; k <= 2; ++k) {
    CAPTURE(k);
    const XuForm f = abx(k);
    const auto c = g4top_upper_from_twisting(f);
    REQUIRE(c.has_value());
    CHECK(c->bound == 2 * k + 2);
    CHECK(count(*c, MoveKind::Annihilate) == k);
    CHECK(count(*c, MoveKind::Trusted) == 1);
    CHECK(c->moves.back().half_weight == 4);
    check_sound(f, *c);
    CHECK(seifert_genus_sqp(f) == 3 * k + 3);
    CHECK(sigma_hat(f) == 4 * k + 4);
  }
}

TEST_CASE("braid positive forms") {
  long seen = 0;
  for (long t = 3; t <= 6; ++t) {
    for (long n = (t + 1) / 2; n <= 6; ++n) {
      long combos = 1;
      for (long i = 0; i < t; ++i) combos *= 2;
      for (long code = 0; code < combos; ++code) {
        XuForm f{n, {}};
        for (long i = 0; i < t; ++i) f.u.push_back(2 + ((code >> i) & 1));
        if (!is_xu_normal(f) || closure_components(to_word(f)) != 1) continue;
        CAPTURE(to_string(f));
        const auto c = g4top_upper_from_twisting(f);
        REQUIRE(c.has_value());
        if (c->family != "braid positive") continue;
        const long s = abs_sigma(f);
        CHECK(2 * c->bound <= s + (2 * n == t ? 0 : 2));
        check_sound(f, *c);
        ++seen;
      }
    }
  }
  CHECK(seen > 10);
}

TEST_CASE("no script and preconditions") {
  CHECK_FALSE(g4top_upper_from_twisting(F(0, {2, 3, 3})).has_value());
  CHECK_FALSE(g4top_upper_from_twisting(F(1, {1, 2, 1, 2})).has_value());
  CHECK_THROWS_AS(g4top_upper_from_twisting(F(-2, {2, 2})), NotStronglyQuasipositive);
  CHECK_THROWS_AS(g4top_upper_from_twisting(F(3, {})), NotAKnot);
}

TEST_CASE("replay rejects tampered certificates") {
  const Certificate good = *g4top_upper_from_twisting(F(2, {4}));
  REQUIRE_NOTHROW(replay(good));

  Certificate c = good;
  c.bound += 1;
  CHECK_THROWS_AS(replay(c), InvalidForm);

  c = good;
  c.moves.pop_back();
  CHECK_THROWS_AS(replay(c), InvalidForm);

  c = good;
  for (Move& m : c.moves) {
    if (m.kind == MoveKind::CrossingChange) {
      m.half_weight = 1;
      break;
    }
  }
  CHECK_THROWS_AS(replay(c), InvalidForm);

  c = good;
  for (Move& m : c.moves) {
    if (m.kind == MoveKind::CrossingChange) {
      m.result = m.result * parse_braid_word("a");
      break;
    }
  }
  CHECK_THROWS_AS(replay(c), InvalidForm);

  c = good;
  c.moves.insert(c.moves.begin(), Move{MoveKind::Conjugate, 0, parse_braid_word("d^2 a^3"), {}, "", 0});
  CHECK_THROWS_AS(replay(c), InvalidForm);

  c = good;
  c.start = parse_braid_word("d^2 a^2");
  CHECK_THROWS_AS(replay(c), InvalidForm);

  Certificate a = *g4top_upper_from_twisting(abx(1));
  for (Move& m : a.moves) {
    if (m.kind == MoveKind::Annihilate) {
      m.position = 8;
      break;
    }
  }
  CHECK_THROWS_AS(replay(a), InvalidForm);

  a = *g4top_upper_from_twisting(abx(1));
  a.moves.back().half_weight = 2;
  a.bound -= 1;
  CHECK_THROWS_AS(replay(a), InvalidForm);

  Certificate t = *g4top_upper_from_twisting(F(7, {}));
  t.moves.back().source = parse_braid_word("d^4");
  CHECK_THROWS_AS(replay(t), InvalidForm);
}

TEST_CASE("unknot forms") {
  CHECK(is_unknot_form(F(1, {})));
  CHECK(is_unknot_form(F(-1, {})));
  CHECK(is_unknot_form(xu_normalize(parse_braid_word("AB"))));
  CHECK(is_unknot_form(xu_normalize(parse_braid_word("a B"))));
  CHECK_FALSE(is_unknot_form(F(2, {})));
}

TEST_CASE("certificates tighten the g4 report") {
  const G4Report r = defect_and_g4top_bounds(F(13, {}));
  CHECK(r.genus == 12);
  CHECK(r.g4top_upper == 9);
  CHECK_FALSE(r.certificate.empty());

  const G4Report s = defect_and_g4top_bounds(abx(1));
  CHECK(s.g4top_upper == 4);
  CHECK(s.family == "(abx)^{2k} a b x^2 a b x^2");
  CHECK(s.exact);
}
