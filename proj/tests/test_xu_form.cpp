#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braid3/burau.hpp"
#include "braid3/xu_form.hpp"
#include "support/conjugacy_search.hpp"

using namespace braid3;

namespace {

BraidWord W(const char* s) { return parse_braid_word(s); }

XuForm F(long n, std::vector<long> u) { return XuForm{n, std::move(u)}; }

BraidWord random_word(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> gen(0, 3), sign(0, 1);
  BraidWord w;
  for (std::size_t i = 0; i < len; ++i) w.push_back({static_cast<Generator>(gen(rng)), sign(rng) ? 1 : -1});
  return w;
}

}  // namespace

TEST_CASE("normal forms of the reference words") {
  CHECK(xu_normalize(W("ab")) == F(1, {}));
  CHECK(xu_normalize(W("A")) == F(-1, {1}));
  CHECK(xu_normalize(W("aB aB")) == F(-2, {2, 2}));
  CHECK(xu_normalize(W("a^5 b")) == F(2, {2}));
  CHECK(xu_normalize(W("d^2")) == F(2, {}));
  CHECK(xu_normalize(W("a^3 b")) == F(2, {}));
  CHECK(xu_normalize(W("d a^2 b^2")) == F(1, {2, 2}));
  CHECK(xu_normalize(BraidWord{}) == F(0, {}));
}

TEST_CASE("reference forms are conjugate to their inputs by brute-force search") {
  for (const char* s : {"ab", "A", "aB aB", "a^5 b", "a^3 b", "aB", "AB", "a^4 b^3 x^5"}) {
    const BraidWord w = W(s);
    const XuForm f = xu_normalize(w);
    CAPTURE(s);
    CHECK(oracle::find_conjugator(w, to_word(f)).has_value());
  }
}

TEST_CASE("unknot detector forms") {
  CHECK(xu_normalize(W("ab")) == F(1, {}));
  CHECK(xu_normalize(W("aB")) == F(-1, {2}));
  CHECK(xu_normalize(W("AB")) == F(-1, {}));
}

TEST_CASE("is_xu_normal") {
  CHECK(is_xu_normal(2, std::vector<long>{3}));
  CHECK_FALSE(is_xu_normal(1, std::vector<long>{2}));
  CHECK(is_xu_normal(1, std::vector<long>{1}));
  CHECK(is_xu_normal(0, std::vector<long>{2, 3, 3}));
  CHECK_FALSE(is_xu_normal(0, std::vector<long>{3, 3, 2}));
  CHECK_FALSE(is_xu_normal(0, std::vector<long>{2, 2}));
  CHECK_FALSE(is_xu_normal(1, std::vector<long>{0, 2}));
  CHECK(is_xu_normal(5, std::vector<long>{}));
}

TEST_CASE("serialization") {
  CHECK(to_string(F(1, {2, 2})) == "d^1 a^2 b^2");
  CHECK(to_string(F(-2, {2, 2})) == "d^-2 a^2 b^2");
  CHECK(to_string(F(2, {})) == "d^2");
  CHECK(to_string(F(0, {1, 1, 1})) == "d^0 a b x");
}

TEST_CASE("least rotation") {
  CHECK(least_rotation(std::vector<long>{3, 3, 2}) == 2);
  CHECK(least_rotation(std::vector<long>{2, 1, 2, 1}) == 1);
  CHECK(least_rotation(std::vector<long>{1, 1, 1}) == 0);
}

TEST_CASE("conjugacy decisions") {
  CHECK(conjugate_in_b3(W("ab"), W("ba")));
  CHECK_FALSE(conjugate_in_b3(W("a^4 b^3 x^5"), W("a^4 b^5 x^3")));
  CHECK(conjugate_in_b3(W("d^2"), W("a^3 b")));
}

TEST_CASE("link relation and exceptional families") {
  CHECK(same_closure_link(W("ab"), W("aB")));
  CHECK(same_closure_link(W("AB"), W("aB")));
  CHECK(link_relation(W("a^4 b^3 x^5"), W("a^4 b^5 x^3")) == LinkRelation::SameLinkNotConjugate);
  CHECK(link_relation(W("d"), W("d^2")) == LinkRelation::Different);
  CHECK(link_relation(W("ab"), W("ba")) == LinkRelation::Conjugate);
  for (int n = 2; n <= 5; ++n) {
    BraidWord u = power_word(Generator::A, n) * W("b");
    BraidWord v = power_word(Generator::A, n) * W("B");
    CAPTURE(n);
    CHECK_FALSE(conjugate_in_b3(u, v));
    CHECK(link_relation(u, v) == LinkRelation::SameLinkNotConjugate);
  }
  CHECK(link_relation(W("a^-3 b"), W("a^-3 b^-1")) == LinkRelation::SameLinkNotConjugate);
  CHECK(link_relation(W("a^2 b^3 x^5"), W("a^2 b^5 x^3")) == LinkRelation::SameLinkNotConjugate);
  CHECK(link_relation(W("a^4 b^3 x^5").inverse(), W("a^4 b^5 x^3").inverse()) ==
        LinkRelation::SameLinkNotConjugate);
  CHECK(link_relation(W("a^4 b^3 x^5"), W("a^4 b^3 x^6")) == LinkRelation::Different);
}

TEST_CASE("canonical link form") {
  CHECK(canonical_link_form(W("d a^2 b^2")) == F(1, {2, 2}));
  CHECK(canonical_link_form(W("a^4 b^3 x^5")) == canonical_link_form(W("x^5 a^3 b^4")));
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const BraidWord w = random_word(rng, 12);
    CHECK(canonical_link_form(w) == canonical_link_form(reverse_braid(w)));
  }
}

TEST_CASE("properties on random words") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> len(0, 20);
  for (int i = 0; i < 300; ++i) {
    const BraidWord w = random_word(rng, len(rng));
    const XuResult r = xu_normalize_certified(w);
    CHECK(is_xu_normal(r.form));
    CHECK(writhe(w) == 2 * r.form.n + r.form.U());
    CHECK(braids_equal(r.conjugator.inverse() * w * r.conjugator, to_word(r.form)));
    CHECK(xu_normalize(to_word(r.form)) == r.form);
    for (int j = 0; j < 5; ++j) {
      const BraidWord g = random_word(rng, 6);
      CHECK(xu_normalize(g * w * g.inverse()) == r.form);
    }
  }
}

TEST_CASE("exhaustive short words: brute-force uniqueness of normal forms") {
  // Any normal tuple reachable from w by a short conjugator must equal xu(w).
  std::vector<XuForm> candidates;
  for (long n = -4; n <= 4; ++n) {
    for (long total = 0; total <= 6; ++total) {
      // compositions of total into positive parts
      std::vector<std::vector<long>> comps;
      if (total == 0) comps.push_back({});
      for (unsigned mask = 0; total > 0 && mask < (1u << (total - 1)); ++mask) {
        std::vector<long> c{1};
        for (long k = 1; k < total; ++k) {
          if (mask & (1u << (k - 1))) c.push_back(1);
          else ++c.back();
        }
        comps.push_back(c);
      }
      for (auto& u : comps) {
        if (is_xu_normal(n, u)) candidates.push_back(F(n, u));
      }
    }
  }
  std::size_t hits = 0;
  for (std::size_t len = 0; len <= 4; ++len) {
    for (const BraidWord& w : oracle::all_standard_words(len)) {
      const XuForm f = xu_normalize(w);
      for (const XuForm& c : candidates) {
        if (2 * c.n + c.U() != writhe(w)) continue;
        if (!(c == f) && oracle::find_conjugator(w, to_word(c), 2)) {
          FAIL_CHECK("distinct normal form conjugate to " << to_string(w));
        }
        if (c == f) ++hits;
      }
    }
  }
  CHECK(hits > 0);
}
