#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braid3/errors.hpp"
#include "braid3/seifert.hpp"

using namespace braid3;

namespace {

BraidWord W(const char* s) { return parse_braid_word(s); }

std::vector<BigInt> P(std::initializer_list<long> c) {
  std::vector<BigInt> out;
  for (long v : c) out.emplace_back(v);
  return out;
}

long det_long(const IntMatrix& m) {
  // Bareiss elimination, exact for small integer matrices
  const long n = m.rows();
  if (n == 0) return 1;
  Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic> a(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) a(i, j) = m(i, j);
  BigInt prev = 1;
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      long piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    }
    prev = a(k, k);
  }
  return sign * static_cast<long>(a(n - 1, n - 1));
}

BraidWord random_word(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> gen(0, 3), sign(0, 1);
  BraidWord w;
  for (std::size_t i = 0; i < len; ++i) w.push_back({static_cast<Generator>(gen(rng)), sign(rng) ? 1 : -1});
  return w;
}

BraidWord random_knot(std::mt19937& rng, std::size_t len) {
  for (;;) {
    BraidWord w = random_word(rng, len);
    if (closure_components(w) == 1) return w;
  }
}

}  // namespace

TEST_CASE("trefoil calibration") {
  const SeifertData s = seifert_matrix(W("b a b a"));
  CHECK(s.matrix.rows() == 2);
  CHECK(s.alexander == P({1, -1, 1}));
  CHECK(levine_tristram_at(s, 0.5) == -2);
  CHECK(levine_tristram_at(s, 1.0 / 12) == 0);
  CHECK(signature_oracle(W("d^2")) == -2);
  CHECK(signature_oracle(mirror_braid(W("d^2"))) == 2);
  const auto j = unit_circle_jumps(s);
  REQUIRE(j.size() == 1);
  CHECK(j[0].theta == doctest::Approx(1.0 / 6).epsilon(1e-9));
  CHECK(j[0].multiplicity == 1);
}

TEST_CASE("figure-eight") {
  const SeifertData s = seifert_matrix(W("aB aB"));
  CHECK(s.matrix.rows() == 2);
  CHECK(s.alexander == P({-1, 3, -1}));
  CHECK(unit_circle_jumps(s).empty());
  for (double th : {0.05, 0.2, 0.37, 0.5}) CHECK(levine_tristram_at(s, th) == 0);
  const SignatureProfile prof = sigma_hat_and_profile(s);
  CHECK(prof.sigma_hat == 0);
  CHECK(prof.arcs.size() == 1);
}

TEST_CASE("unknot and small examples") {
  CHECK(seifert_matrix(W("ab")).alexander == P({1}));
  CHECK(seifert_matrix(W("d a^2 b^2")).matrix.rows() == 4);
  CHECK(signature_oracle(W("d a^2 b^2")) == -4);
  CHECK_THROWS_AS(seifert_matrix(W("a^3")), DisconnectedSurface);
  CHECK_THROWS_AS(signature_oracle(W("a")), NotAKnot);
}

TEST_CASE("T(2,5) jumps") {
  const SeifertData s = seifert_matrix(W("a^5 b"));
  CHECK(s.alexander == P({1, -1, 1, -1, 1}));
  const auto j = unit_circle_jumps(s);
  REQUIRE(j.size() == 2);
  CHECK(j[0].theta == doctest::Approx(0.1).epsilon(1e-9));
  CHECK(j[1].theta == doctest::Approx(0.3).epsilon(1e-9));
  const SignatureProfile prof = sigma_hat_and_profile(s);
  REQUIRE(prof.arcs.size() == 3);
  CHECK(prof.arcs[0].value == 0);
  CHECK(prof.arcs[1].value == -2);
  CHECK(prof.arcs[2].value == -4);
  CHECK(prof.sigma_hat == 4);
}

TEST_CASE("repeated roots are reported with multiplicity") {
  // connected sum of two trefoils: (t^2 - t + 1)^2
  const SeifertData s = seifert_matrix(W("a^3 b^3"));
  CHECK(s.alexander == P({1, -2, 3, -2, 1}));
  const auto j = unit_circle_jumps(s);
  REQUIRE(j.size() == 1);
  CHECK(j[0].multiplicity == 2);
  CHECK(sigma_hat_and_profile(s).sigma_hat == 4);
}

TEST_CASE("Seifert data agrees with the Burau Alexander polynomial") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::size_t> len(2, 14);
  for (int i = 0; i < 300; ++i) {
    const BraidWord w = random_knot(rng, len(rng));
    SeifertData s;
    try {
      s = seifert_matrix(w);
    } catch (const DisconnectedSurface&) {
      continue;
    }
    CAPTURE(to_string(w));
    CHECK(std::labs(det_long(s.matrix - s.matrix.transpose())) == 1);
    CHECK(s.alexander == burau_alexander(w));
    BigInt sum = 0;
    for (const auto& c : s.alexander) sum += c;
    CHECK(sum == 1);
    CHECK(signature_oracle(w) == levine_tristram_at(s, 0.5));
  }
}

TEST_CASE("mirror negates the profile") {
  std::mt19937 rng(8);
  for (int i = 0; i < 60; ++i) {
    const BraidWord w = random_knot(rng, 12);
    const SeifertData s = seifert_matrix(w);
    const SeifertData m = seifert_matrix(mirror_braid(w));
    const SignatureProfile ps = sigma_hat_and_profile(s);
    const SignatureProfile pm = sigma_hat_and_profile(m);
    REQUIRE(ps.arcs.size() == pm.arcs.size());
    for (std::size_t k = 0; k < ps.arcs.size(); ++k) {
      CHECK(ps.arcs[k].value == -pm.arcs[k].value);
      CHECK(ps.arcs[k].value % 2 == 0);
    }
    CHECK(ps.arcs.front().value == 0);
  }
}

TEST_CASE("degree bound and fiberedness on braid-positive words") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> gen(0, 1);
  int tested = 0;
  for (int i = 0; i < 400; ++i) {
    BraidWord w;
    for (int k = 0; k < 10; ++k) w.push_back({gen(rng) ? Generator::A : Generator::B, 1});
    if (closure_components(w) != 1) continue;
    SeifertData s;
    try {
      s = seifert_matrix(w);
    } catch (const DisconnectedSurface&) {
      continue;
    }
    // Bennequin surface of a positive braid is minimal: g = (c - 2) / 2
    CHECK(static_cast<long>(s.alexander.size()) - 1 == s.matrix.rows());
    CHECK(s.alexander.front() == 1);
    ++tested;
  }
  CHECK(tested > 20);
}

TEST_CASE("tolerance robustness") {
  std::mt19937 rng(10);
  for (int i = 0; i < 40; ++i) {
    const BraidWord w = random_knot(rng, 16);
    const SeifertData s = seifert_matrix(w);
    const auto a = unit_circle_jumps(s, 1e-9);
    const auto b = unit_circle_jumps(s, 1e-12);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k].theta - b[k].theta) < 2e-9);
  }
}

TEST_CASE("Gambaudo-Ghys deviation") {
  CHECK(gambaudo_ghys_deviation(W("d^2"), 100) <= 2.0);
  CHECK(gambaudo_ghys_deviation(W("aB aB"), 100) == doctest::Approx(0.0));
  CHECK_THROWS_AS(gambaudo_ghys_deviation(W("a"), 10), NotAKnot);
}
