#include "braid3/seifert.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_int.hpp>

#include "braid3/burau.hpp"
#include "braid3/errors.hpp"

namespace braid3 {

namespace {

using boost::multiprecision::cpp_rational;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Calibrated so that the closure of d^2 has signature -2.
constexpr long kSeifertSign = 1;

// ---------------------------------------------------------------- surface

BraidWord cyclically_reduced_standard(const BraidWord& w) {
  std::vector<Letter> v;
  for (const Letter& l : free_reduce(expand_to_standard(w))) v.push_back(l);
  std::size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo] == v[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return BraidWord(std::vector<Letter>(v.begin() + static_cast<long>(lo), v.begin() + static_cast<long>(hi)));
}

IntMatrix seifert_form(const BraidWord& w) {
  const BraidWord red = cyclically_reduced_standard(w);
  std::vector<int> x;
  bool has[3] = {false, false, false};
  for (const Letter& l : red) {
    const int g = l.gen == Generator::A ? 1 : 2;
    has[g] = true;
    x.push_back(l.sign * g);
  }
  if (!has[1] || !has[2]) throw DisconnectedSurface("braid closure surface is disconnected: a generator is absent");

  const std::size_t c = x.size();
  // h[i]: next crossing on the same level, 0 if none
  std::vector<std::size_t> h(c, 0);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      if (std::abs(x[j]) == std::abs(x[i])) {
        h[i] = j;
        break;
      }
    }
  }
  std::vector<std::size_t> indices;
  std::vector<long> slot(c, -1);
  for (std::size_t i = 0; i < c; ++i) {
    if (h[i] != 0) {
      slot[i] = static_cast<long>(indices.size());
      indices.push_back(i);
    }
  }
  const long m = static_cast<long>(indices.size());
  IntMatrix a = IntMatrix::Zero(m, m);
  for (std::size_t i : indices) {
    const std::size_t hi = h[i];
    const long si = slot[i];
    const int sum = x[i] + x[hi];
    a(si, si) = sum > 0 ? -1 : (sum < 0 ? 1 : 0);
    for (std::size_t j = i + 1; j < c; ++j) {
      if (h[j] == 0) continue;
      const long sj = slot[j];
      if (hi > h[j] || hi < j) continue;
      if (hi == j) {
        if (x[j] > 0) {
          a(sj, si) = 1;
        } else {
          a(si, sj) = -1;
        }
        continue;
      }
      const int d = std::abs(x[i]) - std::abs(x[j]);
      if (d == 1) {
        a(sj, si) = -1;
      } else if (d == -1) {
        a(si, sj) = 1;
      }
    }
  }
  return kSeifertSign * a;
}

// ---------------------------------------------------------------- modular determinant

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 y = powmod(a, d, n);
    if (y == 1 || y == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      y = mulmod(y, y, n);
      if (y == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

const std::vector<u64>& primes_61() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    for (u64 n = (1ULL << 61) - 1; out.size() < 64; n -= 2) {
      if (is_prime(n)) out.push_back(n);
    }
    return out;
  }();
  return primes;
}

u64 to_mod(long v, u64 p) {
  const long r = v % static_cast<long>(p);
  return static_cast<u64>(r < 0 ? r + static_cast<long>(p) : r);
}

u64 det_mod(std::vector<std::vector<u64>> m, u64 p) {
  const std::size_t n = m.size();
  u64 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = (p - det) % p;
    }
    det = mulmod(det, m[col][col], p);
    const u64 inv = powmod(m[col][col], p - 2, p);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const u64 f = mulmod(m[r][col], inv, p);
      for (std::size_t k = col; k < n; ++k) {
        m[r][k] = (m[r][k] + p - mulmod(f, m[col][k], p)) % p;
      }
    }
  }
  return det;
}

// Coefficients of det(A - t A^T) modulo p, degree <= m.
std::vector<u64> alexander_mod(const IntMatrix& a, u64 p) {
  const long m = a.rows();
  std::vector<u64> xs, ys;
  for (long k = 0; k <= m; ++k) {
    const u64 t = static_cast<u64>(k);
    std::vector<std::vector<u64>> mat(static_cast<std::size_t>(m), std::vector<u64>(static_cast<std::size_t>(m)));
    for (long i = 0; i < m; ++i) {
      for (long j = 0; j < m; ++j) {
        const u64 aij = to_mod(a(i, j), p);
        const u64 aji = to_mod(a(j, i), p);
        mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (aij + p - mulmod(t, aji, p)) % p;
      }
    }
    xs.push_back(t);
    ys.push_back(det_mod(std::move(mat), p));
  }
  // Newton divided differences, then expand into monomial coefficients.
  const std::size_t n = xs.size();
  std::vector<u64> coef = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      const u64 num = (coef[i] + p - coef[i - 1]) % p;
      const u64 den = (xs[i] + p - xs[i - j]) % p;
      coef[i] = mulmod(num, powmod(den, p - 2, p), p);
      if (i == j) break;
    }
  }
  std::vector<u64> poly(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // poly = poly * (t - xs[k]) + coef[k]
    std::vector<u64> next(n, 0);
    for (std::size_t d = 0; d + 1 < n; ++d) {
      next[d + 1] = (next[d + 1] + poly[d]) % p;
      next[d] = (next[d] + p - mulmod(poly[d], xs[k], p)) % p;
    }
    next[0] = (next[0] + coef[k]) % p;
    poly = std::move(next);
  }
  return poly;
}

std::vector<BigInt> normalize_alexander(std::vector<BigInt> c) {
  std::size_t lo = 0, hi = c.size();
  while (lo < hi && c[lo] == 0) ++lo;
  while (hi > lo && c[hi - 1] == 0) --hi;
  std::vector<BigInt> out(c.begin() + static_cast<long>(lo), c.begin() + static_cast<long>(hi));
  if (out.empty()) return out;
  BigInt sum = 0;
  for (const auto& v : out) sum += v;
  if (sum < 0 || (sum == 0 && out.back() < 0)) {
    for (auto& v : out) v = -v;
  }
  return out;
}

// ---------------------------------------------------------------- rational polynomials

using RPoly = std::vector<cpp_rational>;  // ascending coefficients, no trailing zeros

void trim(RPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const RPoly& f) { return static_cast<long>(f.size()) - 1; }

RPoly derivative(const RPoly& f) {
  RPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Scales by a positive rational so the coefficients are coprime integers.
RPoly primitive(RPoly f) {
  trim(f);
  if (f.empty()) return f;
  BigInt l = 1;
  for (const auto& c : f) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
  BigInt g = 0;
  for (auto& c : f) {
    c *= l;
    g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(c));
  }
  if (g != 0) {
    for (auto& c : f) c /= g;
  }
  return f;
}

void divmod(const RPoly& f, const RPoly& g, RPoly& q, RPoly& r) {
  r = f;
  trim(r);
  q.assign(std::max<long>(0, degree(r) - degree(g) + 1), cpp_rational(0));
  while (!r.empty() && degree(r) >= degree(g)) {
    const long shift = degree(r) - degree(g);
    const cpp_rational factor = r.back() / g.back();
    q[static_cast<std::size_t>(shift)] = factor;
    for (std::size_t i = 0; i < g.size(); ++i) r[i + static_cast<std::size_t>(shift)] -= factor * g[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

RPoly exact_div(const RPoly& f, const RPoly& g) {
  RPoly q, r;
  divmod(f, g, q, r);
  if (!r.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

RPoly poly_gcd(RPoly f, RPoly g) {
  f = primitive(f);
  g = primitive(g);
  while (!g.empty()) {
    RPoly q, r;
    divmod(f, g, q, r);
    f = std::move(g);
    g = primitive(r);
  }
  return f;
}

RPoly sub(const RPoly& f, const RPoly& g) {
  RPoly out(std::max(f.size(), g.size()), cpp_rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) out[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] -= g[i];
  trim(out);
  return out;
}

int sign_at(const RPoly& f, const cpp_rational& z) {
  cpp_rational acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * z + f[i];
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

// Square-free factors f_1, f_2, ... with f = c * prod f_i^i (Yun).
std::vector<std::pair<RPoly, int>> squarefree_factors(const RPoly& f) {
  std::vector<std::pair<RPoly, int>> out;
  if (degree(f) < 1) return out;
  const RPoly fp = derivative(f);
  const RPoly a0 = poly_gcd(f, fp);
  RPoly b = exact_div(f, a0);
  RPoly c = exact_div(fp, a0);
  RPoly d = sub(c, derivative(b));
  int i = 1;
  while (degree(b) >= 1) {
    RPoly a = poly_gcd(b, d);
    RPoly bn = exact_div(b, a);
    RPoly cn = exact_div(d, a);
    if (degree(a) >= 1) out.emplace_back(primitive(a), i);
    b = bn;
    d = sub(cn, derivative(b));
    ++i;
  }
  return out;
}

class Sturm {
 public:
  explicit Sturm(const RPoly& f) {
    seq_.push_back(primitive(f));
    seq_.push_back(primitive(derivative(f)));
    while (!seq_.back().empty() && degree(seq_.back()) > 0) {
      RPoly q, r;
      divmod(seq_[seq_.size() - 2], seq_.back(), q, r);
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      seq_.push_back(primitive(r));
    }
  }

  int variations(const cpp_rational& z) const {
    int count = 0, prev = 0;
    for (const auto& p : seq_) {
      const int s = sign_at(p, z);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }

  // Roots in (lo, hi].
  int count(const cpp_rational& lo, const cpp_rational& hi) const { return variations(lo) - variations(hi); }

 private:
  std::vector<RPoly> seq_;
};

double theta_of(const cpp_rational& z) {
  const double zd = static_cast<double>(z);
  return std::acos(std::clamp(zd / 2.0, -1.0, 1.0)) / (2.0 * std::numbers::pi);
}

void isolate(const Sturm& s, const cpp_rational& lo, const cpp_rational& hi, int n, double tol, int mult,
             std::vector<Jump>& out) {
  if (n == 0) return;
  if (n == 1) {
    cpp_rational a = lo, b = hi;
    for (int it = 0; it < 400 && theta_of(a) - theta_of(b) >= tol; ++it) {
      const cpp_rational mid = (a + b) / 2;
      if (s.count(a, mid) == 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out.push_back({(theta_of(a) + theta_of(b)) / 2, mult});
    return;
  }
  const cpp_rational mid = (lo + hi) / 2;
  const int left = s.count(lo, mid);
  isolate(s, lo, mid, left, tol, mult, out);
  isolate(s, mid, hi, n - left, tol, mult, out);
}

std::complex<double> evaluate(const std::vector<BigInt>& c, std::complex<double> t) {
  std::complex<double> acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + static_cast<double>(c[i]);
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- public API

std::vector<BigInt> alexander_polynomial(const IntMatrix& a) {
  const long m = a.rows();
  if (m == 0) return {BigInt(1)};
  BigInt bound = 1;
  for (long i = 0; i < m; ++i) {
    long row = 0;
    for (long j = 0; j < m; ++j) row += std::labs(a(i, j)) + std::labs(a(j, i));
    bound *= std::max(1L, row);
  }
  const BigInt need = 2 * bound + 1;
  std::vector<BigInt> result(static_cast<std::size_t>(m + 1), BigInt(0));
  BigInt modulus = 1;
  for (u64 p : primes_61()) {
    const std::vector<u64> r = alexander_mod(a, p);
    // CRT: result = result + modulus * ((r - result) * modulus^-1 mod p)
    const u64 minv = powmod(static_cast<u64>(modulus % p), p - 2, p);
    for (std::size_t k = 0; k < result.size(); ++k) {
      BigInt cur = result[k] % p;
      if (cur < 0) cur += p;
      const u64 diff = (r[k] + p - static_cast<u64>(cur)) % p;
      result[k] += modulus * BigInt(mulmod(diff, minv, p));
    }
    modulus *= p;
    if (modulus >= need) break;
  }
  if (modulus < need) throw std::overflow_error("Alexander polynomial coefficients exceed the CRT range");
  for (auto& v : result) {
    v %= modulus;
    if (v < 0) v += modulus;
    if (2 * v > modulus) v -= modulus;
  }
  return normalize_alexander(std::move(result));
}

SeifertData seifert_matrix(const BraidWord& w) {
  SeifertData s;
  s.matrix = seifert_form(w);
  s.alexander = alexander_polynomial(s.matrix);
  return s;
}

std::vector<BigInt> burau_alexander(const BraidWord& w) {
  const BurauMatrix m = burau_matrix(w);
  const LaurentPoly one(1);
  const LaurentPoly det = (one - m.m[0][0]) * (one - m.m[1][1]) - m.m[0][1] * m.m[1][0];
  const LaurentPoly q = det.divide_exact(LaurentPoly(0, {1, 1, 1}));
  std::vector<BigInt> c;
  for (auto v : q.coeffs()) c.emplace_back(v);
  return normalize_alexander(std::move(c));
}

int levine_tristram_at(const SeifertData& s, double angle) {
  const long m = s.matrix.rows();
  if (m == 0) return 0;
  const std::complex<double> omega = std::polar(1.0, 2.0 * std::numbers::pi * angle);
  double scale = 0;
  for (const auto& c : s.alexander) scale += std::abs(static_cast<double>(c));
  if (s.alexander.empty() || std::abs(evaluate(s.alexander, omega)) < 1e-12 * scale) {
    throw AtJump("Alexander polynomial vanishes at angle " + std::to_string(angle));
  }
  const Eigen::MatrixXcd a = s.matrix.cast<double>().cast<std::complex<double>>();
  const Eigen::MatrixXcd h = (1.0 - omega) * a + (1.0 - std::conj(omega)) * a.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double guard = 1e-8 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  int pos = 0, neg = 0;
  for (long i = 0; i < ev.size(); ++i) {
    if (ev(i) > guard) {
      ++pos;
    } else if (ev(i) < -guard) {
      ++neg;
    } else {
      throw AtJump("zero eigenvalue within the guard band at angle " + std::to_string(angle));
    }
  }
  const int sigma = pos - neg;
  if (sigma % 2 != 0) throw std::logic_error("odd Levine-Tristram signature");
  return sigma;
}

std::vector<Jump> unit_circle_jumps(const SeifertData& s, double tolerance) {
  const auto& c = s.alexander;
  std::vector<Jump> out;
  if (c.size() <= 1) return out;
  if (c.size() % 2 == 0) throw std::domain_error("Alexander polynomial has odd degree");
  const std::size_t d = (c.size() - 1) / 2;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != c[c.size() - 1 - k]) throw std::domain_error("Alexander polynomial is not palindromic");
  }
  // Q(z) = c_d + sum_k c_{d+k} s_k(z),  s_k(t + 1/t) = t^k + t^-k
  RPoly q(d + 1, cpp_rational(0));
  RPoly s_prev{cpp_rational(2)};
  RPoly s_cur{cpp_rational(0), cpp_rational(1)};
  q[0] += cpp_rational(c[d]);
  for (std::size_t k = 1; k <= d; ++k) {
    for (std::size_t i = 0; i < s_cur.size(); ++i) q[i] += cpp_rational(c[d + k]) * s_cur[i];
    RPoly s_next(s_cur.size() + 1, cpp_rational(0));
    for (std::size_t i = 0; i < s_cur.size(); ++i) s_next[i + 1] += s_cur[i];
    for (std::size_t i = 0; i < s_prev.size(); ++i) s_next[i] -= s_prev[i];
    s_prev = std::move(s_cur);
    s_cur = std::move(s_next);
  }
  trim(q);
  for (const auto& [factor, mult] : squarefree_factors(q)) {
    const Sturm sturm(factor);
    const cpp_rational lo(-2), hi(2);
    if (sign_at(factor, lo) == 0) out.push_back({0.5, mult});
    isolate(sturm, lo, hi, sturm.count(lo, hi), tolerance, mult, out);
  }
  std::sort(out.begin(), out.end(), [](const Jump& x, const Jump& y) { return x.theta < y.theta; });
  return out;
}

int SignatureProfile::value_at(double theta) const {
  for (const Arc& a : arcs) {
    if (theta > a.lo && theta <= a.hi) return a.value;
  }
  throw std::out_of_range("angle outside (0, 1/2]");
}

SignatureProfile sigma_hat_and_profile(const SeifertData& s) {
  SignatureProfile prof;
  prof.jumps = unit_circle_jumps(s);
  std::vector<double> cuts{0.0};
  for (const Jump& j : prof.jumps) cuts.push_back(j.theta);
  if (cuts.back() < 0.5) cuts.push_back(0.5);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Arc arc{cuts[i], cuts[i + 1], 0};
    arc.value = levine_tristram_at(s, (arc.lo + arc.hi) / 2);
    prof.arcs.push_back(arc);
  }
  for (const Arc& a : prof.arcs) prof.sigma_hat = std::max(prof.sigma_hat, std::abs(a.value));
  for (const Arc& a : prof.arcs) {
    if (std::abs(a.value) == prof.sigma_hat) prof.maximizing_arcs.push_back(a);
  }
  return prof;
}

double gambaudo_ghys_deviation(const BraidWord& w, int samples) {
  const int comps = closure_components(w);
  if (comps != 1) throw NotAKnot(comps);
  const SeifertData s = seifert_matrix(w);
  const std::vector<Jump> jumps = unit_circle_jumps(s);
  std::vector<double> thetas;
  const double third = 1.0 / 3.0;
  for (int i = 1; i <= samples; ++i) thetas.push_back(third * i / (samples + 1));
  std::vector<double> cuts{0.0};
  for (const Jump& j : jumps) {
    if (j.theta < third) cuts.push_back(j.theta);
  }
  cuts.push_back(third);
  constexpr double eps = 1e-6;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    thetas.push_back((cuts[i] + cuts[i + 1]) / 2);
    if (cuts[i + 1] - cuts[i] > 4 * eps) {
      thetas.push_back(cuts[i] + eps);
      thetas.push_back(cuts[i + 1] - eps);
    }
  }
  const double wr = static_cast<double>(writhe(w));
  double worst = 0;
  for (double th : thetas) {
    bool near_jump = false;
    for (const Jump& j : jumps) near_jump = near_jump || std::abs(j.theta - th) < eps / 2;
    if (near_jump) continue;
    int sigma;
    try {
      sigma = levine_tristram_at(s, th);
    } catch (const AtJump&) {
      continue;
    }
    worst = std::max(worst, std::abs(sigma + 2.0 * wr * th));
  }
  return worst;
}

int signature_oracle(const BraidWord& w) {
  const int comps = closure_components(w);
  if (comps != 1) throw NotAKnot(comps);
  const IntMatrix a = seifert_form(w);
  if (a.rows() == 0) return 0;
  const Eigen::MatrixXd sym = (a + a.transpose()).cast<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double guard = 1e-8 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  int sigma = 0;
  for (long i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= guard) throw std::logic_error("singular symmetrized Seifert form on a knot");
    sigma += ev(i) > 0 ? 1 : -1;
  }
  return sigma;
}

}  // namespace braid3
