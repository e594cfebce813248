#include "braid3/four_genus.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "braid3/errors.hpp"
#include "braid3/invariants.hpp"
#include "braid3/seifert.hpp"

namespace braid3 {

namespace {

long ceil_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

}  // namespace

G4Report defect_and_g4top_bounds(const XuForm& f, bool with_sigma_hat) {
  G4Report rep;
  rep.genus = seifert_genus_sqp(f);
  rep.sigma = signature_from_xu(f);
  const long half_sigma = std::abs(rep.sigma) / 2;

  if (f.t() == 0) {
    const long d = f.n <= 2 ? 0 : f.n - 1 - ceil_div(2 * f.n, 3);
    rep.defect_upper = d;
    rep.defect_lower = d;
    rep.g4top_lower = rep.genus - d;
    rep.g4top_upper = rep.genus - d;
  } else {
    rep.defect_upper = boost::rational<long>(f.n + f.t() - 3, 3);
    if (boost::rational<long>(rep.genus) - boost::rational<long>(std::abs(rep.sigma), 2) != rep.defect_upper) {
      throw std::logic_error("g - |sigma|/2 != (n + t)/3 - 1 for " + to_string(f));
    }
    rep.defect_lower = std::max(0L, ceil_div(2 * f.n + f.t() - 18, 6));
    rep.g4top_lower = half_sigma;
    rep.g4top_upper = rep.genus - rep.defect_lower;
  }

  if (with_sigma_hat) {
    rep.sigma_hat = sigma_hat_and_profile(seifert_matrix(to_word(f))).sigma_hat;
    rep.g4top_lower = std::max(rep.g4top_lower, ceil_div(*rep.sigma_hat, 2));
  }

  if (const std::optional<Certificate> c = g4top_upper_from_twisting(f)) {
    rep.g4top_upper = std::min(rep.g4top_upper, c->bound);
    rep.family = c->family;
    for (const Move& m : c->moves) rep.certificate.push_back(describe(m));
  }
  if (rep.g4top_lower > rep.g4top_upper) {
    throw std::logic_error("g4top bounds cross for " + to_string(f));
  }
  rep.exact = rep.g4top_lower == rep.g4top_upper;
  return rep;
}

}  // namespace braid3
