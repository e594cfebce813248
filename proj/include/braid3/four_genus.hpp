#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "braid3/twisting.hpp"
#include "braid3/xu_form.hpp"

namespace braid3 {

struct G4Report {
  long genus = 0;
  int sigma = 0;
  std::optional<int> sigma_hat;
  /// Bounds on g - g4top.
  boost::rational<long> defect_upper;
  long defect_lower = 0;
  long g4top_lower = 0;
  long g4top_upper = 0;
  bool exact = false;
  /// Empty unless an untwisting script applied.
  std::string family;
  std::vector<std::string> certificate;
};

/// Genus, signature, defect bounds and the resulting g4top interval of a
/// strongly quasipositive knot closure. For t = 0 the torus-knot value
/// n - 1 - ceil(2n/3) fixes the defect. The lower bound uses sigma-hat
/// when `with_sigma_hat` is set. Throws NotStronglyQuasipositive, NotAKnot.
G4Report defect_and_g4top_bounds(const XuForm& f, bool with_sigma_hat = true);

}  // namespace braid3
