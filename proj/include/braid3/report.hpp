#pragma once

#include <string>

#include <json.hpp>

#include "braid3/braid_word.hpp"
#include "braid3/four_genus.hpp"
#include "braid3/garside_form.hpp"
#include "braid3/invariants.hpp"
#include "braid3/seifert.hpp"
#include "braid3/xu_form.hpp"

namespace braid3 {

using Json = nlohmann::ordered_json;

Json to_json(const XuForm& f);
Json to_json(const GarsideForm& g);
Json to_json(const PositivityClass& p);
Json to_json(const Top4Classification& c);
Json to_json(const G4Report& r);
Json to_json(const SignatureProfile& p);

/// Full report. Fields whose precondition fails are left out and listed
/// under "omitted" with a reason.
Json build_report(const BraidWord& w, bool nf_only = false);

/// `t,sigma` rows for t = i / (2 grid), i = 0..grid, plus one row per arc
/// midpoint, sorted by t. Grid points on a jump are skipped.
std::string profile_csv(const SignatureProfile& p, int grid);

}  // namespace braid3
