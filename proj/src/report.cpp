#include "braid3/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "braid3/errors.hpp"

namespace braid3 {

Json to_json(const XuForm& f) {
  return Json{{"form", to_string(f)}, {"n", f.n}, {"t", f.t()}, {"u", f.u}, {"U", f.U()}};
}

Json to_json(const GarsideForm& g) {
  return Json{{"form", to_string(g)},
              {"ell", g.ell},
              {"r", g.r()},
              {"p", g.p},
              {"case", std::string(1, case_letter(g.kind))}};
}

Json to_json(const PositivityClass& p) {
  return Json{{"strongly_quasipositive", p.strongly_quasipositive}, {"braid_positive", p.braid_positive}};
}

Json to_json(const Top4Classification& c) {
  return Json{{"verdict", to_string(c.verdict)}, {"family", to_string(c.family)}};
}

Json to_json(const G4Report& r) {
  Json j;
  j["genus"] = r.genus;
  j["sigma"] = r.sigma;
  if (r.sigma_hat) j["sigma_hat"] = *r.sigma_hat;
  j["defect_upper"] = std::to_string(r.defect_upper.numerator()) +
                      (r.defect_upper.denominator() == 1 ? "" : "/" + std::to_string(r.defect_upper.denominator()));
  j["defect_lower"] = r.defect_lower;
  j["g4top_lower"] = r.g4top_lower;
  j["g4top_upper"] = r.g4top_upper;
  j["exact"] = r.exact;
  j["family"] = r.family.empty() ? Json(nullptr) : Json(r.family);
  j["certificate"] = r.certificate;
  return j;
}

Json to_json(const SignatureProfile& p) {
  Json jumps = Json::array();
  for (const Jump& jp : p.jumps) jumps.push_back({{"theta", jp.theta}, {"multiplicity", jp.multiplicity}});
  auto arcs = [](const std::vector<Arc>& v) {
    Json out = Json::array();
    for (const Arc& a : v) out.push_back({{"lo", a.lo}, {"hi", a.hi}, {"value", a.value}});
    return out;
  };
  return Json{{"jumps", jumps}, {"arcs", arcs(p.arcs)}, {"sigma_hat", p.sigma_hat}, {"maximizing_arcs", arcs(p.maximizing_arcs)}};
}

Json build_report(const BraidWord& w, bool nf_only) {
  Json j;
  j["input"] = to_string(w);
  const int comps = closure_components(w);
  j["writhe"] = writhe(w);
  j["components"] = comps;
  const XuForm xu = xu_normalize(w);
  j["xu"] = to_json(xu);
  j["garside"] = to_json(garside_normalize(w));
  if (nf_only) return j;

  Json omitted = Json::array();
  auto omit = [&](const char* field, const std::string& reason) {
    omitted.push_back({{"field", field}, {"reason", reason}});
  };

  Json pos = to_json(positivity_class(xu));
  pos["braid_index_below_3"] = braid_index_below_three(w);
  j["positivity"] = pos;

  const bool knot = comps == 1;
  const std::string not_knot = NotAKnot(comps).what();
  if (knot) {
    j["sigma"] = signature_from_xu(xu);
  } else {
    omit("sigma", not_knot);
  }
  if (!knot) {
    omit("genus", not_knot);
  } else if (xu.n < 0) {
    omit("genus", NotStronglyQuasipositive().what());
  } else {
    j["genus"] = seifert_genus_sqp(xu);
  }
  if (knot) {
    j["classification"] = to_json(classify_top4genus(w));
  } else {
    omit("classification", not_knot);
  }
  if (!knot) {
    omit("g4", not_knot);
  } else if (xu.n < 0) {
    omit("g4", NotStronglyQuasipositive().what());
  } else {
    j["g4"] = to_json(defect_and_g4top_bounds(xu));
  }
  if (!omitted.empty()) j["omitted"] = omitted;
  return j;
}

std::string profile_csv(const SignatureProfile& p, int grid) {
  std::vector<std::pair<double, int>> rows;
  auto on_jump = [&](double t) {
    return std::any_of(p.jumps.begin(), p.jumps.end(), [&](const Jump& j) { return std::abs(j.theta - t) < 1e-7; });
  };
  for (int i = 0; i <= grid; ++i) {
    const double t = 0.5 * i / grid;
    if (i == 0) {
      rows.emplace_back(0.0, 0);
    } else if (!on_jump(t)) {
      rows.emplace_back(t, p.value_at(t));
    }
  }
  for (const Arc& a : p.arcs) rows.emplace_back((a.lo + a.hi) / 2, a.value);
  std::sort(rows.begin(), rows.end());

  std::string out = "t,sigma\n";
  char buf[64];
  std::string last;
  for (const auto& [t, s] : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", t);
    if (buf == last) continue;
    last = buf;
    out += last + "," + std::to_string(s) + "\n";
  }
  return out;
}

}  // namespace braid3
