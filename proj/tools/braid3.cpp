#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "braid3/errors.hpp"
#include "braid3/report.hpp"

using namespace braid3;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kParseError = 2;
constexpr int kPrecondition = 3;

struct Options {
  bool strict = false;
  bool json = false;
  bool nf_only = false;
  std::string word;
  std::string other;
  std::string csv_path;
  std::string json_path;
  int grid = 100;
};

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

int cmd_report(const Options& o) {
  const Json j = build_report(parse_braid_word(o.word), o.nf_only);
  print(j);
  return o.strict && j.contains("omitted") ? kPrecondition : kOk;
}

int cmd_nf(const Options& o) {
  const BraidWord w = parse_braid_word(o.word);
  if (o.json) {
    print(build_report(w, true));
    return kOk;
  }
  const GarsideForm g = garside_normalize(w);
  std::cout << "xu " << to_string(xu_normalize(w)) << "\n";
  std::cout << "garside " << to_string(g) << " case " << case_letter(g.kind) << "\n";
  return kOk;
}

int cmd_same_link(const Options& o) {
  const LinkRelation rel = link_relation(parse_braid_word(o.word), parse_braid_word(o.other));
  const char* verdict = rel == LinkRelation::Conjugate              ? "conjugate"
                        : rel == LinkRelation::SameLinkNotConjugate ? "same-link-not-conjugate"
                                                                    : "different";
  if (o.json) {
    print(Json{{"verdict", verdict}});
  } else {
    std::cout << verdict << "\n";
  }
  return rel == LinkRelation::Different ? kNegative : kOk;
}

int cmd_classify(const Options& o) {
  const Top4Classification c = classify_top4genus(parse_braid_word(o.word));
  if (o.json) {
    print(to_json(c));
  } else {
    std::cout << to_string(c.verdict) << " " << to_string(c.family) << "\n";
  }
  return kOk;
}

int cmd_profile(const Options& o) {
  const BraidWord w = parse_braid_word(o.word);
  const int comps = closure_components(w);
  if (comps != 1) throw NotAKnot(comps);
  if (o.grid < 1) throw std::invalid_argument("--grid must be positive");
  const SignatureProfile p = sigma_hat_and_profile(seifert_matrix(w));
  const int sigma = signature_from_xu(xu_normalize(w));
  if (!o.csv_path.empty()) write_file(o.csv_path, profile_csv(p, o.grid));
  if (!o.json_path.empty()) {
    Json j = to_json(p);
    j["sigma"] = sigma;
    write_file(o.json_path, j.dump(2) + "\n");
  }
  std::cout << "sigma=" << sigma << " sigma_hat=" << p.sigma_hat << "\n";
  for (const Arc& a : p.maximizing_arcs) {
    std::cout << "maximizing_arc=" << fixed6(a.lo) << "," << fixed6(a.hi) << " value=" << a.value << "\n";
  }
  return kOk;
}

int cmd_defect(const Options& o) {
  print(to_json(defect_and_g4top_bounds(xu_normalize(parse_braid_word(o.word)))));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms, link equivalence and 4-genus bounds for closures of 3-braids", "braid3"};
  Options o;
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--strict", o.strict, "Exit 3 when a requested invariant is unavailable");
  app.add_flag("--json", o.json, "JSON output");

  auto* report = app.add_subcommand("report", "Full JSON report");
  report->add_option("word", o.word, "Braid word")->required();
  report->add_flag("--nf-only", o.nf_only, "Normal forms only");

  auto* nf = app.add_subcommand("nf", "Xu and Garside normal forms");
  nf->add_option("word", o.word, "Braid word")->required();

  auto* same = app.add_subcommand("same-link", "Compare closures as oriented links");
  same->add_option("word1", o.word, "Braid word")->required();
  same->add_option("word2", o.other, "Braid word")->required();

  auto* classify = app.add_subcommand("classify", "Is the topological 4-genus equal to the genus?");
  classify->add_option("word", o.word, "Braid word")->required();

  auto* profile = app.add_subcommand("profile", "Levine-Tristram signature profile");
  profile->add_option("word", o.word, "Braid word")->required();
  profile->add_option("--csv", o.csv_path, "Write the profile as CSV");
  profile->add_option("--json", o.json_path, "Write the profile as JSON");
  profile->add_option("--grid", o.grid, "Grid points on [0, 1/2]");

  auto* defect = app.add_subcommand("defect", "Defect and 4-genus bounds (JSON)");
  defect->add_option("word", o.word, "Braid word")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParseError;
  }

  try {
    if (report->parsed()) return cmd_report(o);
    if (nf->parsed()) return cmd_nf(o);
    if (same->parsed()) return cmd_same_link(o);
    if (classify->parsed()) return cmd_classify(o);
    if (profile->parsed()) return cmd_profile(o);
    return cmd_defect(o);
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
}
