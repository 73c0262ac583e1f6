// Command-line front end. Everything goes through the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "invfield/invfield.h"

using json = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kFailed = 1, kUsage = 2, kGuard = 3 };

struct Options {
  bool json = false;
  uint64_t seed = 0;
};

struct CallError {
  ivf_status status;
  std::string message;
};

int exit_code(ivf_status s) {
  switch (s) {
    case IVF_OK: return kPass;
    case IVF_E_CERTIFICATE_FAILURE:
    case IVF_E_IDENTITY_FAILURE: return kFailed;
    case IVF_E_CLOSURE_BUDGET:
    case IVF_E_RETRIES_EXHAUSTED:
    case IVF_E_POLE_AT_PARAMETERS:
    case IVF_E_POLE_AT_POINT:
    case IVF_E_SUBSTITUTION_POLE:
    case IVF_E_NO_USABLE_PRIMES:
    case IVF_E_EXPONENT_OVERFLOW:
    case IVF_E_INTERNAL: return kGuard;
    default: return kUsage;
  }
}

void check(ivf_status s) {
  if (s != IVF_OK) throw CallError{s, ivf_last_error()};
}

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  ivf_free_string(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};

using TowerHandle = Handle<ivf_tower, ivf_tower_free>;
using SexticHandle = Handle<ivf_sextic, ivf_sextic_free>;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

// --- catalog -------------------------------------------------------------

int run_catalog(const Options& o) {
  char* out = nullptr;
  check(ivf_catalog_json(&out));
  json j = take_json(out);
  if (o.json) {
    emit(j);
    return kPass;
  }
  for (const auto& [name, perm] : j["permutations"].items()) std::cout << name << " = " << perm.get<std::string>() << "\n";
  for (const auto& g : j["groups"]) {
    std::cout << "\n" << g["name"].get<std::string>() << "  order " << g["order"] << "  generators";
    for (const auto& p : g["generators"]) std::cout << " " << p.get<std::string>();
    std::cout << "\n";
    for (const auto& [ct, q] : g["census"].items()) std::cout << "  " << ct << "  " << q.get<std::string>() << "\n";
  }
  return kPass;
}

// --- derive / verify -----------------------------------------------------

struct TowerArgs {
  std::string group;
  unsigned characteristic = 0;
  std::string path = "direct";
};

void add_tower_flags(CLI::App* cmd, TowerArgs& a) {
  cmd->add_option("--group", a.group, "G1, G2, G3 or G4")->required()->check(CLI::IsMember({"G1", "G2", "G3", "G4"}));
  cmd->add_option("--char", a.characteristic, "characteristic of the base field")
      ->check(CLI::IsMember({0u, 2u, 3u, 5u}));
  cmd->add_option("--path", a.path, "direct, descent or artin-schreier")
      ->check(CLI::IsMember({"direct", "descent", "artin-schreier"}));
}

// Flag combinations the library would reject, reported as usage errors.
void validate_tower_args(const TowerArgs& a) {
  if (a.path == "descent") {
    if (a.group != "G3") throw CLI::ValidationError("--path", "descent is available for G3 only");
    if (a.characteristic == 3) throw CLI::ValidationError("--path", "descent requires --char other than 3");
  }
  if (a.path == "artin-schreier") {
    if (a.group != "G3") throw CLI::ValidationError("--path", "artin-schreier is available for G3 only");
    if (a.characteristic != 3) throw CLI::ValidationError("--path", "artin-schreier requires --char 3");
  }
}

int run_derive(const Options& o, const TowerArgs& a, bool expand) {
  TowerHandle t;
  check(ivf_tower_build(a.group.c_str(), a.characteristic, a.path.c_str(), &t.p));
  char* out = nullptr;
  check(ivf_tower_generators_json(t.p, &out));
  json gens = take_json(out);
  check(ivf_tower_describe_json(t.p, &out));
  json tower = take_json(out);
  json xforms;
  if (expand) {
    check(ivf_tower_x_forms_json(t.p, &out));
    xforms = take_json(out);
  }
  if (o.json) {
    json j = {{"group", a.group}, {"characteristic", a.characteristic}, {"path", a.path}, {"generators", gens}, {"tower", tower}};
    if (expand) j["x_forms"] = xforms;
    emit(j);
    return kPass;
  }
  std::cout << tower["tower"].get<std::string>() << " over " << tower["field"].get<std::string>() << "\n";
  for (const auto& s : tower["steps"]) {
    std::cout << "  step " << s["label"].get<std::string>() << " (degree " << s["degree"] << "):";
    for (const auto& g : s["generators"]) std::cout << " " << g["label"].get<std::string>();
    std::cout << "\n";
  }
  for (const auto& n : tower["notes"]) std::cout << "  note: " << n.get<std::string>() << "\n";
  std::cout << "final generators:\n";
  for (const auto& g : gens["generators"]) {
    std::cout << "  " << g["label"].get<std::string>() << " = " << g["text"].get<std::string>() << "\n";
  }
  if (expand) {
    std::cout << "in " << xforms["vars"].dump() << ":\n";
    for (const auto& g : xforms["generators"]) {
      std::cout << "  " << g["label"].get<std::string>() << " = " << g["text"].get<std::string>() << "\n";
    }
  }
  return kPass;
}

int run_verify(const Options& o, const TowerArgs& a, const std::string& mutation, bool lines) {
  TowerHandle t;
  check(ivf_tower_build(a.group.c_str(), a.characteristic, a.path.c_str(), &t.p));
  if (!mutation.empty()) {
    std::string name = mutation, plus;
    if (auto pos = mutation.find('+'); pos != std::string::npos) {
      name = mutation.substr(0, pos);
      plus = mutation.substr(pos + 1);
      if (plus == "1") plus.clear();
    }
    TowerHandle m;
    check(ivf_tower_mutate(t.p, name.c_str(), plus.empty() ? nullptr : plus.c_str(), &m.p));
    std::swap(t.p, m.p);
  }
  int pass = 0, inv_pass = 0;
  char* out = nullptr;
  check(ivf_tower_verify(t.p, o.seed, &pass, &out));
  json rep = take_json(out);
  check(ivf_tower_invariance(t.p, nullptr, &inv_pass, &out));
  json inv = take_json(out);
  rep["checks"].push_back({{"step", "final"},
                           {"kind", "group-invariance"},
                           {"subject", "x-forms under " + a.group + " generators"},
                           {"pass", inv_pass == 1}});
  const bool ok = pass && inv_pass;
  rep["pass"] = ok;
  if (!mutation.empty()) rep["mutation"] = mutation;
  if (lines) {
    for (const auto& c : rep["checks"]) std::cout << c.dump() << "\n";
    json summary = rep;
    summary.erase("checks");
    summary["checks"] = rep["checks"].size();
    std::cout << summary.dump() << "\n";
  } else if (o.json) {
    emit(rep);
  } else {
    std::cout << rep["tower"].get<std::string>() << " over " << rep["field"].get<std::string>() << " (seed " << o.seed << ")";
    if (!mutation.empty()) std::cout << " with mutation " << mutation;
    std::cout << "\n";
    std::map<std::string, std::pair<int, int>> per_step;
    std::vector<std::string> order;
    for (const auto& c : rep["checks"]) {
      const std::string step = c["step"].get<std::string>();
      if (!per_step.count(step)) order.push_back(step);
      auto& [n, bad] = per_step[step];
      ++n;
      if (!c["pass"].get<bool>()) ++bad;
    }
    for (const auto& s : order) {
      auto [n, bad] = per_step[s];
      std::cout << "  " << verdict(bad == 0) << "  " << s << "  (" << n - bad << "/" << n << ")\n";
    }
    for (const auto& c : rep["checks"]) {
      if (c["pass"].get<bool>()) continue;
      std::cout << "    failed: " << c["kind"].get<std::string>() << " " << c["subject"].get<std::string>();
      if (c.contains("detail")) std::cout << ": " << c["detail"].get<std::string>();
      std::cout << "\n";
    }
    std::cout << "total degree " << rep["total_degree"] << " / group order " << rep["group_order"] << ", jacobian rank "
              << rep["jacobian_rank"] << "\n";
    std::cout << verdict(ok) << ": " << rep["conclusion"].get<std::string>() << "\n";
  }
  return ok ? kPass : kFailed;
}

// --- masuda --------------------------------------------------------------

int run_masuda(const Options& o, unsigned characteristic) {
  int pass = 0;
  char* out = nullptr;
  check(ivf_masuda_report(characteristic, o.seed, &pass, &out));
  json j = take_json(out);
  if (o.json) {
    emit(j);
  } else {
    std::cout << "over " << j["field"].get<std::string>() << "\n";
    std::cout << "u = " << j["u"].get<std::string>() << "\nv = " << j["v"].get<std::string>() << "\n";
    if (j.contains("at_1_2_4")) {
      std::cout << "at (1,2,4): u = " << j["at_1_2_4"]["u"].get<std::string>()
                << ", v = " << j["at_1_2_4"]["v"].get<std::string>() << "\n";
    }
    for (const auto& c : j["checks"]) {
      std::cout << verdict(c["pass"].get<bool>()) << "  " << c["kind"].get<std::string>() << " "
                << c["subject"].get<std::string>();
      if (c.contains("rank")) std::cout << " = " << c["rank"];
      std::cout << "\n";
    }
  }
  return pass ? kPass : kFailed;
}

// --- genpoly / specialize ------------------------------------------------

unsigned default_char(const std::string& form) { return form == "char2" ? 2 : 0; }

int run_genpoly(const Options& o, const std::string& group, const std::string& form, int characteristic, bool verify) {
  const unsigned ch = characteristic < 0 ? default_char(form) : static_cast<unsigned>(characteristic);
  SexticHandle s;
  check(ivf_sextic_new(group.c_str(), form.c_str(), ch, &s.p));
  char* out = nullptr;
  check(ivf_sextic_to_json(s.p, &out));
  json j = take_json(out);
  int pass = 1;
  if (verify) {
    check(ivf_sextic_verify_identity(s.p, &pass, &out));
    j["identity"] = take_json(out);
  }
  if (o.json) {
    emit(j);
  } else {
    std::cout << j["text"].get<std::string>() << "\n";
    std::cout << "over " << j["field"].get<std::string>() << " with parameters " << j["params"].dump() << "\n";
    for (size_t i = 0; i < j["coeffs"].size(); ++i) {
      std::cout << "  a" << i + 1 << " = " << j["coeffs"][i].get<std::string>() << "\n";
    }
    if (verify) {
      for (const auto& c : j["identity"]["checks"]) {
        std::cout << verdict(c["pass"].get<bool>()) << "  " << c["subject"].get<std::string>()
                  << " = (-1)^i e_i(x)\n";
      }
    }
  }
  return pass ? kPass : kFailed;
}

int run_specialize(const Options& o, const std::string& group, const std::string& form, int characteristic,
                   const std::vector<std::string>& sets) {
  const unsigned ch = characteristic < 0 ? default_char(form) : static_cast<unsigned>(characteristic);
  SexticHandle s;
  check(ivf_sextic_new(group.c_str(), form.c_str(), ch, &s.p));
  char* out = nullptr;
  check(ivf_sextic_to_json(s.p, &out));
  const json generic = take_json(out);
  const auto names = generic["params"].get<std::vector<std::string>>();

  std::map<std::string, std::string> given;
  for (const auto& a : sets) {
    auto eq = a.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--set", "expected NAME=VALUE, got '" + a + "'");
    std::string name = a.substr(0, eq);
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw CLI::ValidationError("--set", "unknown parameter '" + name + "'");
    }
    given[name] = a.substr(eq + 1);
  }
  if (!given.empty() && given.size() != names.size()) {
    throw CLI::ValidationError("--set", "give all of " + json(names).dump() + " or none");
  }

  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> dist(-50, 50);
  json result;
  for (int attempt = 0;; ++attempt) {
    std::vector<std::string> vals;
    for (const auto& n : names) vals.push_back(given.empty() ? std::to_string(dist(rng)) : given[n]);
    std::vector<const char*> ptrs;
    for (const auto& v : vals) ptrs.push_back(v.c_str());
    ivf_status st = ivf_sextic_specialize(s.p, ptrs.data(), ptrs.size(), &out);
    // Random draws that hit a pole are redrawn; given values are not.
    if (st == IVF_E_POLE_AT_PARAMETERS && given.empty() && attempt < 100) continue;
    check(st);
    result = take_json(out);
    break;
  }
  result["provenance"]["seed"] = given.empty() ? json(o.seed) : json(nullptr);
  if (o.json) {
    emit(result);
  } else {
    std::cout << "X^6";
    for (size_t i = 0; i < result["coeffs"].size(); ++i) {
      std::cout << " + (" << result["coeffs"][i].get<std::string>() << ")";
      if (i < 5) std::cout << "*X^" << 5 - i;
    }
    std::cout << "\n";
    for (const auto& [k, v] : result["provenance"]["params"].items()) std::cout << "  " << k << " = " << v.get<std::string>() << "\n";
  }
  return kPass;
}

// --- frobenius -----------------------------------------------------------

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw CLI::ValidationError("--inline", "empty coefficient");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

int run_frobenius(const Options& o, const std::string& file, const std::string& inl, uint32_t pmin, uint32_t pmax,
                  const std::string& group) {
  if (pmin > pmax) throw CLI::ValidationError("--pmin", "must not exceed --pmax");
  const char* g = group.empty() ? nullptr : group.c_str();
  char* out = nullptr;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("--poly", "cannot read '" + file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    check(ivf_frobenius_census_json(buf.str().c_str(), pmin, pmax, g, &out));
  } else {
    const auto coeffs = split_commas(inl);
    std::vector<const char*> ptrs;
    for (const auto& c : coeffs) ptrs.push_back(c.c_str());
    check(ivf_frobenius_census(ptrs.data(), ptrs.size(), pmin, pmax, g, &out));
  }
  json j = take_json(out);
  const bool ok = !j["containment"].is_boolean() || j["containment"].get<bool>();
  if (o.json) {
    emit(j);
  } else {
    std::cout << j["total"] << " primes in [" << pmin << ", " << pmax << "], " << j["skipped"].size() << " skipped\n";
    for (const auto& [ct, n] : j["census"].items()) {
      std::cout << "  " << ct << "  " << n;
      if (j.contains("theoretical")) {
        std::cout << "  (expected " << (j["theoretical"].contains(ct) ? j["theoretical"][ct].get<std::string>() : "0")
                  << ")";
      }
      std::cout << "\n";
    }
    if (g) {
      std::cout << "TV distance to " << group << ": " << j["tv"].get<double>() << "\n";
      std::cout << "containment: " << verdict(ok);
      for (const auto& f : j["foreign"]) std::cout << " " << f.get<std::string>();
      std::cout << "\n";
    }
  }
  return ok ? kPass : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant fields of transitive groups of degree 6"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit a single JSON document")->configurable(false);
  app.add_option("--seed", opt.seed, "seed for all random sampling")->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "groups G1..G4 with orders and cycle-type census");

  TowerArgs derive_args;
  bool expand = false;
  auto* derive = app.add_subcommand("derive", "final generators of a tower");
  add_tower_flags(derive, derive_args);
  derive->add_flag("--expand", expand, "also print the generators in x1..x6");

  TowerArgs verify_args;
  std::string mutation;
  bool jsonl = false;
  auto* verify = app.add_subcommand("verify", "check every certificate obligation of a tower");
  add_tower_flags(verify, verify_args);
  verify->add_option("--mutate", mutation, "replace NAME by NAME+1 or NAME+OTHER before verifying");
  verify->add_flag("--jsonl", jsonl, "one JSON object per obligation, then a summary line");

  unsigned masuda_char = 0;
  auto* masuda = app.add_subcommand("masuda", "Masuda's C3 invariants u, v");
  masuda->add_option("--char", masuda_char, "characteristic")->check(CLI::IsMember({0u, 2u, 3u, 5u}));

  std::string gp_group = "G1", gp_form = "full";
  int gp_char = -1;
  bool gp_verify = false;
  auto* genpoly = app.add_subcommand("genpoly", "generic sextic polynomial");
  genpoly->add_option("--group", gp_group, "group")->capture_default_str();
  genpoly->add_option("--form", gp_form, "full, char2 or general")
      ->capture_default_str()
      ->check(CLI::IsMember({"full", "char2", "general"}));
  genpoly->add_option("--char", gp_char, "characteristic (default 2 for char2, else 0)")
      ->check(CLI::IsMember({0, 2, 3, 5}));
  genpoly->add_flag("--check", gp_verify, "verify the coefficient identities symbolically (full form)");

  std::string sp_group = "G1", sp_form = "general";
  int sp_char = -1;
  std::vector<std::string> sp_sets;
  auto* specialize = app.add_subcommand("specialize", "specialize a generic sextic at parameter values");
  specialize->add_option("--group", sp_group, "group")->capture_default_str();
  specialize->add_option("--form", sp_form, "full, char2 or general")
      ->capture_default_str()
      ->check(CLI::IsMember({"full", "char2", "general"}));
  specialize->add_option("--char", sp_char, "characteristic (default 2 for char2, else 0)")
      ->check(CLI::IsMember({0, 2, 3, 5}));
  specialize->add_option("--set", sp_sets, "NAME=VALUE; omit to draw integers in [-50, 50] from --seed");

  std::string fb_file, fb_inline, fb_group;
  uint32_t fb_pmin = 5, fb_pmax = 10000;
  auto* frobenius = app.add_subcommand("frobenius", "Frobenius cycle-type census over primes");
  auto* fb_poly_opt = frobenius->add_option("--poly", fb_file, "JSON polynomial or specialized sextic");
  auto* fb_inline_opt = frobenius->add_option("--inline", fb_inline, "coefficients \"c6,...,c0\"");
  fb_poly_opt->excludes(fb_inline_opt);
  frobenius->add_option("--pmin", fb_pmin, "smallest prime")->capture_default_str()->check(CLI::Range(2u, 100000000u));
  frobenius->add_option("--pmax", fb_pmax, "largest prime")->capture_default_str()->check(CLI::Range(2u, 100000000u));
  frobenius->add_option("--group", fb_group, "compare with this group's census")->check(CLI::IsMember({"G1", "G2", "G3", "G4"}));

  // Global flags are accepted after the subcommand too.
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
    if (*derive) validate_tower_args(derive_args);
    if (*verify) validate_tower_args(verify_args);
    if (*frobenius && fb_file.empty() && fb_inline.empty()) {
      throw CLI::RequiredError("--poly or --inline");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*catalog) return run_catalog(opt);
    if (*derive) return run_derive(opt, derive_args, expand);
    if (*verify) return run_verify(opt, verify_args, mutation, jsonl);
    if (*masuda) return run_masuda(opt, masuda_char);
    if (*genpoly) return run_genpoly(opt, gp_group, gp_form, gp_char, gp_verify);
    if (*specialize) return run_specialize(opt, sp_group, sp_form, sp_char, sp_sets);
    if (*frobenius) return run_frobenius(opt, fb_file, fb_inline, fb_pmin, fb_pmax, fb_group);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const CallError& e) {
    std::cerr << "error: " << e.message << "\n";
    return exit_code(e.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuard;
  }
  return kUsage;
}
