// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--known-red N,M,...]
//
// Exit status is 0 when every criterion passes, or when the only failures
// are the listed known-red ones (they are still printed as FAIL).

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "galois/galois.hpp"
#include "genpoly/genpoly.hpp"
#include "ratfield/parse.hpp"
#include "towers/towers.hpp"

using namespace invfield;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// 1. Group catalog.
Outcome catalog_orders() {
  const auto t0 = Clock::now();
  const Catalog& c = catalog();
  bool ok = c.G1.order() == 72 && c.G2.order() == 36 && c.G3.order() == 36 && c.G4.order() == 18;
  ok = ok && c.G2.same_elements(c.G1.intersect(c.A6));
  for (const Group* g : {&c.G1, &c.G2, &c.G3, &c.G4}) ok = ok && c.C3xC3.is_normal_in(*g);
  ok = ok && c.lambda * c.lambda == Perm::parse(6, "(12)(45)");
  ok = ok && c.tau * c.sigma1 * c.tau == Perm::parse(6, "(456)");
  const double dt = seconds_since(t0);
  std::ostringstream s;
  s << "orders " << c.G1.order() << "/" << c.G2.order() << "/" << c.G3.order() << "/" << c.G4.order()
    << ", G2 = G1 n A6, C3xC3 normal, lambda^2 and tau relations";
  return {ok && dt < 1.0, s.str() + fmt(" (%.3fs, limit 1s)", dt)};
}

// 2. The footnote's misprinted lambda.
Outcome footnote() {
  const Catalog& c = catalog();
  const auto t0 = Clock::now();
  const Perm g = c.lambda_prime * c.sigma1 * c.lambda_prime;
  const unsigned order = g.order();
  const double dt = seconds_since(t0);
  return {order == 5 && dt < 1e-3,
          "lambda' sigma1 lambda' = " + g.to_string() + " has order " + std::to_string(order) +
              fmt(" (%.2gs, limit 1ms)", dt)};
}

// 3. Masuda invariance.
Outcome masuda() {
  const auto t0 = Clock::now();
  RationalField q;
  auto [u, v] = masuda_generators(q);
  const std::vector<size_t> cyc{1, 2, 0};
  const bool fixed = u.apply_perm(cyc) == u && v.apply_perm(cyc) == v;
  const Ambient& xyz = u.ambient();
  GeneratorSet<RationalField> g{q, xyz, {"s", "u", "v"}, {}, {parse_ratfunc(q, xyz, "x+y+z"), u, v}};
  const size_t rank = jacobian_rank_random(g, 0);
  const double dt = seconds_since(t0);
  return {fixed && rank == 3 && dt < 1.0,
          std::string("u, v fixed by (123): ") + (fixed ? "yes" : "no") + ", rank " + std::to_string(rank) +
              fmt(" (%.3fs, limit 1s)", dt)};
}

struct TowerCase {
  std::string label;
  std::function<TowerReport(uint64_t)> verify;
  uint64_t order;
};

template <class F>
TowerReport verify_all(const Tower<F>& t, uint64_t seed) {
  TowerReport r = verify_tower(t, seed);
  if constexpr (is_cyclo_field_v<F>) {
    for (auto& o : verify_descent(t, seed)) r.checks.push_back(std::move(o));
  }
  return r;
}

template <class F>
TowerCase tower_case(std::string label, std::function<Tower<F>()> build, uint64_t order) {
  return {std::move(label), [build](uint64_t seed) { return verify_all(build(), seed); }, order};
}

std::vector<TowerCase> tower_matrix() {
  using RF = RationalField;
  using PF = PrimeField;
  std::vector<TowerCase> m;
  m.push_back(tower_case<RF>("G1/Q", [] { return g1_tower(RF{}); }, 72));
  for (uint32_t p : {2u, 3u, 5u}) {
    m.push_back(tower_case<PF>("G1/GF(" + std::to_string(p) + ")", [p] { return g1_tower(PF(p)); }, 72));
  }
  m.push_back(tower_case<RF>("G4/Q", [] { return g4_tower(RF{}); }, 18));
  m.push_back(tower_case<RF>("G3/Q", [] { return g3_tower_direct(RF{}); }, 36));
  for (uint32_t p : {2u, 3u, 5u}) {
    m.push_back(tower_case<PF>("G4/GF(" + std::to_string(p) + ")", [p] { return g4_tower(PF(p)); }, 18));
    m.push_back(tower_case<PF>("G3/GF(" + std::to_string(p) + ")", [p] { return g3_tower_direct(PF(p)); }, 36));
  }
  m.push_back(tower_case<RF>("G2A/Q", [] { return g2_tower(RF{}); }, 36));
  for (uint32_t p : {3u, 5u}) {
    m.push_back(tower_case<PF>("G2A/GF(" + std::to_string(p) + ")", [p] { return g2_tower(PF(p)); }, 36));
  }
  m.push_back(tower_case<PF>("G2B/GF(2)", [] { return g2_tower(PF(2)); }, 36));
  m.push_back(tower_case<CycloQ>("G3z/Q(z3)", [] { return g3_descent_zeta(CycloQ{}); }, 36));
  m.push_back(tower_case<CycloGF>("G3z/GF(5)(z3)", [] { return g3_descent_zeta(CycloGF(PF(5))); }, 36));
  m.push_back(tower_case<PF>("G3AS/GF(3)", [] { return g3_char3_tower(); }, 36));
  return m;
}

// 4. Tower certification matrix.
Outcome towers() {
  const auto t0 = Clock::now();
  auto cases = tower_matrix();
  std::vector<std::future<TowerReport>> jobs;
  for (const auto& c : cases) jobs.push_back(std::async(std::launch::async, c.verify, 1));
  bool ok = true;
  std::string bad;
  size_t checks = 0;
  for (size_t i = 0; i < cases.size(); ++i) {
    TowerReport r = jobs[i].get();
    checks += r.checks.size();
    const bool good = r.pass() && r.total_degree == cases[i].order && r.jacobian_rank == 6;
    if (!good) {
      ok = false;
      bad += " " + cases[i].label;
      if (const Obligation* o = r.first_failure()) bad += "[" + o->step + " " + o->kind + " " + o->subject + "]";
    }
  }
  const double dt = seconds_since(t0);
  std::string s = std::to_string(cases.size()) + " towers, " + std::to_string(checks) + " obligations";
  if (!bad.empty()) s += ", failing:" + bad;
  return {ok && dt < 60, s + fmt(" (%.2fs, limit 60s)", dt)};
}

// 5. Mutation sensitivity: three seeded single-generator mutations per tower.
Outcome mutations() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(0);
  int total = 0, caught = 0;
  std::string missed;
  auto run = [&](const auto& t, const std::string& label) {
    const auto& names = t.final_set().names;
    for (int k = 0; k < 3; ++k) {
      const std::string n = names[rng() % names.size()];
      ++total;
      if (!verify_all(mutate(t, n), 1).pass()) ++caught;
      else missed += " " + label + ":" + n;
    }
  };
  run(g1_tower(RationalField{}), "G1");
  run(g4_tower(RationalField{}), "G4");
  run(g3_tower_direct(RationalField{}), "G3");
  run(g2_tower(RationalField{}), "G2A");
  run(g2_tower(PrimeField(2)), "G2B");
  run(g3_descent_zeta(CycloQ{}), "G3z");
  run(g3_char3_tower(), "G3AS");
  const double dt = seconds_since(t0);
  std::string s = std::to_string(caught) + "/" + std::to_string(total) + " mutations rejected";
  if (!missed.empty()) s += ", missed:" + missed;
  return {caught == total && dt < 60, s + fmt(" (%.2fs, limit 60s)", dt)};
}

// 6. Generic sextic identity.
Outcome identity() {
  const auto t0 = Clock::now();
  int ok = 0, total = 0;
  auto tally = [&](const std::vector<Obligation>& obs) {
    for (const auto& o : obs) {
      ++total;
      ok += o.pass;
    }
  };
  tally(verify_g1_identity(RationalField{}));
  for (uint32_t p : {2u, 3u, 5u}) tally(verify_g1_identity(PrimeField(p)));
  const double dt = seconds_since(t0);
  return {ok == total && total == 24 && dt < 30,
          std::to_string(ok) + "/" + std::to_string(total) + " coefficients over Q, GF(2), GF(3), GF(5)" +
              fmt(" (%.2fs, limit 30s)", dt)};
}

// 7. Reduced generic forms against G1's Chebotarev distribution.
Outcome reduced_forms() {
  const auto t0 = Clock::now();
  RationalField q;
  const GenericSextic<RationalField> gen = generic_general(q);
  const auto theo = catalog().G1.cycle_census();
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<int> d(-50, 50);
  std::vector<SpecializedSextic<RationalField>> points;
  while (points.size() < 10) {
    std::vector<Rational> t;
    for (int i = 0; i < 5; ++i) t.push_back(Rational(long(d(rng))));
    if (t[2].is_zero()) continue;
    points.push_back(specialize(gen, std::span<const Rational>(t)));
  }
  std::vector<std::future<CensusComparison>> jobs;
  for (const auto& p : points) {
    jobs.push_back(std::async(std::launch::async, [&p, &theo] { return compare_census(sample_census(p, 5, 10000), theo); }));
  }
  bool contained = true;
  int close = 0;
  std::set<std::string> foreign;
  std::string tvs;
  for (auto& j : jobs) {
    CensusComparison c = j.get();
    contained = contained && c.containment;
    close += c.tv <= 0.15;
    for (const auto& f : c.foreign) foreign.insert(cycle_type_string(f));
    tvs += fmt(" %.3f", c.tv);
  }
  // Char-2 form: containment only, over places of GF(2)(s).
  bool c2 = true;
  for (const auto& params : std::vector<std::vector<uint64_t>>{{1, 2, 3, 4, 5}, {7, 11, 13, 6, 9}}) {
    c2 = c2 && compare_census(char2_function_field_census(params, 12), theo).containment;
  }
  const double dt = seconds_since(t0);
  std::string s = "containment " + std::string(contained ? "yes" : "no");
  if (!foreign.empty()) {
    s += " (foreign";
    for (const auto& f : foreign) s += " " + f;
    s += ")";
  }
  s += ", TV <= 0.15 at " + std::to_string(close) + "/10 points [" + tvs.substr(1) + "], char-2 containment " +
       (c2 ? "yes" : "no");
  return {contained && close >= 8 && c2 && dt < 120, s + fmt(" (%.2fs, limit 120s)", dt)};
}

// 8. Distinct-degree factorization against trial division.
Outcome ddf_oracle() {
  const auto t0 = Clock::now();
  int agree = 0, total = 0;
  for (uint32_t p : {5u, 101u}) {
    std::mt19937_64 rng(p);
    int done = 0;
    while (done < 100) {
      UniPoly u{p, {}};
      for (int i = 0; i < 6; ++i) u.coeffs.push_back(static_cast<uint32_t>(rng() % p));
      u.coeffs.push_back(1);
      CycleType a;
      try {
        a = distinct_degree_pattern(u);
      } catch (const Error&) {
        continue;  // not squarefree
      }
      ++done;
      ++total;
      agree += a == brute_force_pattern(u);
    }
  }
  const double dt = seconds_since(t0);
  return {agree == total && dt < 30,
          std::to_string(agree) + "/" + std::to_string(total) + " patterns agree over GF(5), GF(101)" +
              fmt(" (%.2fs, limit 30s)", dt)};
}

// 9. Remarks: wreath generalization and the C_p construction.
Outcome remarks() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string s;
  for (unsigned n : {2u, 3u}) {
    auto g = wreath_generators(n, RationalField{});
    const bool inv = verify_invariance(g, wreath_group(n)).pass();
    const size_t rank = jacobian_rank_random(g, 0);
    ok = ok && inv && rank == 2 * n;
    s += "wreath(" + std::to_string(n) + ") " + (inv ? "invariant" : "NOT invariant") + " rank " + std::to_string(rank) + "; ";
  }
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    auto z = artin_schreier_cp(p);
    std::vector<std::vector<unsigned>> cyc(1);
    for (unsigned i = 1; i <= p; ++i) cyc[0].push_back(i);
    const bool inv = verify_invariance(z, Group(p, {Perm::from_cycles(p, cyc)})).pass();
    ok = ok && inv;
    if (!inv) s += "C" + std::to_string(p) + " not invariant; ";
  }
  // p = 3 against the block formulas.
  PrimeField f3(3);
  auto z = artin_schreier_cp(3);
  ParseEnv<PrimeField> env;
  env.emplace("y1", parse_ratfunc(f3, z.vars, "x1 + x2 + x3"));
  env.emplace("y2", parse_ratfunc(f3, z.vars, "-x1 + x2"));
  env.emplace("y3", parse_ratfunc(f3, z.vars, "x1"));
  const bool block = z.gens[0] == parse_ratfunc(f3, z.vars, "y1", &env) &&
                     z.gens[1] == parse_ratfunc(f3, z.vars, "(y2/y1)^3 - y2/y1", &env) &&
                     z.gens[2] == parse_ratfunc(f3, z.vars, "y3/y1 + (y2/y1)^2 - y2/y1", &env);
  ok = ok && block;
  s += std::string("C_p invariant for p = 2,3,5,7; p = 3 block formulas ") + (block ? "match" : "DIFFER");
  const double dt = seconds_since(t0);
  return {ok && dt < 30, s + fmt(" (%.2fs, limit 30s)", dt)};
}

std::set<int> parse_known_red(int argc, char** argv) {
  std::set<int> out;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) != "--known-red") continue;
    std::stringstream ss(argv[i + 1]);
    std::string item;
    while (std::getline(ss, item, ',')) out.insert(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::set<int> known_red = parse_known_red(argc, argv);
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"group catalog", catalog_orders},
      {"footnote order 5", footnote},
      {"Masuda invariance", masuda},
      {"tower certification matrix", towers},
      {"mutation sensitivity", mutations},
      {"generic sextic identity", identity},
      {"reduced generic forms", reduced_forms},
      {"distinct-degree oracle", ddf_oracle},
      {"remark coverage", remarks},
  };
  int unexpected = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const bool red = known_red.count(n) > 0;
    std::printf("criterion %d: %s  %s: %s%s\n", n, o.pass ? "PASS" : "FAIL", criteria[i].first, o.summary.c_str(),
                !o.pass && red ? "  [known red]" : "");
    std::fflush(stdout);
    if (!o.pass && !red) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
