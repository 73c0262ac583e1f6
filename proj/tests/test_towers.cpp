#include <doctest.h>

#include <random>

#include "ratfield/parse.hpp"
#include "towers/towers.hpp"

using namespace invfield;

namespace {

template <class F>
void check_tower(const Tower<F>& t, uint64_t order) {
  CAPTURE(t.name);
  CAPTURE(t.field.name());
  TowerReport r = verify_tower(t, 3);
  if (const Obligation* o = r.first_failure()) FAIL_CHECK(o->step << " " << o->kind << " " << o->subject << ": " << o->detail);
  CHECK(r.pass());
  CHECK(r.total_degree == order);
  CHECK(r.group_order == order);
  CHECK(r.jacobian_rank == 6);
  CHECK(verify_invariance(final_x_forms(t), t.group).pass());
}

std::vector<size_t> images(const Perm& p) { return p.images(); }

}  // namespace

TEST_CASE("Masuda generators") {
  RationalField q;
  auto [u, v] = masuda_generators(q);
  std::vector<Rational> e1{Rational(1), Rational(0), Rational(0)};
  CHECK(u.eval(e1).is_zero());
  CHECK(v.eval(e1).is_zero());
  std::vector<Rational> p{Rational(1), Rational(2), Rational(4)};
  CHECK(u.eval(p) == Rational(10, 7));
  CHECK(v.eval(p) == Rational(16, 7));
  std::vector<size_t> cyc{1, 2, 0};
  CHECK(u.apply_perm(cyc) == u);
  CHECK(v.apply_perm(cyc) == v);
  CHECK_FALSE(u.apply_perm(std::vector<size_t>{1, 0, 2}) == u);
}

TEST_CASE("star generators") {
  RationalField q;
  GeneratorSet<RationalField> s = star_generators(q);
  std::vector<Rational> pt{0, 0, 0, 1, 1, 0};
  CHECK(s.at("u4").eval(pt) == Rational(2));
  CHECK(verify_invariance(s, catalog().C3xC3).pass());
  auto t = images(catalog().tau);
  CHECK(s.at("u1").apply_perm(t) == s.at("u4"));
  CHECK(s.at("u2").apply_perm(t) == s.at("u5"));
  CHECK(s.at("u3").apply_perm(t) == s.at("u6"));
}

TEST_CASE("G1 tower") {
  check_tower(g1_tower(RationalField{}), 72);
  check_tower(g1_tower(PrimeField(2)), 72);
  check_tower(g1_tower(PrimeField(3)), 72);
  check_tower(g1_tower(PrimeField(5)), 72);
}

TEST_CASE("G4 and direct G3 towers") {
  for (uint32_t p : {0u, 2u, 3u, 5u}) {
    if (p == 0) {
      check_tower(g4_tower(RationalField{}), 18);
      check_tower(g3_tower_direct(RationalField{}), 36);
    } else {
      check_tower(g4_tower(PrimeField(p)), 18);
      check_tower(g3_tower_direct(PrimeField(p)), 36);
    }
  }
}

TEST_CASE("G4 uses the tau-invariant v5") {
  RationalField q;
  Tower<RationalField> t = g4_tower(q);
  const auto& v = t.final_set();
  Ambient u = t.level_ambient(1);
  CHECK(v.at("v5") == parse_ratfunc(q, u, "u1*u5 + u4*u2"));
  CHECK(v.at("v6") == parse_ratfunc(q, u, "u1*u6 + u4*u3"));
}

TEST_CASE("G2 towers") {
  check_tower(g2_tower(RationalField{}), 36);
  check_tower(g2_tower(PrimeField(3)), 36);
  check_tower(g2_tower(PrimeField(5)), 36);
  check_tower(g2_tower(PrimeField(2)), 36);
}

TEST_CASE("G2 case A auxiliary identity") {
  RationalField q;
  Ambient w({"w3"});
  auto s3 = parse_ratfunc(q, w, "w3 + 1/w3");
  auto t3 = parse_ratfunc(q, w, "w3 - 1/w3");
  CHECK(s3 * s3 - t3 * t3 == RatFunc<RationalField>::from_int(q, w, 4));
}

TEST_CASE("G3 descent through the cube root of unity") {
  Tower<CycloQ> q = g3_descent_zeta(CycloQ{});
  check_tower(q, 36);
  for (const auto& o : verify_descent(q, 5)) CHECK_MESSAGE(o.pass, o.subject);
  Tower<CycloGF> g5 = g3_descent_zeta(CycloGF(PrimeField(5)));
  check_tower(g5, 36);
  for (const auto& o : verify_descent(g5, 5)) CHECK_MESSAGE(o.pass, o.subject);
  check_tower(g3_descent_zeta(CycloGF(PrimeField(2))), 36);

  CycloQ f;
  Ambient x = Ambient::numbered("x", 6);
  auto y2 = parse_ratfunc(f, x, "z3^2*x1 + z3*x2 + x3");
  CHECK(y2.apply_perm(images(catalog().sigma1)) == y2.scaled(f.zeta()));
}

TEST_CASE("G3 in characteristic 3") {
  check_tower(g3_char3_tower(), 36);
  PrimeField f3(3);
  Ambient x = Ambient::numbered("x", 6);
  ParseEnv<PrimeField> env;
  env.emplace("y1", parse_ratfunc(f3, x, "x1 + x2 + x3"));
  env.emplace("y2", parse_ratfunc(f3, x, "-x1 + x2"));
  auto z2 = parse_ratfunc(f3, x, "y2/y1", &env);
  CHECK(z2.apply_perm(images(catalog().sigma1)) == z2 + RatFunc<PrimeField>::from_int(f3, x, 1));
  CHECK_THROWS_AS(g3_descent_zeta(CycloGF(PrimeField(3))), Error);
}

TEST_CASE("invariance reports failures for a larger group") {
  auto z = final_x_forms(g1_tower(RationalField{}));
  CHECK(verify_invariance(z, catalog().G1).pass());
  InvarianceReport r = verify_invariance(z, catalog().S6);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("single-generator mutations break every tower") {
  std::mt19937_64 rng(0);
  auto mutations = [&](const auto& t) {
    const auto& names = t.final_set().names;
    for (int k = 0; k < 3; ++k) {
      const std::string& n = names[rng() % names.size()];
      CAPTURE(t.name);
      CAPTURE(n);
      CHECK_FALSE(verify_tower(mutate(t, n), 1).pass());
    }
  };
  mutations(g1_tower(RationalField{}));
  mutations(g4_tower(PrimeField(5)));
  mutations(g3_tower_direct(RationalField{}));
  mutations(g2_tower(PrimeField(2)));
  mutations(g2_tower(RationalField{}));
  mutations(g3_descent_zeta(CycloQ{}));
  mutations(g3_char3_tower());
}

TEST_CASE("mutation by another generator") {
  Tower<RationalField> t = g1_tower(RationalField{});
  TowerReport r = verify_tower(mutate(t, "z5", std::string("z4")), 1);
  CHECK_FALSE(r.pass());
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->kind == "reconstruction");
  CHECK_THROWS_AS(mutate(t, "nope"), Error);
}

TEST_CASE("wreath generators") {
  for (unsigned n : {2u, 3u}) {
    auto g = wreath_generators(n, RationalField{});
    CHECK(verify_invariance(g, wreath_group(n)).pass());
    CHECK(jacobian_rank_random(g, 1) == 2 * n);
  }
  auto w3 = wreath_generators(3, RationalField{});
  auto z = final_x_forms(g1_tower(RationalField{}));
  for (size_t i = 0; i < 6; ++i) CHECK(w3.gens[i] == z.gens[i]);
  CHECK(wreath_group(3).same_elements(catalog().G1));
  CHECK_THROWS_AS(wreath_generators(7, RationalField{}), Error);
}

TEST_CASE("Artin-Schreier generators for C_p") {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    CAPTURE(p);
    auto y = artin_schreier_y(p);
    std::vector<std::vector<unsigned>> cyc(1);
    for (unsigned i = 1; i <= p; ++i) cyc[0].push_back(i);
    Perm s = Perm::from_cycles(p, cyc);
    CHECK(y.gens[0].apply_perm(s.images()) == y.gens[0]);
    for (unsigned i = 1; i < p; ++i) CHECK(y.gens[i].apply_perm(s.images()) == y.gens[i] + y.gens[i - 1]);
    auto z = artin_schreier_cp(p);
    CHECK(verify_invariance(z, Group(p, {s})).pass());
    CHECK(jacobian_rank_random(z, 2) == p);
  }
  CHECK_THROWS_AS(artin_schreier_cp(11), Error);
}

TEST_CASE("Artin-Schreier p = 3 matches the block formulas") {
  PrimeField f3(3);
  auto z = artin_schreier_cp(3);
  ParseEnv<PrimeField> env;
  env.emplace("y1", parse_ratfunc(f3, z.vars, "x1 + x2 + x3"));
  env.emplace("y2", parse_ratfunc(f3, z.vars, "-x1 + x2"));
  env.emplace("y3", parse_ratfunc(f3, z.vars, "x1"));
  CHECK(z.gens[0] == parse_ratfunc(f3, z.vars, "y1", &env));
  CHECK(z.gens[1] == parse_ratfunc(f3, z.vars, "(y2/y1)^3 - y2/y1", &env));
  CHECK(z.gens[2] == parse_ratfunc(f3, z.vars, "y3/y1 + (y2/y1)^2 - y2/y1", &env));
}

TEST_CASE("characteristic guards") {
  CHECK_THROWS_AS(g3_descent_zeta(CycloGF(PrimeField(3))), Error);
}
