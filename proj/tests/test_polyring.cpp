#include <doctest.h>

#include <random>

#include "polyring/gcd.hpp"
#include "polyring/poly.hpp"
#include "ratfield/parse.hpp"

using namespace invfield;

namespace {

template <class F>
Poly<F> random_poly(const F& f, const Ambient& vars, std::mt19937_64& rng, int terms, uint32_t maxdeg) {
  std::uniform_int_distribution<int> c(-9, 9);
  std::uniform_int_distribution<uint32_t> e(0, maxdeg);
  std::vector<typename Poly<F>::Term> ts;
  for (int i = 0; i < terms; ++i) {
    std::vector<uint32_t> exps(vars.size());
    for (auto& x : exps) x = e(rng);
    ts.push_back({Monomial(exps), f.from_int(c(rng))});
  }
  return Poly<F>::from_terms(f, vars, std::move(ts));
}

}  // namespace

TEST_CASE("basic arithmetic and canonical text") {
  RationalField q;
  Ambient x = Ambient::numbered("x", 3);
  auto p = parse_poly(q, x, "x1 + x2");
  auto m = parse_poly(q, x, "x1 - x2");
  CHECK(p * m == parse_poly(q, x, "x1^2 - x2^2"));
  CHECK((p * m).to_string() == "x1^2 - x2^2");
  CHECK(p + Poly<RationalField>(q, x) == p);
  CHECK(parse_poly(q, x, "3/2*x1^2*x2 - x3 + 1").to_string() == "3/2*x1^2*x2 - x3 + 1");

  PrimeField f2(2);
  auto s = parse_poly(f2, x, "x1 + x2");
  CHECK(s * s == parse_poly(f2, x, "x1^2 + x2^2"));
}

TEST_CASE("ambient mismatch is rejected") {
  RationalField q;
  auto a = parse_poly(q, Ambient::numbered("x", 2), "x1");
  auto b = parse_poly(q, Ambient::numbered("y", 2), "y1");
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(parse_poly(q, Ambient::numbered("x", 2), "x7"), Error);
}

TEST_CASE("evaluation and derivative") {
  RationalField q;
  Ambient x = Ambient::numbered("x", 2);
  auto p = parse_poly(q, x, "x1^3*x2 + 2*x2^2 - 5");
  std::vector<Rational> pt{Rational(2), Rational(-1, 2)};
  CHECK(p.eval(pt) == Rational(-17, 2));
  CHECK(p.derivative(0) == parse_poly(q, x, "3*x1^2*x2"));
  CHECK(p.derivative("x2") == parse_poly(q, x, "x1^3 + 4*x2"));
  PrimeField f3(3);
  CHECK(parse_poly(f3, x, "x1^3 + x2").derivative(0).is_zero());
}

TEST_CASE("term order is graded lex") {
  RationalField q;
  Ambient x = Ambient::numbered("x", 3);
  CHECK(parse_poly(q, x, "x3 + x1*x2 + x1 + x2^2").to_string() == "x1*x2 + x2^2 + x1 + x3");
}

TEST_CASE("gcd of products recovers the common factor") {
  RationalField q;
  Ambient x = Ambient::numbered("x", 3);
  auto g = parse_poly(q, x, "x1^2 - x2*x3 + 1");
  auto a = g * parse_poly(q, x, "x1 + x2 + x3");
  auto b = g * parse_poly(q, x, "x1*x2 - 3");
  CHECK(gcd(a, b) == g.monic());
  auto r = gcd_cofactors(a, b);
  CHECK(r.cofa * r.gcd == a);
  CHECK(r.cofb * r.gcd == b);
}

TEST_CASE("modular gcd agrees with the subresultant oracle") {
  std::mt19937_64 rng(2024);
  RationalField q;
  Ambient x = Ambient::numbered("x", 4);
  for (int i = 0; i < 25; ++i) {
    auto g = random_poly(q, x, rng, 3, 2);
    auto a = g * random_poly(q, x, rng, 3, 2);
    auto b = g * random_poly(q, x, rng, 3, 2);
    if (a.is_zero() || b.is_zero()) continue;
    auto m = gcd(a, b, GcdMethod::Modular);
    auto s = gcd(a, b, GcdMethod::Subresultant);
    CHECK(m == s);
    Poly<RationalField> quo;
    if (!g.is_zero()) CHECK(m.try_divide(g.monic(), quo));
  }
  PrimeField f5(5);
  for (int i = 0; i < 25; ++i) {
    auto g = random_poly(f5, x, rng, 3, 2);
    auto a = g * random_poly(f5, x, rng, 3, 2);
    auto b = g * random_poly(f5, x, rng, 3, 2);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(gcd(a, b) == gcd(a, b, GcdMethod::Subresultant));
  }
}

TEST_CASE("gcd over Q(z3)") {
  CycloQ f;
  Ambient x = Ambient::numbered("x", 2);
  auto g = parse_poly(f, x, "x1 - z3*x2");
  auto a = g * parse_poly(f, x, "x1 + x2");
  auto b = g * parse_poly(f, x, "x1 - z3^2*x2 + 1");
  CHECK(gcd(a, b) == g.monic());
}
