#include <doctest.h>

#include "genpoly/genpoly.hpp"

using namespace invfield;

TEST_CASE("G1 sextic identity in several characteristics") {
  for (const auto& o : verify_g1_identity(RationalField{})) CHECK_MESSAGE(o.pass, o.subject);
  for (uint32_t p : {2u, 3u, 5u}) {
    for (const auto& o : verify_g1_identity(PrimeField(p))) CHECK_MESSAGE(o.pass, o.subject << " mod " << p);
  }
}

TEST_CASE("full form at the invariants of 1..6 is prod (X - i)") {
  RationalField q;
  auto z = final_x_forms(g1_tower(q));
  std::vector<Rational> x{1, 2, 3, 4, 5, 6};
  std::vector<Rational> zv;
  for (const auto& g : z.gens) zv.push_back(g.eval(x));
  auto s = specialize(g1_sextic_full(q), std::span<const Rational>(zv));
  // Expansion of (X-1)(X-2)...(X-6).
  std::vector<Rational> want{-21, 175, -735, 1624, -1764, 720};
  CHECK(s.coeffs == want);
}

TEST_CASE("reduced forms") {
  auto c2 = generic_char2(PrimeField(2));
  CHECK(c2.params.size() == 5);
  CHECK(c2.to_string() ==
        "X^6 + X^5 + (t1 + t3)*X^4 + (t2 + t4)*X^3 + (t1^2*t3 + t1*t4 + t4^2 + t5)*X^2 + (t1*t5 + t2*t4)*X + "
        "(t2^2*t3 + t2*t5 + t5^2)");
  CHECK_THROWS_AS(generic_char2(RationalField{}), Error);
  CHECK_THROWS_AS(generic_general(PrimeField(2)), Error);
  auto g = generic_general(RationalField{});
  CHECK(g.coeffs[0] == RatFunc<RationalField>::from_int(RationalField{}, g.params, -2));
}

TEST_CASE("specialization") {
  RationalField q;
  auto g = generic_general(q);
  std::vector<Rational> t{1, 2, 3, 4, 5};
  auto s = specialize(g, std::span<const Rational>(t));
  CHECK(s.coeffs[0] == Rational(-2));
  CHECK(s.coeffs[1] == Rational(6));
  CHECK(s.coeffs[3] == Rational(14));  // 2*5 + 1 + 9/3
  CHECK(s.params.size() == 5);
  std::vector<Rational> pole{1, 2, 0, 4, 5};
  CHECK_THROWS_AS(specialize(g, std::span<const Rational>(pole)), Error);
  std::vector<Rational> short_{1, 2};
  CHECK_THROWS_AS(specialize(g, std::span<const Rational>(short_)), Error);
}
