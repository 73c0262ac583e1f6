#include <doctest.h>

#include "algebra/error.hpp"
#include "permgrp/perm.hpp"

using namespace invfield;

TEST_CASE("parsing, printing and composition") {
  Perm a = Perm::parse(6, "(123)");
  Perm b = Perm::parse(6, "(14)(25)(36)");
  CHECK(a.to_string() == "(123)");
  CHECK(Perm::identity(6).to_string() == "()");
  // (a*b)(x) = a(b(x)): 1 -> 4 -> 4.
  CHECK((a * b)(0) == 3);
  CHECK((a * b).to_string() == "(142536)");
  CHECK(a.order() == 3);
  CHECK(a.inverse() == a * a);
  CHECK(Perm::parse(6, "(1425)(36)").cycle_type() == CycleType{4, 2});
  CHECK(cycle_type_string(CycleType{2, 2, 1, 1}) == "[2,2,1,1]");
  CHECK_THROWS_AS(Perm::parse(6, "(127)"), Error);
  CHECK_THROWS_AS(Perm::parse(6, "(121)"), Error);
}

TEST_CASE("catalog orders and relations") {
  const Catalog& c = catalog();
  CHECK(c.G1.order() == 72);
  CHECK(c.G2.order() == 36);
  CHECK(c.G3.order() == 36);
  CHECK(c.G4.order() == 18);
  CHECK(c.A6.order() == 360);
  CHECK(c.S6.order() == 720);
  CHECK(c.C3xC3.order() == 9);
  CHECK(c.G2.same_elements(c.G1.intersect(c.A6)));
  for (const Group* g : {&c.G1, &c.G2, &c.G3, &c.G4}) {
    CHECK(g->is_transitive());
    CHECK(c.C3xC3.is_normal_in(*g));
  }
  CHECK(c.lambda * c.lambda == Perm::parse(6, "(12)(45)"));
  CHECK(c.tau * c.sigma1 * c.tau == c.sigma2);
  CHECK(c.G4.is_subgroup_of(c.G3));
  CHECK(c.G3.is_subgroup_of(c.G1));
  CHECK_FALSE(c.G2.is_subgroup_of(c.G3));
}

TEST_CASE("the misprinted lambda gives an element of order 5") {
  const Catalog& c = catalog();
  Perm g = c.lambda_prime * c.sigma1 * c.lambda_prime;
  CHECK(g.order() == 5);
  CHECK_FALSE(c.G2.contains(g));
}

TEST_CASE("cycle census of G1") {
  auto census = catalog().G1.cycle_census();
  Rational total;
  for (const auto& [ct, q] : census) total += q;
  CHECK(total == Rational(1));
  // Counts from enumerating the 72 elements.
  CHECK(census.at({1, 1, 1, 1, 1, 1}) == Rational(1, 72));
  CHECK(census.at({2, 1, 1, 1, 1}) == Rational(1, 12));
  CHECK(census.at({2, 2, 1, 1}) == Rational(1, 8));
  CHECK(census.at({2, 2, 2}) == Rational(1, 12));
  CHECK(census.at({3, 1, 1, 1}) == Rational(1, 18));
  CHECK(census.at({3, 2, 1}) == Rational(1, 6));
  CHECK(census.at({3, 3}) == Rational(1, 18));
  CHECK(census.at({4, 2}) == Rational(1, 4));
  CHECK(census.at({6}) == Rational(1, 6));
  CHECK(census.size() == 9);
}

TEST_CASE("closure is shared between copies and elements are sorted") {
  Group g = catalog().G4;
  const auto& e = g.elements();
  CHECK(std::is_sorted(e.begin(), e.end()));
  Group h = g;
  CHECK(&h.elements() == &e);
}
