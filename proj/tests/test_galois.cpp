#include <doctest.h>

#include <random>

#include "galois/galois.hpp"

using namespace invfield;

namespace {

UniPoly mul(const UniPoly& a, const UniPoly& b) {
  UniPoly r{a.p, std::vector<uint32_t>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    for (size_t j = 0; j < b.coeffs.size(); ++j) {
      r.coeffs[i + j] = static_cast<uint32_t>((r.coeffs[i + j] + uint64_t(a.coeffs[i]) * b.coeffs[j]) % a.p);
    }
  }
  return r;
}

}  // namespace

TEST_CASE("degree patterns of known products") {
  const UniPoly lin{5, {4, 1}};        // X - 1
  const UniPoly quad{5, {2, 0, 1}};    // X^2 + 2
  const UniPoly cub{5, {1, 1, 0, 1}};  // X^3 + X + 1
  UniPoly f = mul(mul(lin, quad), cub);
  CHECK(distinct_degree_pattern(f) == CycleType{3, 2, 1});
  CHECK(brute_force_pattern(f) == CycleType{3, 2, 1});
  CHECK_THROWS_AS(distinct_degree_pattern(mul(f, lin)), Error);
  CHECK_THROWS_AS(brute_force_pattern(mul(f, lin)), Error);
}

TEST_CASE("distinct-degree factorization agrees with trial division") {
  for (uint32_t p : {5u, 101u}) {
    std::mt19937_64 rng(p);
    std::uniform_int_distribution<uint32_t> d(0, p - 1);
    int done = 0;
    while (done < 100) {
      UniPoly f{p, std::vector<uint32_t>(7, 0)};
      for (int i = 0; i < 6; ++i) f.coeffs[i] = d(rng);
      f.coeffs[6] = 1;
      CycleType a;
      try {
        a = distinct_degree_pattern(f);
      } catch (const Error&) {
        continue;
      }
      CHECK(a == brute_force_pattern(f));
      ++done;
    }
  }
}

TEST_CASE("reduction mod p") {
  std::vector<Rational> lower{Rational(0), Rational(0), Rational(0), Rational(0), Rational(1, 7), Rational(1)};
  CHECK(std::holds_alternative<Skip>(reduce_mod_p(lower, 7)));
  auto r = reduce_mod_p(lower, 5);
  REQUIRE(std::holds_alternative<UniPoly>(r));
  CHECK(std::get<UniPoly>(r).coeffs == std::vector<uint32_t>{1, 3, 0, 0, 0, 0, 1});
  // (X - 1)^2 (X^4 + 1) is never squarefree.
  std::vector<Rational> sq{-2, 1, 0, 1, -2, 1};
  CHECK(std::holds_alternative<Skip>(reduce_mod_p(sq, 11)));
}

TEST_CASE("primes") {
  CHECK(primes_in(5, 30) == std::vector<uint32_t>{5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_in(5, 10000).size() == 1227);
  CHECK(primes_in(10, 5).empty());
}

TEST_CASE("census of a split polynomial") {
  std::vector<Rational> lower{-21, 175, -735, 1624, -1764, 720};
  FrobeniusCensus c = sample_census(lower, 7, 500);
  CHECK(c.counts.size() == 1);
  CHECK(c.counts.begin()->first == CycleType{1, 1, 1, 1, 1, 1});
  CensusComparison cmp = compare_census(c, catalog().G1.cycle_census());
  CHECK(cmp.containment);
  CHECK(cmp.tv == doctest::Approx(71.0 / 72.0));
  CHECK_THROWS_AS(sample_census(lower, 2, 5), Error);
}

TEST_CASE("comparison against the group's own distribution") {
  FrobeniusCensus c;
  for (const auto& [ct, q] : catalog().G1.cycle_census()) {
    c.counts[ct] = (q * Rational(72)).numerator().get_si();
    c.total += c.counts[ct];
  }
  CensusComparison cmp = compare_census(c, catalog().G1.cycle_census());
  CHECK(cmp.tv == doctest::Approx(0.0));
  CHECK(cmp.containment);
  c.counts[{5, 1}] = 3;
  c.total += 3;
  cmp = compare_census(c, catalog().G1.cycle_census());
  CHECK_FALSE(cmp.containment);
  CHECK(cmp.foreign == std::vector<CycleType>{{5, 1}});
}

TEST_CASE("char-2 form over GF(2)(s) stays inside G1") {
  FrobeniusCensus c = char2_function_field_census({1, 2, 3, 4, 5}, 8);
  CHECK(c.total > 20);
  CHECK(compare_census(c, catalog().G1.cycle_census()).containment);
  CHECK_THROWS_AS(char2_function_field_census({1, 2}, 8), Error);
}
