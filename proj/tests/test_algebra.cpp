#include <doctest.h>

#include <random>

#include "algebra/fields.hpp"

using namespace invfield;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK((Rational(4, 6)).to_string() == "2/3");
  CHECK(Rational(-3, -9).to_string() == "1/3");
  CHECK(Rational(6, -3).to_string() == "-2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational(0).inv(), Error);
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inv() == Rational(1));
    CHECK(a.denominator() > 0);
  }
}

TEST_CASE("prime field") {
  PrimeField f3(3);
  CHECK(f3.from_int(2).inv() == f3.from_int(2));
  CHECK(f3.format(f3.from_int(-1)) == "2 mod 3");
  CHECK(f3.parse("5") == f3.from_int(2));
  CHECK(f3.parse("2 mod 3") == f3.from_int(2));
  CHECK_THROWS_AS(f3.zero().inv(), Error);
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK(f3.from_rational(Rational(1, 2)) == f3.from_int(2));

  PrimeField f101(101);
  for (long v = 1; v < 101; ++v) CHECK(f101.from_int(v) * f101.from_int(v).inv() == f101.one());
}

TEST_CASE("characteristic") {
  CHECK(characteristic(RationalField{}) == 0);
  CHECK(characteristic(PrimeField(2)) == 2);
  CHECK(characteristic(CycloGF(PrimeField(5))) == 5);
  CHECK(characteristic(CycloQ{}) == 0);
}

TEST_CASE("cube root of unity") {
  CycloQ q;
  auto z = q.zeta();
  CHECK(z * z == CycloQ::Elem(Rational(-1), Rational(-1)));
  CHECK(z * z * z == q.one());
  CHECK(z.conjugate() == z * z);
  CHECK(q.from_int(5).conjugate() == q.from_int(5));
  CycloQ::Elem w(Rational(1), Rational(2));
  CHECK(w.conjugate().conjugate() == w);
  CHECK(q.format(z) == "z3");
  CHECK(q.parse("1 + 2*z3") == w);
  CHECK(q.parse(q.format(w)) == w);
}

TEST_CASE("cyclotomic extension of GF(p) needs p = 2 mod 3") {
  CHECK_THROWS_AS(CycloGF(PrimeField(7)), Error);
  CHECK_NOTHROW(CycloGF(PrimeField(2)));
  CHECK_NOTHROW(CycloGF(PrimeField(5)));
}

TEST_CASE("GF(p)(z3) is a field and conjugation is multiplicative") {
  for (uint32_t p : {2u, 5u, 11u, 17u}) {
    CycloGF f{PrimeField(p)};
    std::mt19937_64 rng(p);
    std::uniform_int_distribution<uint32_t> d(0, p - 1);
    auto draw = [&] { return CycloGF::Elem(Zp(d(rng), p), Zp(d(rng), p)); };
    for (int i = 0; i < 200; ++i) {
      auto x = draw(), y = draw();
      if (!x.is_zero()) CHECK(x * x.inv() == f.one());
      CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
      CHECK(f.parse(f.format(x)) == x);
    }
  }
}

TEST_CASE("conjugation over Q(z3) on random pairs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    CycloQ::Elem x(random_rational(rng), random_rational(rng)), y(random_rational(rng), random_rational(rng));
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    if (!x.is_zero()) CHECK(x * x.inv() == CycloQ{}.one());
  }
}
