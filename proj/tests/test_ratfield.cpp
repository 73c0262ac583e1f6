#include <doctest.h>

#include <random>

#include "ratfield/parse.hpp"
#include "ratfield/ratfunc.hpp"

using namespace invfield;

TEST_CASE("normalization makes equal fractions structurally equal") {
  RationalField q;
  Ambient x = Ambient::numbered("x", 2);
  auto a = parse_ratfunc(q, x, "(x1^2 - x2^2)/(2*x1 + 2*x2)");
  auto b = parse_ratfunc(q, x, "(x1 - x2)/2");
  CHECK(a == b);
  CHECK(a.to_string() == "1/2*x1 - 1/2*x2");
  auto c = parse_ratfunc(q, x, "x1/(3*x2)");
  CHECK(c.den().leading_coef() == Rational(1));
  CHECK(c.to_string() == "1/3*x1 / x2");
}

TEST_CASE("field operations") {
  RationalField q;
  Ambient x = Ambient::numbered("x", 2);
  auto a = parse_ratfunc(q, x, "x1/x2");
  auto one = RatFunc<RationalField>::from_int(q, x, 1);
  CHECK(a * a.inv() == one);
  CHECK(a - a == RatFunc<RationalField>(Poly<RationalField>(q, x)));
  CHECK((a + one) * parse_ratfunc(q, x, "x2") == parse_ratfunc(q, x, "x1 + x2"));
  CHECK_THROWS_AS(RatFunc<RationalField>(Poly<RationalField>(q, x)).inv(), Error);
  CHECK(a.pow(-2) == parse_ratfunc(q, x, "x2^2/x1^2"));
}

TEST_CASE("composition and permutation action") {
  RationalField q;
  Ambient x = Ambient::numbered("x", 3);
  auto f = parse_ratfunc(q, x, "(x1 + x2)/x3");
  std::vector<size_t> cyc{1, 2, 0};  // x1 -> x2 -> x3 -> x1
  CHECK(f.apply_perm(cyc) == parse_ratfunc(q, x, "(x2 + x3)/x1"));
  Ambient y = Ambient::numbered("y", 2);
  std::vector<RatFunc<RationalField>> img{parse_ratfunc(q, y, "y1*y2"), parse_ratfunc(q, y, "y2"),
                                          parse_ratfunc(q, y, "y1 - 1")};
  CHECK(f.compose(img) == parse_ratfunc(q, y, "(y1*y2 + y2)/(y1 - 1)"));
  std::vector<RatFunc<RationalField>> pole{parse_ratfunc(q, y, "y1"), parse_ratfunc(q, y, "y2"),
                                           RatFunc<RationalField>(Poly<RationalField>(q, y))};
  CHECK_THROWS_AS(f.compose(pole), Error);
}

TEST_CASE("evaluation and derivatives") {
  RationalField q;
  Ambient x = Ambient::numbered("x", 2);
  auto f = parse_ratfunc(q, x, "x1/(x1 + x2)");
  std::vector<Rational> pt{Rational(1), Rational(2)};
  CHECK(f.eval(pt) == Rational(1, 3));
  std::vector<Rational> bad{Rational(1), Rational(-1)};
  CHECK_THROWS_AS(f.eval(bad), Error);
  CHECK(f.derivative(0) == parse_ratfunc(q, x, "x2/(x1 + x2)^2"));
}

TEST_CASE("jacobian rank at a point") {
  RationalField q;
  Ambient x = Ambient::numbered("x", 3);
  std::vector<RatFunc<RationalField>> g{parse_ratfunc(q, x, "x1 + x2 + x3"), parse_ratfunc(q, x, "x1*x2 + x2*x3 + x1*x3"),
                                        parse_ratfunc(q, x, "x1*x2*x3")};
  std::vector<Rational> pt{Rational(1), Rational(2), Rational(5)};
  CHECK(jacobian_rank_at<RationalField>(g, pt) == 3);
  std::vector<Rational> diag{Rational(1), Rational(1), Rational(5)};
  CHECK(jacobian_rank_at<RationalField>(g, diag) == 2);
  g[2] = g[0] * g[1];
  CHECK(jacobian_rank_at<RationalField>(g, pt) == 2);
}

TEST_CASE("permutation action is a homomorphism on random functions") {
  RationalField q;
  Ambient x = Ambient::numbered("x", 4);
  auto f = parse_ratfunc(q, x, "(x1^2*x2 - x3)/(x4 + x1*x3 + 1)");
  auto g = parse_ratfunc(q, x, "(x2 - x4)/(x1 + 2)");
  std::vector<size_t> s{1, 0, 3, 2};
  CHECK((f * g).apply_perm(s) == f.apply_perm(s) * g.apply_perm(s));
  CHECK((f + g).apply_perm(s) == f.apply_perm(s) + g.apply_perm(s));
  CHECK(f.apply_perm(s).apply_perm(s) == f);
}
