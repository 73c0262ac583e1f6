#include <doctest.h>
#include <json.hpp>

#include <string>

#include "invfield/invfield.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ivf_free_string(s);
  return out;
}

nlohmann::json take_json(char* s) { return nlohmann::json::parse(take(s)); }

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(ivf_status_name(IVF_OK)) == "Ok");
  CHECK(std::string(ivf_status_name(IVF_E_CERTIFICATE_FAILURE)) == "CertificateFailure");
  CHECK(std::string(ivf_status_name(IVF_E_NULL_ARGUMENT)) == "NullArgument");
  unsigned ch = 0;
  CHECK(ivf_field_characteristic("GF(9)", &ch) == IVF_E_INVALID_ARGUMENT);
  CHECK(std::string(ivf_last_error()).find("not prime") != std::string::npos);
  CHECK(ivf_field_characteristic(nullptr, &ch) == IVF_E_NULL_ARGUMENT);
  CHECK(ivf_field_characteristic("GF(5)(z3)", &ch) == IVF_OK);
  CHECK(ch == 5);
  CHECK(ivf_field_characteristic("GF(7)(z3)", &ch) == IVF_E_INVALID_ARGUMENT);
}

TEST_CASE("element operations") {
  char* out = nullptr;
  REQUIRE(ivf_element_op("Q", "add", "1/2", "1/3", &out) == IVF_OK);
  CHECK(take(out) == "5/6");
  REQUIRE(ivf_element_op("GF(3)", "inv", "2", nullptr, &out) == IVF_OK);
  CHECK(take(out) == "2 mod 3");
  REQUIRE(ivf_element_op("Q(z3)", "mul", "z3", "z3", &out) == IVF_OK);
  CHECK(take(out) == "-1 - z3");
  REQUIRE(ivf_element_op("Q(z3)", "conj", "z3", nullptr, &out) == IVF_OK);
  CHECK(take(out) == "-1 - z3");
  CHECK(ivf_element_op("Q", "inv", "0", nullptr, &out) == IVF_E_DIVISION_BY_ZERO);
  CHECK(ivf_element_op("Q", "conj", "1", nullptr, &out) == IVF_E_NEEDS_CYCLO_FIELD);
}

TEST_CASE("rational functions round-trip through JSON") {
  ivf_ratfunc* r = nullptr;
  REQUIRE(ivf_ratfunc_parse("Q", "x,y,z", "(x^2*y+y^2*z+z^2*x-3*x*y*z)/(x^2+y^2+z^2-x*y-y*z-z*x)", &r) == IVF_OK);
  ivf_ratfunc* s = nullptr;
  REQUIRE(ivf_ratfunc_apply_perm(r, "(123)", &s) == IVF_OK);
  int eq = 0;
  REQUIRE(ivf_ratfunc_equal(r, s, &eq) == IVF_OK);
  CHECK(eq == 1);

  char* js = nullptr;
  REQUIRE(ivf_ratfunc_to_json(r, &js) == IVF_OK);
  std::string doc = take(js);
  auto parsed = nlohmann::json::parse(doc);
  CHECK(parsed["vars"] == nlohmann::json::array({"x", "y", "z"}));
  ivf_ratfunc* back = nullptr;
  REQUIRE(ivf_ratfunc_from_json(nullptr, doc.c_str(), &back) == IVF_OK);
  REQUIRE(ivf_ratfunc_equal(r, back, &eq) == IVF_OK);
  CHECK(eq == 1);

  const char* pt[] = {"1", "2", "4"};
  char* val = nullptr;
  REQUIRE(ivf_ratfunc_eval(r, pt, 3, &val) == IVF_OK);
  CHECK(take(val) == "10/7");
  CHECK(ivf_ratfunc_eval(r, pt, 2, &val) == IVF_E_ARITY_MISMATCH);

  ivf_ratfunc* diff = nullptr;
  REQUIRE(ivf_ratfunc_arith(r, '-', s, &diff) == IVF_OK);
  char* txt = nullptr;
  REQUIRE(ivf_ratfunc_to_string(diff, &txt) == IVF_OK);
  CHECK(take(txt) == "0");

  ivf_ratfunc* other = nullptr;
  REQUIRE(ivf_ratfunc_parse("GF(5)", "x,y,z", "x", &other) == IVF_OK);
  ivf_ratfunc* bad = nullptr;
  CHECK(ivf_ratfunc_arith(r, '+', other, &bad) == IVF_E_AMBIENT_MISMATCH);

  for (ivf_ratfunc* p : {r, s, back, diff, other}) ivf_ratfunc_free(p);
  CHECK(ivf_ratfunc_parse("Q", "x", "x +", &r) == IVF_E_PARSE);
}

TEST_CASE("polynomial JSON documents") {
  const char* doc = R"({"vars":["x1","x2"],"terms":[{"coef":"3/2","exps":[2,0]},{"coef":"-1","exps":[0,1]}]})";
  ivf_ratfunc* r = nullptr;
  REQUIRE(ivf_ratfunc_from_json("Q", doc, &r) == IVF_OK);
  char* txt = nullptr;
  REQUIRE(ivf_ratfunc_to_string(r, &txt) == IVF_OK);
  CHECK(take(txt) == "3/2*x1^2 - x2");
  ivf_ratfunc_free(r);
  CHECK(ivf_ratfunc_from_json("Q", R"({"vars":["x"],"terms":[{"coef":"1","exps":[1,2]}]})", &r) ==
        IVF_E_ARITY_MISMATCH);
  CHECK(ivf_ratfunc_from_json("Q", "{", &r) == IVF_E_PARSE);
}

TEST_CASE("catalog and permutations") {
  char* out = nullptr;
  REQUIRE(ivf_catalog_json(&out) == IVF_OK);
  auto j = take_json(out);
  std::vector<uint64_t> orders;
  for (const auto& g : j["groups"]) orders.push_back(g["order"].get<uint64_t>());
  CHECK(orders == std::vector<uint64_t>{72, 36, 36, 18});
  uint64_t n = 0;
  CHECK(ivf_group_order("A6", &n) == IVF_OK);
  CHECK(n == 360);
  CHECK(ivf_group_order("T6.13", &n) == IVF_E_INVALID_ARGUMENT);
  unsigned ord = 0;
  char* prod = nullptr;
  REQUIRE(ivf_perm_compose(6, "(1542)(36)", "(123)", &prod) == IVF_OK);
  std::string ls = take(prod);
  REQUIRE(ivf_perm_compose(6, ls.c_str(), "(1542)(36)", &prod) == IVF_OK);
  std::string g = take(prod);
  REQUIRE(ivf_perm_order(6, g.c_str(), &ord) == IVF_OK);
  CHECK(ord == 5);
  int in = 1;
  REQUIRE(ivf_group_contains("G2", g.c_str(), &in) == IVF_OK);
  CHECK(in == 0);
}

TEST_CASE("towers through the C interface") {
  ivf_tower* t = nullptr;
  REQUIRE(ivf_tower_build("G2", 2, nullptr, &t) == IVF_OK);
  int pass = 0;
  char* rep = nullptr;
  REQUIRE(ivf_tower_verify(t, 0, &pass, &rep) == IVF_OK);
  CHECK(pass == 1);
  auto j = take_json(rep);
  CHECK(j["total_degree"] == 36);
  CHECK(j["jacobian_rank"] == 6);

  ivf_tower* m = nullptr;
  REQUIRE(ivf_tower_mutate(t, "f5", nullptr, &m) == IVF_OK);
  REQUIRE(ivf_tower_verify(m, 0, &pass, nullptr) == IVF_OK);
  CHECK(pass == 0);
  ivf_tower_free(m);
  CHECK(ivf_tower_mutate(t, "nope", nullptr, &m) != IVF_OK);

  char* gens = nullptr;
  REQUIRE(ivf_tower_generators_json(t, &gens) == IVF_OK);
  CHECK(take_json(gens)["generators"].size() == 6);
  ivf_tower_free(t);

  CHECK(ivf_tower_build("G3", 3, "descent", &t) == IVF_E_WRONG_CHARACTERISTIC);
  CHECK(ivf_tower_build("G3", 7, "descent", &t) == IVF_E_INVALID_ARGUMENT);
  CHECK(ivf_tower_build("S6", 0, nullptr, &t) == IVF_E_INVALID_ARGUMENT);
  CHECK(ivf_tower_build("G1", 0, "sideways", &t) == IVF_E_INVALID_ARGUMENT);

  REQUIRE(ivf_tower_build("G3", 5, "descent", &t) == IVF_OK);
  REQUIRE(ivf_tower_verify(t, 1, &pass, &rep) == IVF_OK);
  CHECK(pass == 1);
  bool saw_descent = false;
  const auto report = take_json(rep);
  for (const auto& c : report["checks"]) saw_descent = saw_descent || c["step"] == "descent";
  CHECK(saw_descent);
  REQUIRE(ivf_tower_invariance(t, "G3", &pass, nullptr) == IVF_OK);
  CHECK(pass == 1);
  ivf_tower_free(t);
}

TEST_CASE("remark reports") {
  int pass = 0;
  char* rep = nullptr;
  REQUIRE(ivf_masuda_report(0, 0, &pass, &rep) == IVF_OK);
  CHECK(pass == 1);
  auto j = take_json(rep);
  CHECK(j["at_1_2_4"]["u"] == "10/7");
  REQUIRE(ivf_wreath_report(2, 0, 0, &pass, nullptr) == IVF_OK);
  CHECK(pass == 1);
  REQUIRE(ivf_artin_schreier_report(5, 0, &pass, nullptr) == IVF_OK);
  CHECK(pass == 1);
  CHECK(ivf_artin_schreier_report(11, 0, &pass, nullptr) == IVF_E_WRONG_CHARACTERISTIC);
}

TEST_CASE("sextics and Frobenius census") {
  ivf_sextic* s = nullptr;
  CHECK(ivf_sextic_new("G2", "full", 0, &s) == IVF_E_NOT_PROVIDED);
  CHECK(std::string(ivf_last_error()).find("not provided") != std::string::npos);
  CHECK(ivf_sextic_new("G1", "char2", 0, &s) == IVF_E_WRONG_CHARACTERISTIC);
  REQUIRE(ivf_sextic_new("G1", "full", 0, &s) == IVF_OK);
  int pass = 0;
  REQUIRE(ivf_sextic_verify_identity(s, &pass, nullptr) == IVF_OK);
  CHECK(pass == 1);
  ivf_sextic_free(s);

  REQUIRE(ivf_sextic_new("G1", "general", 0, &s) == IVF_OK);
  size_t n = 0;
  REQUIRE(ivf_sextic_param_count(s, &n) == IVF_OK);
  CHECK(n == 5);
  const char* vals[] = {"1", "2", "3", "4", "5"};
  char* out = nullptr;
  REQUIRE(ivf_sextic_specialize(s, vals, 5, &out) == IVF_OK);
  auto sp = take_json(out);
  CHECK(sp["coeffs"][0] == "-2");
  CHECK(sp["provenance"]["params"]["t3"] == "3");
  const char* pole[] = {"1", "2", "0", "4", "5"};
  CHECK(ivf_sextic_specialize(s, pole, 5, &out) == IVF_E_POLE_AT_PARAMETERS);
  ivf_sextic_free(s);

  REQUIRE(ivf_frobenius_census_json(sp.dump().c_str(), 5, 2000, "G1", &out) == IVF_OK);
  auto c = take_json(out);
  CHECK(c["total"].get<int>() > 250);
  CHECK(c["containment"].is_boolean());

  const char* coeffs[] = {"1", "-21", "175", "-735", "1624", "-1764", "720"};
  REQUIRE(ivf_frobenius_census(coeffs, 7, 7, 100, "G1", &out) == IVF_OK);
  c = take_json(out);
  CHECK(c["census"]["[1,1,1,1,1,1]"] == c["total"]);
  CHECK(c["containment"] == true);
  CHECK(ivf_frobenius_census(coeffs, 7, 2, 5, "G1", &out) == IVF_E_NO_USABLE_PRIMES);

  const uint32_t f[] = {1, 1, 0, 1};  // X^3 + X + 1 over GF(5)
  unsigned pat[6];
  size_t len = 0;
  REQUIRE(ivf_degree_pattern(5, f, 4, pat, 6, &len) == IVF_OK);
  CHECK(len == 1);
  CHECK(pat[0] == 3);
}
