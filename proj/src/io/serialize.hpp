#pragma once

// JSON forms of the library's values.
//
//   poly      {"field": "Q", "vars": [...], "terms": [{"coef": "3/2", "exps": [...]}]}
//   ratfunc   {"field": "Q", "vars": [...], "num": [terms], "den": [terms]}
//
// Coefficients use the same text grammar as the element parsers.

#include <json.hpp>

#include <string>
#include <vector>

#include "galois/galois.hpp"
#include "genpoly/genpoly.hpp"
#include "polyring/poly.hpp"
#include "ratfield/ratfunc.hpp"
#include "towers/towers.hpp"

namespace invfield::io {

using json = nlohmann::ordered_json;

template <class F>
json terms_json(const Poly<F>& p) {
  json terms = json::array();
  const size_t n = p.ambient().size();
  for (const auto& t : p.terms()) {
    std::vector<uint32_t> exps(n);
    for (size_t i = 0; i < n; ++i) exps[i] = t.mono[i];
    terms.push_back({{"coef", p.field().format_coef(t.coef)}, {"exps", exps}});
  }
  return terms;
}

template <class F>
json to_json(const Poly<F>& p) {
  return {{"field", p.field().name()}, {"vars", p.ambient().names()}, {"terms", terms_json(p)}};
}

template <class F>
json to_json(const RatFunc<F>& r) {
  return {{"field", r.field().name()},
          {"vars", r.ambient().names()},
          {"num", terms_json(r.num())},
          {"den", terms_json(r.den())}};
}

inline Ambient ambient_from_json(const json& j) {
  if (!j.contains("vars") || !j["vars"].is_array()) fail(ErrorCode::ParseError, "missing \"vars\" array");
  return Ambient(j["vars"].get<std::vector<std::string>>());
}

template <class F>
Poly<F> terms_from_json(const F& field, const Ambient& vars, const json& terms) {
  if (!terms.is_array()) fail(ErrorCode::ParseError, "terms must be an array");
  std::vector<typename Poly<F>::Term> out;
  for (const auto& t : terms) {
    if (!t.contains("coef") || !t.contains("exps")) fail(ErrorCode::ParseError, "term needs \"coef\" and \"exps\"");
    auto exps = t["exps"].get<std::vector<uint32_t>>();
    if (exps.size() != vars.size()) fail(ErrorCode::ArityMismatch, "exponent vector length differs from vars");
    const json& c = t["coef"];
    typename F::Elem coef = c.is_number_integer() ? field.from_int(c.get<long long>()) : field.parse(c.get<std::string>());
    out.push_back({Monomial(exps), coef});
  }
  return Poly<F>::from_terms(field, vars, std::move(out));
}

template <class F>
Poly<F> poly_from_json(const F& field, const json& j) {
  Ambient vars = ambient_from_json(j);
  if (!j.contains("terms")) fail(ErrorCode::ParseError, "missing \"terms\"");
  return terms_from_json(field, vars, j["terms"]);
}

template <class F>
RatFunc<F> ratfunc_from_json(const F& field, const json& j) {
  Ambient vars = ambient_from_json(j);
  if (!j.contains("num")) fail(ErrorCode::ParseError, "missing \"num\"");
  Poly<F> num = terms_from_json(field, vars, j["num"]);
  Poly<F> den = j.contains("den") ? terms_from_json(field, vars, j["den"]) : Poly<F>::constant(field, vars, field.one());
  return RatFunc<F>::make(num, den);
}

template <class F>
json to_json(const GeneratorSet<F>& g) {
  json gens = json::array();
  for (size_t i = 0; i < g.size(); ++i) {
    gens.push_back({{"name", g.names[i]}, {"label", g.label(i)}, {"text", g.gens[i].to_string()}, {"value", to_json(g.gens[i])}});
  }
  return {{"field", g.field.name()}, {"vars", g.vars.names()}, {"generators", gens}};
}

inline json to_json(const Obligation& o) {
  json j = {{"step", o.step}, {"kind", o.kind}, {"subject", o.subject}, {"pass", o.pass}};
  if (!o.detail.empty()) j["detail"] = o.detail;
  return j;
}

inline json summary_json(const TowerReport& r) {
  return {{"tower", r.tower},
          {"field", r.field},
          {"seed", r.seed},
          {"pass", r.pass()},
          {"checks", r.checks.size()},
          {"total_degree", r.total_degree},
          {"group_order", r.group_order},
          {"jacobian_rank", r.jacobian_rank},
          {"sampling", r.sampling},
          {"conclusion", r.conclusion}};
}

inline json to_json(const TowerReport& r) {
  json j = summary_json(r);
  json checks = json::array();
  for (const auto& o : r.checks) checks.push_back(to_json(o));
  j["checks"] = checks;
  return j;
}

inline json to_json(const InvarianceReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures) fails.push_back({{"generator", f.generator}, {"perm", f.perm}});
  return {{"checked", r.checked}, {"pass", r.pass()}, {"failures", fails}};
}

inline json census_json(const std::map<CycleType, long>& counts) {
  json j = json::object();
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) j[cycle_type_string(it->first)] = it->second;
  return j;
}

inline json census_json(const std::map<CycleType, Rational>& census) {
  json j = json::object();
  for (auto it = census.rbegin(); it != census.rend(); ++it) j[cycle_type_string(it->first)] = it->second.to_string();
  return j;
}

inline json to_json(const FrobeniusCensus& c) {
  return {{"census", census_json(c.counts)}, {"total", c.total}, {"skipped", c.skipped}};
}

template <class F>
json to_json(const GenericSextic<F>& g) {
  json coeffs = json::array();
  for (const auto& c : g.coeffs) coeffs.push_back(c.to_string());
  return {{"form", sextic_form_name(g.form)},
          {"field", g.field.name()},
          {"params", g.params.names()},
          {"text", g.to_string()},
          {"coeffs", coeffs}};
}

template <class F>
json to_json(const SpecializedSextic<F>& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(s.field.format_coef(c));
  json params = json::object();
  for (const auto& [name, v] : s.params) params[name] = s.field.format_coef(v);
  return {{"coeffs", coeffs}, {"provenance", {{"form", sextic_form_name(s.form)}, {"field", s.field.name()}, {"params", params}}}};
}

}  // namespace invfield::io
