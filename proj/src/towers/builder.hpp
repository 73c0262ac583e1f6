#pragma once

// Assembles towers from formulas written as text over each level's names.

#include <string>
#include <utility>
#include <vector>

#include "ratfield/parse.hpp"
#include "towers/towers.hpp"

namespace invfield::detail {

using Lets = std::vector<std::pair<std::string, std::string>>;

struct ActText {
  std::string label;
  Perm sigma;
  std::vector<std::string> images;  // empty: induced permutation of the base variables
  bool generates = true;
};

struct AuxText {
  std::string name;
  std::string definition;  // over the old generators
  std::string minpoly;     // monic in T over the certificate ambient
};

struct StepText {
  std::string label;
  std::vector<std::string> names;
  std::vector<std::string> defs;
  std::vector<std::string> labels;
  Lets lets;  // helpers for defs, images and auxiliary definitions
  std::vector<ActText> acting;
  std::vector<AuxText> aux;
  Lets recon;  // bindings for old generator names not in the certificate ambient
};

template <class F>
ParseEnv<F> bind_lets(const F& field, const Ambient& vars, const Lets& lets) {
  ParseEnv<F> env;
  for (const auto& [name, text] : lets) env.insert_or_assign(name, parse_ratfunc(field, vars, text, &env));
  return env;
}

/// Splits a monic polynomial in T into its lower coefficients.
template <class F>
std::vector<RatFunc<F>> minpoly_coefficients(const F& field, const Ambient& cert, const std::string& text,
                                             const ParseEnv<F>& env) {
  Ambient with_t = cert.extended({"T"});
  ParseEnv<F> widened;
  for (const auto& [k, v] : env) widened.emplace(k, v.widen(with_t));
  RatFunc<F> m = parse_ratfunc(field, with_t, text, &widened);
  const size_t t = cert.size();
  if (m.den().depends_on(t)) fail(ErrorCode::InvalidArgument, "minimal polynomial is not polynomial in T: " + text);
  const uint32_t d = m.num().degree_in(t);
  std::vector<std::vector<typename Poly<F>::Term>> parts(d + 1);
  for (const auto& term : m.num().terms()) {
    auto mono = term.mono;
    uint32_t e = mono[t];
    mono.set(t, 0);
    parts[e].push_back({mono, term.coef});
  }
  std::vector<size_t> map(with_t.size());
  for (size_t i = 0; i < cert.size(); ++i) map[i] = i;
  map[t] = 0;  // never used: T has been stripped
  auto narrow = [&](const Poly<F>& p) { return p.relabel(cert, map); };
  Poly<F> den = narrow(m.den());
  auto coef = [&](uint32_t e) {
    return RatFunc<F>::make(narrow(Poly<F>::from_terms(field, with_t, parts[e])), den);
  };
  if (d == 0 || !coef(d).is_one()) fail(ErrorCode::InvalidArgument, "minimal polynomial must be monic in T: " + text);
  std::vector<RatFunc<F>> out;
  for (uint32_t e = 0; e < d; ++e) out.push_back(coef(e));
  return out;
}

template <class F>
void add_step(Tower<F>& tower, const StepText& s) {
  const F& field = tower.field;
  const Ambient old = tower.level_ambient(tower.steps.size());
  DescentStep<F> step;
  step.label = s.label;
  ParseEnv<F> env = bind_lets(field, old, s.lets);

  step.gens.field = field;
  step.gens.vars = old;
  step.gens.names = s.names;
  step.gens.labels = s.labels;
  for (const auto& d : s.defs) step.gens.gens.push_back(parse_ratfunc(field, old, d, &env));
  if (step.gens.gens.size() != s.names.size()) fail(ErrorCode::ArityMismatch, s.label + ": names and definitions differ in number");

  for (const auto& a : s.acting) {
    Acting<F> act{a.label, a.sigma, {}, a.generates};
    if (a.images.empty()) {
      if (tower.steps.size() != 0) fail(ErrorCode::InvalidArgument, s.label + ": images required above the base");
      for (size_t i = 0; i < old.size(); ++i) act.images.push_back(RatFunc<F>::variable(field, old, a.sigma(i)));
    } else {
      for (const auto& im : a.images) act.images.push_back(parse_ratfunc(field, old, im, &env));
    }
    step.acting.push_back(std::move(act));
  }

  std::vector<std::string> cert_names = s.names;
  for (const auto& a : s.aux) cert_names.push_back(a.name);
  step.cert.vars = Ambient(cert_names);
  ParseEnv<F> renv = bind_lets(field, step.cert.vars, s.recon);
  for (const auto& a : s.aux) {
    Auxiliary<F> aux;
    aux.name = a.name;
    aux.definition = parse_ratfunc(field, old, a.definition, &env);
    aux.minpoly = minpoly_coefficients(field, step.cert.vars, a.minpoly, renv);
    aux.minpoly_text = a.minpoly;
    step.cert.aux.push_back(std::move(aux));
  }
  for (size_t i = 0; i < old.size(); ++i) {
    const std::string& name = old.name(i);
    if (auto idx = step.cert.vars.index_of(name)) {
      step.cert.reconstruction.push_back(RatFunc<F>::variable(field, step.cert.vars, *idx));
    } else if (auto it = renv.find(name); it != renv.end()) {
      step.cert.reconstruction.push_back(it->second);
    } else {
      fail(ErrorCode::InvalidArgument, s.label + ": no reconstruction for " + name);
    }
  }
  tower.steps.push_back(std::move(step));
}

}  // namespace invfield::detail
