#include <algorithm>
#include <random>
#include <sstream>

#include "ratfield/sampling.hpp"
#include "towers/towers.hpp"

namespace invfield {

bool TowerReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Obligation& o) { return o.pass; });
}

const Obligation* TowerReport::first_failure() const {
  for (const auto& o : checks) {
    if (!o.pass) return &o;
  }
  return nullptr;
}

namespace {

template <class F>
using RF = RatFunc<F>;

template <class F>
std::vector<RF<F>> variables(const F& field, const Ambient& vars) {
  std::vector<RF<F>> out;
  for (size_t i = 0; i < vars.size(); ++i) out.push_back(RF<F>::variable(field, vars, i));
  return out;
}

// Runs fn and records a pass, a mismatch, or the error it raised.
template <class Fn>
Obligation check(std::string step, std::string kind, std::string subject, Fn&& fn) {
  Obligation o{std::move(step), std::move(kind), std::move(subject), false, ""};
  try {
    o.pass = fn(o.detail);
  } catch (const Error& e) {
    o.pass = false;
    o.detail = e.what();
  }
  return o;
}

template <class F>
std::string mismatch(const RF<F>& got, const RF<F>& want) {
  std::string g = got.to_string(), w = want.to_string();
  auto clip = [](std::string s) { return s.size() > 160 ? s.substr(0, 157) + "..." : s; };
  return "got " + clip(g) + ", expected " + clip(w);
}

// Jacobian of the tower at a random point by the chain rule through the
// levels; each factor is evaluated from its own (small) definitions.
template <class F, class S>
std::optional<size_t> chain_rank(const Tower<F>& tower, const S& s, std::mt19937_64& rng) {
  using E = typename S::E;
  const size_t n = tower.base.size();
  std::vector<E> pt;
  for (size_t i = 0; i < n; ++i) pt.push_back(s.random(rng));
  std::vector<std::vector<E>> J;  // rows: current level gens, cols: x
  for (size_t i = 0; i < n; ++i) {
    std::vector<E> row(n, s.zero());
    row[i] = s.embed(tower.field.one());
    J.push_back(std::move(row));
  }
  for (const auto& step : tower.steps) {
    const auto& gens = step.gens.gens;
    std::vector<std::vector<E>> Jstep;
    std::vector<E> next;
    for (const auto& g : gens) {
      E nv = eval_at(s, g.num(), std::span<const E>(pt));
      E dv = eval_at(s, g.den(), std::span<const E>(pt));
      if (dv.is_zero()) return std::nullopt;
      E dinv = dv.inv();
      std::vector<E> row;
      for (size_t j = 0; j < pt.size(); ++j) {
        E dn = eval_at(s, g.num().derivative(j), std::span<const E>(pt));
        E dd = eval_at(s, g.den().derivative(j), std::span<const E>(pt));
        row.push_back((dn * dv - nv * dd) * dinv * dinv);
      }
      Jstep.push_back(std::move(row));
      next.push_back(nv * dinv);
    }
    std::vector<std::vector<E>> prod(Jstep.size(), std::vector<E>(n, s.zero()));
    for (size_t r = 0; r < Jstep.size(); ++r) {
      for (size_t k = 0; k < J.size(); ++k) {
        if (Jstep[r][k].is_zero()) continue;
        for (size_t c = 0; c < n; ++c) prod[r][c] = prod[r][c] + Jstep[r][k] * J[k][c];
      }
    }
    J = std::move(prod);
    pt = std::move(next);
  }
  return matrix_rank(std::move(J));
}

}  // namespace

template <class F>
InvarianceReport verify_invariance(const GeneratorSet<F>& gens, const Group& group) {
  InvarianceReport r;
  for (const auto& g : group.generators()) {
    if (g.degree() != gens.vars.size()) fail(ErrorCode::ArityMismatch, "group degree differs from the ambient");
    auto img = g.images();
    for (size_t i = 0; i < gens.size(); ++i) {
      ++r.checked;
      if (!(gens.gens[i].apply_perm(img) == gens.gens[i])) r.failures.push_back({gens.names[i], g.to_string()});
    }
  }
  return r;
}

template <class F>
size_t jacobian_rank_random(const GeneratorSet<F>& gens, uint64_t seed, int tries) {
  return with_sampler(gens.field, [&](const auto& s) -> size_t {
    using E = typename std::decay_t<decltype(s)>::E;
    std::mt19937_64 rng(seed);
    size_t best = 0;
    int done = 0;
    for (int attempt = 0; attempt < 100 && done < tries; ++attempt) {
      std::vector<E> pt;
      for (size_t i = 0; i < gens.vars.size(); ++i) pt.push_back(s.random(rng));
      std::vector<std::vector<E>> m;
      bool pole = false;
      for (const auto& g : gens.gens) {
        E nv = eval_at(s, g.num(), std::span<const E>(pt));
        E dv = eval_at(s, g.den(), std::span<const E>(pt));
        if (dv.is_zero()) {
          pole = true;
          break;
        }
        E dinv = dv.inv();
        std::vector<E> row;
        for (size_t j = 0; j < pt.size(); ++j) {
          E dn = eval_at(s, g.num().derivative(j), std::span<const E>(pt));
          E dd = eval_at(s, g.den().derivative(j), std::span<const E>(pt));
          row.push_back((dn * dv - nv * dd) * dinv * dinv);
        }
        m.push_back(std::move(row));
      }
      if (pole) continue;
      ++done;
      best = std::max(best, matrix_rank(std::move(m)));
    }
    if (done == 0) fail(ErrorCode::RetriesExhausted, "every sampled point was a pole");
    return best;
  });
}

template <class F>
GeneratorSet<F> final_x_forms(const Tower<F>& tower) {
  std::vector<RF<F>> forms = variables(tower.field, tower.base);
  for (const auto& step : tower.steps) {
    std::vector<RF<F>> next;
    for (const auto& g : step.gens.gens) next.push_back(g.compose(forms));
    forms = std::move(next);
  }
  GeneratorSet<F> out = tower.final_set();
  out.vars = tower.base;
  out.gens = std::move(forms);
  return out;
}

template <class F>
TowerReport verify_tower(const Tower<F>& tower, uint64_t seed) {
  TowerReport rep;
  rep.tower = tower.name;
  rep.field = tower.field.name();
  rep.seed = seed;
  rep.group_order = tower.group.order();
  const F& field = tower.field;
  const size_t n = tower.base.size();

  std::vector<RF<F>> xprev = variables(field, tower.base);
  Group N(n, {}, "");
  uint64_t total = 1;

  for (size_t j = 0; j < tower.steps.size(); ++j) {
    const auto& step = tower.steps[j];
    const Ambient old = tower.level_ambient(j);
    const auto& defs = step.gens.gens;
    const std::string label = std::to_string(j + 1) + ":" + step.label;

    // Claimed images of the old generators, checked on their x-forms.
    for (const auto& a : step.acting) {
      auto img = a.sigma.images();
      for (size_t i = 0; i < old.size(); ++i) {
        rep.checks.push_back(check(label, "action", a.label + "(" + old.name(i) + ")", [&](std::string& d) {
          RF<F> lhs = xprev[i].apply_perm(img);
          RF<F> rhs = a.images.at(i).compose(xprev);
          if (lhs == rhs) return true;
          d = "claimed image " + a.images[i].to_string() + " disagrees with the permuted function";
          return false;
        }));
      }
    }

    for (const auto& a : step.acting) {
      if (!a.generates) continue;
      for (size_t h = 0; h < defs.size(); ++h) {
        rep.checks.push_back(check(label, "invariance", a.label + "(" + step.gens.names[h] + ")", [&](std::string& d) {
          RF<F> moved = defs[h].compose(a.images);
          if (moved == defs[h]) return true;
          d = mismatch<F>(moved, defs[h]);
          return false;
        }));
      }
    }

    std::vector<RF<F>> subst = defs;
    for (const auto& aux : step.cert.aux) subst.push_back(aux.definition);
    for (size_t k = 0; k < step.cert.aux.size(); ++k) {
      const auto& aux = step.cert.aux[k];
      rep.checks.push_back(check(label, "minpoly", aux.name + ": " + aux.minpoly_text, [&](std::string& d) {
        // Coefficients may involve only the new generators and earlier auxiliaries.
        for (const auto& c : aux.minpoly) {
          for (size_t v = defs.size() + k; v < step.cert.vars.size(); ++v) {
            if (c.num().depends_on(v) || c.den().depends_on(v)) {
              d = "coefficient involves " + step.cert.vars.name(v);
              return false;
            }
          }
        }
        RF<F> h = RF<F>::from_int(field, old, 1);
        for (size_t i = aux.minpoly.size(); i-- > 0;) h = h * aux.definition + aux.minpoly[i].compose(subst);
        if (h.is_zero()) return true;
        d = "residue " + h.to_string();
        return false;
      }));
    }

    for (size_t i = 0; i < old.size(); ++i) {
      rep.checks.push_back(check(label, "reconstruction", old.name(i), [&](std::string& d) {
        RF<F> back = step.cert.reconstruction.at(i).compose(subst);
        RF<F> want = RF<F>::variable(field, old, i);
        if (back == want) return true;
        d = mismatch<F>(back, want);
        return false;
      }));
    }

    std::vector<Perm> gens = N.generators();
    for (const auto& a : step.acting) {
      if (a.generates) gens.push_back(a.sigma);
    }
    Group next(n, gens, "");
    const uint64_t cdeg = step.cert.degree();
    rep.checks.push_back(check(label, "degree", "subquotient order", [&](std::string& d) {
      const uint64_t ratio = next.order() / N.order();
      d = "|subquotient| = " + std::to_string(ratio) + ", certificate degree = " + std::to_string(cdeg);
      return next.order() % N.order() == 0 && ratio == cdeg;
    }));
    total *= cdeg;
    N = next;

    if (j + 1 < tower.steps.size()) {
      std::vector<RF<F>> xnext;
      for (const auto& g : defs) xnext.push_back(g.compose(xprev));
      xprev = std::move(xnext);
    }
  }

  rep.total_degree = total;
  rep.checks.push_back(check("tower", "group", "generated group equals " + tower.group.name(), [&](std::string& d) {
    d = "order " + std::to_string(N.order());
    return N.same_elements(tower.group);
  }));
  rep.checks.push_back(check("tower", "total-degree", "product of step degrees", [&](std::string& d) {
    d = std::to_string(total) + " vs |G| = " + std::to_string(rep.group_order);
    return total == rep.group_order;
  }));
  rep.checks.push_back(check("tower", "jacobian", "rank of final generators", [&](std::string& d) {
    return with_sampler(field, [&](const auto& s) {
      std::mt19937_64 rng(seed);
      rep.sampling = s.describe();
      size_t best = 0;
      int done = 0;
      for (int attempt = 0; attempt < 100 && done < 5 && best < n; ++attempt) {
        auto r = chain_rank(tower, s, rng);
        if (!r) continue;
        ++done;
        best = std::max(best, *r);
      }
      if (done == 0) fail(ErrorCode::RetriesExhausted, "every sampled point was a pole");
      rep.jacobian_rank = best;
      d = "rank " + std::to_string(best) + " of " + std::to_string(n);
      return best == n;
    });
  }));
  if (rep.pass()) {
    rep.conclusion = "each step is Galois of the certified degree (Artin), so the final generators generate K(x)^" +
                     tower.group.name();
  } else {
    const Obligation* f = rep.first_failure();
    rep.conclusion = "certificate failure at " + f->step + " (" + f->kind + " " + f->subject + ")";
  }
  return rep;
}

template <class F>
Tower<F> mutate(const Tower<F>& tower, const std::string& name, const std::optional<std::string>& plus) {
  Tower<F> t = tower;
  for (size_t j = t.steps.size(); j-- > 0;) {
    auto& gs = t.steps[j].gens;
    for (size_t i = 0; i < gs.names.size(); ++i) {
      if (gs.names[i] != name) continue;
      RF<F> delta = RF<F>::from_int(t.field, gs.vars, 1);
      if (plus) delta = gs.at(*plus);
      gs.gens[i] = gs.gens[i] + delta;
      t.notes.push_back("mutated " + name + " by +" + (plus ? *plus : std::string("1")));
      return t;
    }
  }
  fail(ErrorCode::UnknownVariable, "no generator named '" + name + "' in the tower");
}

template <class F>
std::vector<Obligation> verify_descent(const Tower<F>& tower, uint64_t seed) {
  std::vector<Obligation> out;
  if constexpr (!is_cyclo_field_v<F>) {
    fail(ErrorCode::NeedsCycloField, "descent checks need a cyclotomic coefficient field");
  } else {
    const F& field = tower.field;
    auto conj = [&](const RF<F>& r) {
      auto c = [](const typename F::Elem& e) { return e.conjugate(); };
      return RF<F>::make(r.num().map_coefficients(field, c), r.den().map_coefficients(field, c));
    };
    // x-forms of every level.
    std::vector<std::vector<RF<F>>> levels{variables(field, tower.base)};
    for (const auto& step : tower.steps) {
      std::vector<RF<F>> next;
      for (const auto& g : step.gens.gens) next.push_back(g.compose(levels.back()));
      levels.push_back(std::move(next));
    }
    const auto& fin = levels.back();
    const auto& names = tower.final_set().names;
    for (size_t i = 0; i < fin.size(); ++i) {
      out.push_back(check("descent", "base-field", names[i], [&](std::string& d) {
        for (const auto* p : {&fin[i].num(), &fin[i].den()}) {
          for (const auto& t : p->terms()) {
            if (!t.coef.in_base()) {
              d = "coefficient " + field.format(t.coef) + " involves z3";
              return false;
            }
          }
        }
        return true;
      }));
    }
    const auto& cat = catalog();
    const auto l2 = (cat.lambda * cat.lambda).images();
    const auto& u = levels[levels.size() - 2];
    const Ambient uvars = tower.level_ambient(tower.steps.size() - 1);
    for (size_t i = 0; i < u.size(); ++i) {
      out.push_back(check("descent", "lambda^2 rho", uvars.name(i), [&](std::string& d) {
        RF<F> moved = conj(u[i]).apply_perm(l2);
        if (moved == u[i]) return true;
        d = mismatch<F>(moved, u[i]);
        return false;
      }));
    }
    // Conjugation commutes with the group on sampled products of tower elements.
    std::mt19937_64 rng(seed);
    std::vector<const RF<F>*> pool;
    for (size_t l = 1; l + 1 < levels.size(); ++l) {
      for (const auto& g : levels[l]) pool.push_back(&g);
    }
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    out.push_back(check("descent", "rho commutes", "50 sampled elements", [&](std::string& d) {
      for (int k = 0; k < 50; ++k) {
        RF<F> e = *pool[pick(rng)] + *pool[pick(rng)] * RF<F>::variable(field, tower.base, k % tower.base.size());
        for (const auto& g : cat.G3.generators()) {
          auto img = g.images();
          if (!(conj(e.apply_perm(img)) == conj(e).apply_perm(img))) {
            d = "sample " + std::to_string(k) + " under " + g.to_string();
            return false;
          }
        }
      }
      return true;
    }));
  }
  return out;
}

#define INVFIELD_INSTANTIATE(F)                                                                    \
  template InvarianceReport verify_invariance(const GeneratorSet<F>&, const Group&);               \
  template size_t jacobian_rank_random(const GeneratorSet<F>&, uint64_t, int);                     \
  template GeneratorSet<F> final_x_forms(const Tower<F>&);                                         \
  template TowerReport verify_tower(const Tower<F>&, uint64_t);                                    \
  template Tower<F> mutate(const Tower<F>&, const std::string&, const std::optional<std::string>&); \
  template std::vector<Obligation> verify_descent(const Tower<F>&, uint64_t);

INVFIELD_INSTANTIATE(RationalField)
INVFIELD_INSTANTIATE(PrimeField)
INVFIELD_INSTANTIATE(CycloQ)
INVFIELD_INSTANTIATE(CycloGF)

}  // namespace invfield
