#include "polyring/gcd.hpp"

#include <optional>

#include "polyring/modfield.hpp"
#include "polyring/modgcd.hpp"

namespace invfield {

namespace {

using modular::Exp;
using modular::MPoly;

// ---------------------------------------------------------------------------
// Subresultant PRS over F[other vars][v].

template <class F>
using Uni = std::vector<Poly<F>>;

template <class F>
Uni<F> to_uni(const Poly<F>& p, size_t v) {
  std::vector<std::vector<typename Poly<F>::Term>> buckets(p.degree_in(v) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    uint32_t e = m[v];
    m.set(v, 0);
    buckets[e].push_back({m, t.coef});
  }
  Uni<F> u;
  u.reserve(buckets.size());
  for (auto& b : buckets) u.push_back(Poly<F>::from_terms(p.field(), p.ambient(), std::move(b)));
  return u;
}

template <class F>
Poly<F> from_uni(const Uni<F>& u, size_t v, const F& field, const Ambient& vars) {
  std::vector<typename Poly<F>::Term> terms;
  for (size_t e = 0; e < u.size(); ++e) {
    for (const auto& t : u[e].terms()) {
      Monomial m = t.mono;
      m.set(v, static_cast<uint32_t>(e));
      terms.push_back({m, t.coef});
    }
  }
  return Poly<F>::from_terms(field, vars, std::move(terms));
}

template <class F>
void trim(Uni<F>& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

template <class F>
Uni<F> prem(Uni<F> a, const Uni<F>& b) {
  const Poly<F>& l = b.back();
  long e = static_cast<long>(a.size()) - static_cast<long>(b.size()) + 1;
  while (!a.empty() && a.size() >= b.size()) {
    size_t s = a.size() - b.size();
    Poly<F> c = a.back();
    for (auto& x : a) x = x * l;
    for (size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
    a.pop_back();
    trim(a);
    --e;
  }
  if (e > 0) {
    Poly<F> f = l.pow(static_cast<unsigned>(e));
    for (auto& x : a) x = x * f;
  }
  return a;
}

template <class F>
Poly<F> prs_gcd(const Poly<F>& a, const Poly<F>& b);

template <class F>
Poly<F> uni_content(const Uni<F>& u) {
  Poly<F> c;
  bool first = true;
  for (const auto& x : u) {
    if (x.is_zero()) continue;
    c = first ? x.monic() : prs_gcd(c, x);
    first = false;
    if (c.is_one()) break;
  }
  return c;
}

template <class F>
Poly<F> prs_gcd(const Poly<F>& a, const Poly<F>& b) {
  const F& field = a.field();
  const Ambient& vars = a.ambient();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly<F>::constant(field, vars, field.one());
  size_t v = vars.size();
  uint32_t best = 0;
  for (size_t i = 0; i < vars.size(); ++i) {
    uint32_t d = std::max(a.degree_in(i), b.degree_in(i));
    if (d > best) {
      best = d;
      v = i;
    }
  }
  if (!b.depends_on(v)) return prs_gcd(uni_content(to_uni(a, v)), b);
  if (!a.depends_on(v)) return prs_gcd(a, uni_content(to_uni(b, v)));

  Uni<F> A = to_uni(a, v), B = to_uni(b, v);
  Poly<F> ca = uni_content(A), cb = uni_content(B);
  Poly<F> c = prs_gcd(ca, cb);
  for (auto& x : A) x = x.divexact(ca);
  for (auto& x : B) x = x.divexact(cb);
  if (A.size() < B.size()) std::swap(A, B);

  Poly<F> g = Poly<F>::constant(field, vars, field.one());
  Poly<F> h = g;
  for (;;) {
    size_t delta = A.size() - B.size();
    Uni<F> R = prem(A, B);
    if (R.empty()) break;
    if (R.size() == 1) return c.monic();
    A = std::move(B);
    Poly<F> div = g * h.pow(static_cast<unsigned>(delta));
    for (auto& x : R) x = x.divexact(div);
    B = std::move(R);
    g = A.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = g.pow(static_cast<unsigned>(delta)).divexact(h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  Poly<F> pc = uni_content(B);
  for (auto& x : B) x = x.divexact(pc);
  return (c * from_uni(B, v, field, vars)).monic();
}

// ---------------------------------------------------------------------------
// Packing into the modular representation.

struct Packing {
  std::vector<int> slot;     // ambient index -> packed variable or -1
  std::vector<size_t> back;  // packed variable -> ambient index
};

template <class F>
std::optional<Packing> make_packing(const Poly<F>& a, const Poly<F>& b) {
  const size_t n = a.ambient().size();
  std::vector<std::pair<uint32_t, size_t>> active;
  for (size_t i = 0; i < n; ++i) {
    uint32_t d = std::max(a.degree_in(i), b.degree_in(i));
    if (d > modular::kMaxPackedDegree) return std::nullopt;
    if (d > 0) active.emplace_back(d, i);
  }
  // Highest degree becomes the univariate main variable.
  std::stable_sort(active.begin(), active.end(), [](auto& x, auto& y) { return x.first > y.first; });
  Packing pk;
  pk.slot.assign(n, -1);
  for (size_t s = 0; s < active.size(); ++s) {
    pk.slot[active[s].second] = static_cast<int>(s);
    pk.back.push_back(active[s].second);
  }
  return pk;
}

inline Exp pack(const Monomial& m, const Packing& pk) {
  Exp e = 0;
  for (size_t s = 0; s < pk.back.size(); ++s) e |= modular::unit_exp(static_cast<int>(s), m[pk.back[s]]);
  return e;
}

inline Monomial unpack(Exp e, const Packing& pk) {
  Monomial m;
  for (size_t s = 0; s < pk.back.size(); ++s) m.set(pk.back[s], modular::exp_of(e, static_cast<int>(s)));
  return m;
}

// Maps coefficients through fn (returning false on a bad reduction).
template <class FF, class F, class Fn>
bool to_mpoly(const Poly<F>& p, const Packing& pk, const FF& ff, const Fn& fn, MPoly<FF>& out) {
  out.clear();
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    typename FF::E c;
    if (!fn(t.coef, c) || ff.is_zero(c)) return false;
    out.push_back({pack(t.mono, pk), c});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.e > y.e; });
  return true;
}

int top_var(const Packing& pk) { return static_cast<int>(pk.back.size()) - 1; }

// Finite-field drivers share this shape: map, run, map back.
template <class F, class FF, class In, class Out>
std::optional<Poly<F>> run_finite(const Poly<F>& a, const Poly<F>& b, const FF& ff, const In& in,
                                  const Out& out) {
  auto pk = make_packing(a, b);
  if (!pk) return std::nullopt;
  MPoly<FF> A, B;
  if (!to_mpoly(a, *pk, ff, in, A) || !to_mpoly(b, *pk, ff, in, B)) return std::nullopt;
  MPoly<FF> G;
  try {
    G = modular::Brown<FF>(ff).gcd(A, B, top_var(*pk));
  } catch (const modular::GiveUp&) {
    return std::nullopt;
  }
  std::vector<typename Poly<F>::Term> terms;
  for (const auto& t : G) {
    typename F::Elem c;
    if (!out(t.c, c)) return std::nullopt;
    terms.push_back({unpack(t.e, *pk), c});
  }
  return Poly<F>::from_terms(a.field(), a.ambient(), std::move(terms)).monic();
}

std::optional<Poly<PrimeField>> modular_gcd(const Poly<PrimeField>& a, const Poly<PrimeField>& b) {
  const uint32_t p = a.field().p;
  auto in_prime = [](const Zp& z, uint32_t& c) {
    c = z.residue();
    return true;
  };
  if (p >= 4096) {
    modular::PrimeFF ff(p);
    return run_finite(a, b, ff, in_prime, [p](uint32_t c, Zp& z) {
      z = Zp(c, p);
      return true;
    });
  }
  uint32_t k = modular::table_degree_for(p, false);
  if (k == 0) return std::nullopt;
  modular::TableFF ff(p, k);
  return run_finite(
      a, b, ff,
      [&ff](const Zp& z, uint32_t& c) {
        c = ff.from_u64(z.residue());
        return true;
      },
      [&ff, p](uint32_t c, Zp& z) {
        uint32_t r;
        if (!ff.to_base(c, r)) return false;
        z = Zp(r, p);
        return true;
      });
}

std::optional<Poly<CycloGF>> modular_gcd(const Poly<CycloGF>& a, const Poly<CycloGF>& b) {
  const uint32_t p = a.field().base.p;
  uint32_t k = modular::table_degree_for(p, true);
  if (k == 0) return std::nullopt;
  modular::TableFF ff(p, k);
  const uint32_t w = ff.cube_root_of_unity();
  const uint32_t w2 = ff.mul(w, w);  // = w^p since p = 2 mod 3
  const uint32_t denom_inv = ff.inv(ff.sub(w, w2));
  return run_finite(
      a, b, ff,
      [&](const Cyclo<Zp>& z, uint32_t& c) {
        c = ff.add(ff.from_u64(z.a().residue()), ff.mul(ff.from_u64(z.b().residue()), w));
        return true;
      },
      [&](uint32_t c, Cyclo<Zp>& z) {
        uint32_t bb = ff.mul(ff.sub(c, ff.pow(c, p)), denom_inv);
        uint32_t aa = ff.sub(c, ff.mul(bb, w));
        uint32_t ra, rb;
        if (!ff.to_base(aa, ra) || !ff.to_base(bb, rb)) return false;
        z = Cyclo<Zp>(Zp(ra, p), Zp(rb, p));
        return true;
      });
}

// ---------------------------------------------------------------------------
// Characteristic zero: multimodular with rational reconstruction.

bool rational_reconstruct(const mpz_class& u, const mpz_class& m, Rational& out) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = u, s0 = 0, s1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return false;
  mpz_class g = gcd(r1, s1);
  if (g != 1) return false;
  out = Rational(r1, s1);
  return true;
}

void crt_step(mpz_class& acc, const mpz_class& mod, uint32_t r, uint32_t p) {
  // acc + mod * ((r - acc) / mod mod p)
  uint32_t acc_p = static_cast<uint32_t>(mpz_fdiv_ui(acc.get_mpz_t(), p));
  uint32_t mod_p = static_cast<uint32_t>(mpz_fdiv_ui(mod.get_mpz_t(), p));
  modular::PrimeFF f(p);
  uint32_t t = f.mul(f.sub(r, acc_p), f.inv(mod_p));
  acc += mod * t;
}

bool reduce_rational(const Rational& q, uint32_t p, uint32_t& out) {
  uint32_t d = static_cast<uint32_t>(mpz_fdiv_ui(q.value().get_den_mpz_t(), p));
  if (d == 0) return false;
  uint32_t n = static_cast<uint32_t>(mpz_fdiv_ui(q.value().get_num_mpz_t(), p));
  modular::PrimeFF f(p);
  out = f.mul(n, f.inv(d));
  return true;
}

constexpr int kMaxPrimes = 400;

uint32_t next_prime_below(uint32_t p) {
  do {
    --p;
  } while (!is_prime_u64(p));
  return p;
}

template <class F>
GcdResult<F> with_cofactors(Poly<F> g, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> ca = a.divexact(g), cb = b.divexact(g);
  return {std::move(g), std::move(ca), std::move(cb)};
}

template <class F>
bool trial(const Poly<F>& cand, const Poly<F>& a, const Poly<F>& b, GcdResult<F>& out) {
  Poly<F> qa, qb;
  if (!a.try_divide(cand, qa) || !b.try_divide(cand, qb)) return false;
  out = {cand, std::move(qa), std::move(qb)};
  return true;
}

std::optional<GcdResult<RationalField>> modular_gcd_q(const Poly<RationalField>& a,
                                                      const Poly<RationalField>& b) {
  using FF = modular::PrimeFF;
  auto pk = make_packing(a, b);
  if (!pk) return std::nullopt;
  const RationalField field;
  std::map<Exp, mpz_class, std::greater<Exp>> acc;
  mpz_class mod = 1;
  bool have = false;
  Exp best = 0;
  std::optional<Poly<RationalField>> previous;
  uint32_t p = 2147483647u;
  for (int used = 0; used < kMaxPrimes; ++used, p = next_prime_below(p)) {
    FF ff(p);
    auto in = [p](const Rational& q, uint32_t& c) { return reduce_rational(q, p, c); };
    MPoly<FF> A, B, G;
    if (!to_mpoly(a, *pk, ff, in, A) || !to_mpoly(b, *pk, ff, in, B)) continue;
    try {
      G = modular::Brown<FF>(ff).gcd(A, B, top_var(*pk));
    } catch (const modular::GiveUp&) {
      continue;
    }
    if (G.size() == 1 && G.front().e == 0) {
      auto one = Poly<RationalField>::constant(field, a.ambient(), field.one());
      return GcdResult<RationalField>{one, a, b};
    }
    Exp lm = G.front().e;
    if (have && lm > best) continue;
    if (!have || lm < best) {
      acc.clear();
      mod = 1;
      best = lm;
      have = true;
      previous.reset();
    }
    size_t gi = 0;
    for (auto& [e, v] : acc) {
      while (gi < G.size() && G[gi].e > e) ++gi;
      uint32_t r = (gi < G.size() && G[gi].e == e) ? G[gi].c : 0;
      crt_step(v, mod, r, p);
    }
    for (const auto& t : G) {
      if (acc.count(t.e)) continue;
      mpz_class v = 0;
      crt_step(v, mod, t.c, p);
      acc.emplace(t.e, v);
    }
    mod *= p;

    std::vector<Poly<RationalField>::Term> terms;
    bool ok = true;
    for (const auto& [e, v] : acc) {
      Rational r;
      if (!rational_reconstruct(v, mod, r)) {
        ok = false;
        break;
      }
      if (!r.is_zero()) terms.push_back({unpack(e, *pk), r});
    }
    if (!ok) continue;
    auto cand = Poly<RationalField>::from_terms(field, a.ambient(), std::move(terms)).monic();
    if (previous && *previous == cand) {
      GcdResult<RationalField> res;
      if (trial(cand, a, b, res)) return res;
    }
    previous = std::move(cand);
  }
  return std::nullopt;
}

std::optional<GcdResult<CycloQ>> modular_gcd_cq(const Poly<CycloQ>& a, const Poly<CycloQ>& b) {
  using FF = modular::PrimeFF;
  auto pk = make_packing(a, b);
  if (!pk) return std::nullopt;
  const CycloQ& field = a.field();
  std::map<Exp, std::pair<mpz_class, mpz_class>, std::greater<Exp>> acc;
  mpz_class mod = 1;
  bool have = false;
  Exp best = 0;
  std::optional<Poly<CycloQ>> previous;
  uint32_t p = 2147483647u;
  for (int used = 0; used < kMaxPrimes; p = next_prime_below(p)) {
    if (p % 3 != 1) continue;
    ++used;
    FF ff(p);
    uint32_t w = 1;
    for (uint32_t g = 2; w == 1; ++g) w = ff.pow(g, (p - 1) / 3);
    const uint32_t w2 = ff.mul(w, w);
    auto embed = [&](uint32_t root) {
      return [&, root](const Cyclo<Rational>& z, uint32_t& c) {
        uint32_t x, y;
        if (!reduce_rational(z.a(), p, x) || !reduce_rational(z.b(), p, y)) return false;
        c = ff.add(x, ff.mul(y, root));
        return true;
      };
    };
    MPoly<FF> A1, B1, A2, B2, G1, G2;
    if (!to_mpoly(a, *pk, ff, embed(w), A1) || !to_mpoly(b, *pk, ff, embed(w), B1)) continue;
    if (!to_mpoly(a, *pk, ff, embed(w2), A2) || !to_mpoly(b, *pk, ff, embed(w2), B2)) continue;
    try {
      G1 = modular::Brown<FF>(ff).gcd(A1, B1, top_var(*pk));
      G2 = modular::Brown<FF>(ff).gcd(A2, B2, top_var(*pk));
    } catch (const modular::GiveUp&) {
      continue;
    }
    if ((G1.size() == 1 && G1.front().e == 0) || (G2.size() == 1 && G2.front().e == 0)) {
      auto one = Poly<CycloQ>::constant(field, a.ambient(), field.one());
      return GcdResult<CycloQ>{one, a, b};
    }
    if (G1.front().e != G2.front().e) continue;
    Exp lm = G1.front().e;
    if (have && lm > best) continue;
    if (!have || lm < best) {
      acc.clear();
      mod = 1;
      best = lm;
      have = true;
      previous.reset();
    }
    // Coefficient c_i = x + y*w_i for the two embeddings.
    std::map<Exp, std::pair<uint32_t, uint32_t>, std::greater<Exp>> img;
    for (const auto& t : G1) img[t.e].first = t.c;
    for (const auto& t : G2) img[t.e].second = t.c;
    const uint32_t dinv = ff.inv(ff.sub(w, w2));
    for (const auto& [e, c] : img) acc.try_emplace(e, mpz_class(0), mpz_class(0));
    for (auto& [e, v] : acc) {
      uint32_t c1 = 0, c2 = 0;
      if (auto it = img.find(e); it != img.end()) {
        c1 = it->second.first;
        c2 = it->second.second;
      }
      uint32_t y = ff.mul(ff.sub(c1, c2), dinv);
      uint32_t x = ff.sub(c1, ff.mul(y, w));
      crt_step(v.first, mod, x, p);
      crt_step(v.second, mod, y, p);
    }
    mod *= p;

    std::vector<Poly<CycloQ>::Term> terms;
    bool ok = true;
    for (const auto& [e, v] : acc) {
      Rational x, y;
      if (!rational_reconstruct(v.first, mod, x) || !rational_reconstruct(v.second, mod, y)) {
        ok = false;
        break;
      }
      Cyclo<Rational> c(x, y);
      if (!c.is_zero()) terms.push_back({unpack(e, *pk), c});
    }
    if (!ok) continue;
    auto cand = Poly<CycloQ>::from_terms(field, a.ambient(), std::move(terms)).monic();
    if (previous && *previous == cand) {
      GcdResult<CycloQ> res;
      if (trial(cand, a, b, res)) return res;
    }
    previous = std::move(cand);
  }
  return std::nullopt;
}

template <class F>
std::optional<GcdResult<F>> modular_with_cofactors(const Poly<F>& a, const Poly<F>& b) {
  if constexpr (std::is_same_v<F, RationalField>) {
    return modular_gcd_q(a, b);
  } else if constexpr (std::is_same_v<F, CycloQ>) {
    return modular_gcd_cq(a, b);
  } else {
    auto g = modular_gcd(a, b);
    if (!g) return std::nullopt;
    return with_cofactors(std::move(*g), a, b);
  }
}

template <class F>
bool share_variables(const Poly<F>& a, const Poly<F>& b) {
  for (size_t i = 0; i < a.ambient().size(); ++i) {
    if (a.depends_on(i) && b.depends_on(i)) return true;
  }
  return false;
}

template <class F>
Poly<F> monomial_gcd(const Poly<F>& mono, const Poly<F>& other) {
  Monomial m = mono.leading_term().mono;
  for (const auto& t : other.terms()) m = Monomial::gcd(m, t.mono);
  return Poly<F>::from_sorted(mono.field(), mono.ambient(), {{m, mono.field().one()}});
}

}  // namespace

template <class F>
GcdResult<F> gcd_cofactors(const Poly<F>& a, const Poly<F>& b, GcdMethod method) {
  if (!(a.ambient() == b.ambient())) fail(ErrorCode::AmbientMismatch, "gcd over different variable lists");
  const F& field = a.field();
  const Ambient& vars = a.ambient();
  auto one = Poly<F>::constant(field, vars, field.one());
  if (a.is_zero() && b.is_zero()) return {a, a, b};
  if (a.is_zero()) {
    Poly<F> g = b.monic();
    return {g, a, Poly<F>::constant(field, vars, b.leading_coef())};
  }
  if (b.is_zero()) {
    Poly<F> g = a.monic();
    return {g, Poly<F>::constant(field, vars, a.leading_coef()), b};
  }
  if (a.is_constant() || b.is_constant() || !share_variables(a, b)) return {one, a, b};
  if (a == b) {
    Poly<F> g = a.monic();
    auto c = Poly<F>::constant(field, vars, a.leading_coef());
    return {g, c, c};
  }
  if (a.is_monomial()) return with_cofactors(monomial_gcd(a, b), a, b);
  if (b.is_monomial()) return with_cofactors(monomial_gcd(b, a), a, b);

  if (method != GcdMethod::Subresultant) {
    if (auto r = modular_with_cofactors(a, b)) return std::move(*r);
    if (method == GcdMethod::Modular) fail(ErrorCode::Internal, "modular gcd could not finish");
  }
  return with_cofactors(prs_gcd(a, b), a, b);
}

template <class F>
Poly<F> content_in(const Poly<F>& p, size_t var, GcdMethod method) {
  Uni<F> u = to_uni(p, var);
  Poly<F> c(p.field(), p.ambient());
  for (const auto& x : u) {
    if (x.is_zero()) continue;
    c = gcd(c, x, method);
    if (c.is_one()) break;
  }
  return c;
}

#define INVFIELD_INSTANTIATE_GCD(F)                                                   \
  template GcdResult<F> gcd_cofactors<F>(const Poly<F>&, const Poly<F>&, GcdMethod); \
  template Poly<F> content_in<F>(const Poly<F>&, size_t, GcdMethod);

INVFIELD_INSTANTIATE_GCD(RationalField)
INVFIELD_INSTANTIATE_GCD(PrimeField)
INVFIELD_INSTANTIATE_GCD(CycloQ)
INVFIELD_INSTANTIATE_GCD(CycloGF)

#undef INVFIELD_INSTANTIATE_GCD

}  // namespace invfield
