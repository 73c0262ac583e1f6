#pragma once

// Dense-recursive modular gcd (Brown) over a word-size finite field, on
// sparse polynomials with 8-bit exponents packed into 128 bits.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace invfield::modular {

using Exp = unsigned __int128;

inline constexpr int kPackedVars = 16;
inline constexpr uint32_t kMaxPackedDegree = 255;

inline int shift_of(int var) { return 8 * (kPackedVars - 1 - var); }
inline uint32_t exp_of(Exp e, int var) { return static_cast<uint32_t>(e >> shift_of(var)) & 0xff; }
inline Exp unit_exp(int var, uint32_t d) { return Exp(d) << shift_of(var); }

/// True when every byte of a is <= the matching byte of b.
inline bool exp_divides(Exp a, Exp b) {
  for (int v = 0; v < kPackedVars; ++v) {
    if (exp_of(a, v) > exp_of(b, v)) return false;
  }
  return true;
}

/// Thrown when the modular algorithm cannot finish (field too small,
/// degree overflow); callers fall back to another method.
struct GiveUp : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class FF>
struct MTerm {
  Exp e;
  typename FF::E c;
};

template <class FF>
using MPoly = std::vector<MTerm<FF>>;  // strictly descending in e, no zeros

template <class FF>
class Brown {
 public:
  using E = typename FF::E;
  using U = std::vector<E>;  // dense univariate, index = degree, trimmed
  using P = MPoly<FF>;

  explicit Brown(const FF& f) : f_(f) {}

  /// Monic (leading coefficient 1 in lex order) gcd of A and B, which use
  /// only variables 0..k.
  P gcd(const P& A, const P& B, int k) {
    if (A.empty()) return monic(B);
    if (B.empty()) return monic(A);
    if (k == 0) return from_uni(ugcd(to_uni(A), to_uni(B)), 0);

    auto GA = split(A, k);
    auto GB = split(B, k);
    U cA = content(GA), cB = content(GB);
    U c = ugcd(cA, cB);
    for (auto& g : GA) g.second = udivexact(g.second, cA);
    for (auto& g : GB) g.second = udivexact(g.second, cB);
    if ((GA.size() == 1 && GA[0].first == 0) || (GB.size() == 1 && GB[0].first == 0)) {
      return from_uni(c, k);
    }
    const U lcA = GA[0].second, lcB = GB[0].second;
    const U gamma = ugcd(lcA, lcB);
    size_t degA = 0, degB = 0;
    for (auto& g : GA) degA = std::max(degA, g.second.size() - 1);
    for (auto& g : GB) degB = std::max(degB, g.second.size() - 1);
    const size_t bound = (gamma.size() - 1) + std::min(degA, degB) + 1;
    const P Ap = join(GA, k), Bp = join(GB, k);

    std::map<Exp, U, std::greater<Exp>> H;
    U M{f_.one()};
    bool have = false;
    Exp best = 0;
    size_t npts = 0;
    const uint64_t limit = std::min<uint64_t>(f_.size(), 4 * bound + 64);
    uint64_t tried = 0;
    for (uint64_t idx = 1; tried < limit; ++idx) {
      if (idx >= f_.size()) break;
      E a = f_.element(scramble(idx, k));
      if (used_point(M, a)) continue;
      ++tried;
      if (f_.is_zero(ueval(lcA, a)) || f_.is_zero(ueval(lcB, a))) continue;
      P g = gcd(eval(Ap, k, a), eval(Bp, k, a), k - 1);
      Exp lm = g.front().e;
      if (lm == 0) return from_uni(c, k);
      if (have && lm > best) continue;
      if (!have || lm < best) {
        H.clear();
        M = U{f_.one()};
        npts = 0;
        best = lm;
        have = true;
      }
      E ga = ueval(gamma, a);
      bool changed = newton(H, M, g, ga, a);
      M = umul(M, U{f_.neg(a), f_.one()});
      ++npts;
      if (npts > kMaxPackedDegree) throw GiveUp("interpolation degree overflow");
      if (!changed || npts == bound) {
        P cand = primitive_join(H, k);
        if (divides(Ap, cand) && divides(Bp, cand)) return monic(mul_uni(cand, c, k));
      }
    }
    throw GiveUp("ran out of evaluation points");
  }

  /// Exact division test; the quotient is stored when q is non-null.
  bool divides(const P& A, const P& D, P* q = nullptr) const {
    if (D.empty()) return false;
    if (A.empty()) {
      if (q) q->clear();
      return true;
    }
    const Exp lm = D.front().e;
    const E lcinv = f_.inv(D.front().c);
    std::map<Exp, E, std::greater<Exp>> rem;
    for (const auto& t : A) rem.emplace(t.e, t.c);
    P quo;
    while (!rem.empty()) {
      auto it = rem.begin();
      if (it->first < lm || !exp_divides(lm, it->first)) return false;
      Exp qe = it->first - lm;
      E qc = f_.mul(it->second, lcinv);
      rem.erase(it);
      for (size_t i = 1; i < D.size(); ++i) {
        Exp e = D[i].e + qe;
        E c = f_.mul(D[i].c, qc);
        auto [pos, ins] = rem.try_emplace(e, f_.neg(c));
        if (!ins) {
          pos->second = f_.sub(pos->second, c);
          if (f_.is_zero(pos->second)) rem.erase(pos);
        }
      }
      quo.push_back({qe, qc});
    }
    if (q) *q = std::move(quo);
    return true;
  }

  P monic(P A) const {
    if (A.empty()) return A;
    E inv = f_.inv(A.front().c);
    for (auto& t : A) t.c = f_.mul(t.c, inv);
    return A;
  }

 private:
  using Groups = std::vector<std::pair<Exp, U>>;

  static uint64_t scramble(uint64_t i, int k) {
    uint64_t x = i * 0x9E3779B97F4A7C15ull + uint64_t(k) * 0xD1B54A32D192ED03ull;
    x ^= x >> 29;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 32;
    return x;
  }

  bool used_point(const U& M, E a) const { return M.size() > 1 && f_.is_zero(ueval(M, a)); }

  // --- dense univariate helpers ---
  void trim(U& u) const {
    while (!u.empty() && f_.is_zero(u.back())) u.pop_back();
  }
  E ueval(const U& u, E a) const {
    E r = f_.zero();
    for (size_t i = u.size(); i-- > 0;) r = f_.add(f_.mul(r, a), u[i]);
    return r;
  }
  U umul(const U& a, const U& b) const {
    if (a.empty() || b.empty()) return {};
    U r(a.size() + b.size() - 1, f_.zero());
    for (size_t i = 0; i < a.size(); ++i) {
      if (f_.is_zero(a[i])) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = f_.add(r[i + j], f_.mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }
  // a = q*b + r; returns r, stores q.
  U udivmod(U a, const U& b, U* q) const {
    if (b.empty()) throw GiveUp("univariate division by zero");
    E inv = f_.inv(b.back());
    if (q) q->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, f_.zero());
    while (a.size() >= b.size()) {
      size_t s = a.size() - b.size();
      E c = f_.mul(a.back(), inv);
      if (q) (*q)[s] = c;
      for (size_t i = 0; i < b.size(); ++i) a[s + i] = f_.sub(a[s + i], f_.mul(c, b[i]));
      a.pop_back();
      trim(a);
    }
    return a;
  }
  U udivexact(const U& a, const U& b) const {
    U q;
    U r = udivmod(a, b, &q);
    if (!r.empty()) throw GiveUp("inexact univariate division");
    return q;
  }
  U umonic(U u) const {
    if (u.empty()) return u;
    E inv = f_.inv(u.back());
    for (auto& c : u) c = f_.mul(c, inv);
    return u;
  }
  U ugcd(U a, U b) const {
    while (!b.empty()) {
      U r = udivmod(std::move(a), b, nullptr);
      a = std::move(b);
      b = std::move(r);
    }
    return umonic(std::move(a));
  }

  U to_uni(const P& A) const {
    U u;
    if (A.empty()) return u;
    u.assign(exp_of(A.front().e, 0) + 1, f_.zero());
    for (const auto& t : A) u[exp_of(t.e, 0)] = t.c;
    return u;
  }
  P from_uni(const U& u, int var) const {
    P r;
    for (size_t i = u.size(); i-- > 0;) {
      if (!f_.is_zero(u[i])) r.push_back({unit_exp(var, static_cast<uint32_t>(i)), u[i]});
    }
    return r;
  }

  // --- views as polynomials in vars 0..k-1 over F[x_k] ---
  Groups split(const P& A, int k) const {
    Groups g;
    const Exp mask = ~(Exp(0xff) << shift_of(k));
    for (const auto& t : A) {
      Exp pre = t.e & mask;
      uint32_t d = exp_of(t.e, k);
      if (g.empty() || g.back().first != pre) {
        g.emplace_back(pre, U(d + 1, f_.zero()));
      }
      g.back().second[d] = t.c;
    }
    return g;
  }
  P join(const Groups& g, int k) const {
    P r;
    for (const auto& [pre, u] : g) {
      for (size_t i = u.size(); i-- > 0;) {
        if (!f_.is_zero(u[i])) r.push_back({pre | unit_exp(k, static_cast<uint32_t>(i)), u[i]});
      }
    }
    return r;
  }
  U content(const Groups& g) const {
    U c;
    for (const auto& [pre, u] : g) {
      c = ugcd(c, u);
      if (c.size() == 1) break;
    }
    return c;
  }
  P eval(const P& A, int k, E a) const {
    P r;
    const Exp mask = ~(Exp(0xff) << shift_of(k));
    std::vector<E> pw{f_.one()};
    for (const auto& t : A) {
      uint32_t d = exp_of(t.e, k);
      while (pw.size() <= d) pw.push_back(f_.mul(pw.back(), a));
      E v = f_.mul(t.c, pw[d]);
      Exp pre = t.e & mask;
      if (!r.empty() && r.back().e == pre) {
        r.back().c = f_.add(r.back().c, v);
      } else {
        if (!r.empty() && f_.is_zero(r.back().c)) r.pop_back();
        r.push_back({pre, v});
      }
    }
    if (!r.empty() && f_.is_zero(r.back().c)) r.pop_back();
    return r;
  }

  bool newton(std::map<Exp, U, std::greater<Exp>>& H, const U& M, const P& g, E ga, E a) const {
    E inv_ma = f_.inv(ueval(M, a));
    bool changed = false;
    auto update = [&](Exp pre, E target) {
      U& h = H[pre];
      E v = f_.sub(target, ueval(h, a));
      if (f_.is_zero(v)) return;
      changed = true;
      E s = f_.mul(v, inv_ma);
      if (h.size() < M.size()) h.resize(M.size(), f_.zero());
      for (size_t i = 0; i < M.size(); ++i) h[i] = f_.add(h[i], f_.mul(s, M[i]));
      trim(h);
    };
    size_t gi = 0;
    std::vector<Exp> keys;
    keys.reserve(H.size() + g.size());
    for (const auto& [pre, u] : H) keys.push_back(pre);
    for (const auto& t : g) keys.push_back(t.e);
    std::sort(keys.begin(), keys.end(), std::greater<Exp>());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (Exp pre : keys) {
      while (gi < g.size() && g[gi].e > pre) ++gi;
      E target = (gi < g.size() && g[gi].e == pre) ? f_.mul(g[gi].c, ga) : f_.zero();
      update(pre, target);
    }
    for (auto it = H.begin(); it != H.end();) {
      it = it->second.empty() ? H.erase(it) : std::next(it);
    }
    return changed;
  }

  P primitive_join(const std::map<Exp, U, std::greater<Exp>>& H, int k) const {
    Groups g(H.begin(), H.end());
    U c = content(g);
    for (auto& x : g) x.second = udivexact(x.second, c);
    return join(g, k);
  }

  P mul_uni(const P& A, const U& c, int k) const {
    if (c.size() == 1) return A;
    std::vector<MTerm<FF>> terms;
    for (const auto& t : A) {
      for (size_t i = 0; i < c.size(); ++i) {
        if (f_.is_zero(c[i])) continue;
        if (exp_of(t.e, k) + i > kMaxPackedDegree) throw GiveUp("degree overflow");
        terms.push_back({t.e + unit_exp(k, static_cast<uint32_t>(i)), f_.mul(t.c, c[i])});
      }
    }
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.e > y.e; });
    P r;
    for (auto& t : terms) {
      if (!r.empty() && r.back().e == t.e) {
        r.back().c = f_.add(r.back().c, t.c);
      } else {
        if (!r.empty() && f_.is_zero(r.back().c)) r.pop_back();
        r.push_back(t);
      }
    }
    if (!r.empty() && f_.is_zero(r.back().c)) r.pop_back();
    return r;
  }

  FF f_;
};

}  // namespace invfield::modular
