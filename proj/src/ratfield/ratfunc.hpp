#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "polyring/gcd.hpp"
#include "polyring/poly.hpp"

namespace invfield {

/// Quotient num/den of coprime polynomials with den's leading coefficient 1.
/// Zero is 0/1. Because the form is canonical, equality is structural.
template <class F>
class RatFunc {
 public:
  using Field = F;
  using Elem = typename F::Elem;
  using PolyT = Poly<F>;

  RatFunc() = default;
  explicit RatFunc(PolyT num)
      : num_(std::move(num)), den_(PolyT::constant(num_.field(), num_.ambient(), num_.field().one())) {}

  /// Normalizing constructor.
  static RatFunc make(const PolyT& num, const PolyT& den);
  /// Trusts that (num, den) is already normalized.
  static RatFunc from_normalized(PolyT num, PolyT den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }
  static RatFunc constant(const F& field, const Ambient& vars, const Elem& c) {
    return RatFunc(PolyT::constant(field, vars, c));
  }
  static RatFunc from_int(const F& field, const Ambient& vars, long long c) {
    return RatFunc(PolyT::from_int(field, vars, c));
  }
  static RatFunc variable(const F& field, const Ambient& vars, size_t i) {
    return RatFunc(PolyT::variable(field, vars, i));
  }
  static RatFunc variable(const F& field, const Ambient& vars, std::string_view name) {
    return RatFunc(PolyT::variable(field, vars, name));
  }

  const PolyT& num() const { return num_; }
  const PolyT& den() const { return den_; }
  const F& field() const { return num_.field(); }
  const Ambient& ambient() const { return num_.ambient(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  RatFunc operator-() const { return from_normalized(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return a.add(b, false); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a.add(b, true); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return a.mul(b); }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a.mul(b.inv()); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inv() const;
  RatFunc pow(long e) const;
  RatFunc scaled(const Elem& c) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// x_i -> x_{image[i]} (0-based). image must be a permutation of the ambient.
  RatFunc apply_perm(std::span<const size_t> image) const;

  /// Substitutes images[i] for variable i; the result lives in the images'
  /// ambient. SubstitutionPole if the denominator becomes zero.
  RatFunc compose(std::span<const RatFunc> images) const;

  /// PoleAtPoint when the denominator vanishes.
  Elem eval(std::span<const Elem> point) const;

  RatFunc derivative(size_t var) const;
  RatFunc derivative(std::string_view var) const { return derivative(ambient().require(var)); }

  /// Reinterprets over a larger ambient that begins with this one.
  RatFunc widen(const Ambient& target) const;

  /// "num" or "(num) / (den)".
  std::string to_string() const;

 private:
  RatFunc add(const RatFunc& o, bool subtract) const;
  RatFunc mul(const RatFunc& o) const;
  RatFunc rescaled() const;

  PolyT num_;
  PolyT den_;
};

/// Rank of the Jacobian matrix (d gens_i / d x_j) at point, by exact
/// elimination over the coefficient field.
template <class F>
size_t jacobian_rank_at(std::span<const RatFunc<F>> gens, std::span<const typename F::Elem> point);

/// Rank of a matrix by Gaussian elimination over any field element type.
template <class E>
size_t matrix_rank(std::vector<std::vector<E>> m) {
  size_t rank = 0;
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    E inv = m[rank][c].inv();
    for (size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      E f = m[r][c] * inv;
      for (size_t k = c; k < cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------

template <class F>
RatFunc<F> RatFunc<F>::rescaled() const {
  if (den_.leading_coef().is_one()) return *this;
  Elem inv = den_.leading_coef().inv();
  return from_normalized(num_.scaled(inv), den_.scaled(inv));
}

template <class F>
RatFunc<F> RatFunc<F>::make(const PolyT& num, const PolyT& den) {
  if (den.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) return RatFunc(num);
  if (den.is_constant()) return from_normalized(num.scaled(den.leading_coef().inv()), den.monic());
  auto g = gcd_cofactors(num, den);
  return from_normalized(std::move(g.cofa), std::move(g.cofb)).rescaled();
}

template <class F>
RatFunc<F> RatFunc<F>::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
  return from_normalized(den_, num_).rescaled();
}

template <class F>
RatFunc<F> RatFunc<F>::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  return from_normalized(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

template <class F>
RatFunc<F> RatFunc<F>::scaled(const Elem& c) const {
  if (c.is_zero()) return RatFunc(PolyT(field(), ambient()));
  return from_normalized(num_.scaled(c), den_);
}

template <class F>
RatFunc<F> RatFunc<F>::add(const RatFunc& o, bool subtract) const {
  const PolyT on = subtract ? -o.num_ : o.num_;
  if (is_zero()) return from_normalized(on, o.den_);
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    if (den_.is_one()) return RatFunc(num_ + on);
    return make(num_ + on, den_);
  }
  if (den_.is_one()) return from_normalized(num_ * o.den_ + on, o.den_);
  if (o.den_.is_one()) return from_normalized(num_ + on * den_, den_);
  auto g = gcd_cofactors(den_, o.den_);
  if (g.gcd.is_one()) {
    return from_normalized(num_ * o.den_ + on * den_, den_ * o.den_).rescaled();
  }
  // d1 = g*c1, d2 = g*c2: n1/d1 + n2/d2 = (n1*c2 + n2*c1) / (g*c1*c2).
  PolyT t = num_ * g.cofb + on * g.cofa;
  if (t.is_zero()) return RatFunc(t);
  auto h = gcd_cofactors(t, g.gcd);
  return from_normalized(std::move(h.cofa), h.cofb * g.cofa * g.cofb).rescaled();
}

template <class F>
RatFunc<F> RatFunc<F>::mul(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc(PolyT(field(), ambient()));
  if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ * o.num_);
  auto g1 = gcd_cofactors(num_, o.den_);
  auto g2 = gcd_cofactors(o.num_, den_);
  return from_normalized(g1.cofa * g2.cofa, g2.cofb * g1.cofb).rescaled();
}

template <class F>
RatFunc<F> RatFunc<F>::apply_perm(std::span<const size_t> image) const {
  const size_t n = ambient().size();
  if (image.size() != n) fail(ErrorCode::ArityMismatch, "permutation degree differs from ambient arity");
  std::vector<bool> seen(n, false);
  for (size_t v : image) {
    if (v >= n || seen[v]) fail(ErrorCode::InvalidArgument, "not a permutation of the ambient");
    seen[v] = true;
  }
  auto num = num_.relabel(ambient(), image);
  auto den = den_.relabel(ambient(), image);
  return from_normalized(std::move(num), std::move(den)).rescaled();
}

namespace detail {

/// Evaluates sum c_m A^m L^(d-|m|) (the homogenization of p at degree d).
template <class F>
Poly<F> homogeneous_substitute(const Poly<F>& p, std::span<const Poly<F>> A, const Poly<F>& L, uint64_t d,
                               std::vector<std::vector<Poly<F>>>& apow, std::vector<Poly<F>>& lpow) {
  const F& field = L.field();
  auto power = [](std::vector<Poly<F>>& cache, const Poly<F>& base, uint32_t e) -> const Poly<F>& {
    if (cache.empty()) cache.push_back(Poly<F>::constant(base.field(), base.ambient(), base.field().one()));
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  Poly<F> acc(field, L.ambient());
  // Group terms by remaining L-power to share the multiplication by L.
  std::map<uint64_t, Poly<F>> by_lpow;
  for (const auto& t : p.terms()) {
    Poly<F> prod = Poly<F>::constant(field, L.ambient(), t.coef);
    for (size_t i = 0; i < A.size(); ++i) {
      uint32_t e = t.mono[i];
      if (e) prod = prod * power(apow[i], A[i], e);
    }
    auto [it, inserted] = by_lpow.try_emplace(d - t.mono.degree(), Poly<F>(field, L.ambient()));
    it->second += prod;
  }
  for (auto& [k, part] : by_lpow) {
    acc += (k && !L.is_one()) ? part * power(lpow, L, static_cast<uint32_t>(k)) : part;
  }
  return acc;
}

/// Rank of the linear part of affine polynomial images, or -1 if any image
/// is not affine.
template <class F>
long affine_rank(std::span<const RatFunc<F>> images) {
  if (images.empty()) return 0;
  const size_t w = images[0].ambient().size();
  std::vector<std::vector<typename F::Elem>> m;
  for (const auto& r : images) {
    if (!r.is_polynomial() || r.num().total_degree() > 1) return -1;
    std::vector<typename F::Elem> row(w, r.field().zero());
    for (const auto& t : r.num().terms()) {
      if (t.mono.degree() == 0) continue;
      for (size_t j = 0; j < w; ++j) {
        if (t.mono[j]) row[j] = t.coef;
      }
    }
    m.push_back(std::move(row));
  }
  return static_cast<long>(matrix_rank(std::move(m)));
}

}  // namespace detail

template <class F>
RatFunc<F> RatFunc<F>::compose(std::span<const RatFunc> images) const {
  const size_t n = ambient().size();
  if (images.size() != n) fail(ErrorCode::ArityMismatch, "compose needs one image per variable");
  if (n == 0) fail(ErrorCode::ArityMismatch, "compose over an empty ambient");
  const Ambient& target = images[0].ambient();
  for (const auto& r : images) {
    if (!(r.ambient() == target)) fail(ErrorCode::AmbientMismatch, "images over different ambients");
  }
  const F& fld = field();
  bool all_poly = true;
  for (const auto& r : images) all_poly = all_poly && r.is_polynomial();

  if (all_poly) {
    std::vector<PolyT> A;
    for (const auto& r : images) A.push_back(r.num());
    std::vector<std::vector<PolyT>> apow(n);
    std::vector<PolyT> lpow;
    const PolyT one = PolyT::constant(fld, target, fld.one());
    PolyT N = detail::homogeneous_substitute<F>(num_, A, one, num_.total_degree(), apow, lpow);
    PolyT D = detail::homogeneous_substitute<F>(den_, A, one, den_.total_degree(), apow, lpow);
    if (D.is_zero()) fail(ErrorCode::SubstitutionPole, "denominator vanishes under substitution");
    // An injective affine change of variables keeps num and den coprime.
    if (D.is_constant() || detail::affine_rank<F>(images) == static_cast<long>(n)) {
      if (N.is_zero()) return RatFunc(N);
      return from_normalized(std::move(N), std::move(D)).rescaled();
    }
    return make(N, D);
  }

  // Common denominator L of the images; A_i = a_i * (L / b_i).
  PolyT L = PolyT::constant(fld, target, fld.one());
  for (const auto& r : images) {
    if (r.den().is_one()) continue;
    auto g = gcd_cofactors(L, r.den());
    if (!g.cofb.is_constant()) L = L * g.cofb;
  }
  std::vector<PolyT> A;
  for (const auto& r : images) A.push_back(r.num() * L.divexact(r.den()));
  std::vector<std::vector<PolyT>> apow(n);
  std::vector<PolyT> lpow;
  const uint64_t dn = num_.total_degree(), dd = den_.total_degree();
  PolyT N = detail::homogeneous_substitute<F>(num_, A, L, dn, apow, lpow);
  PolyT D = detail::homogeneous_substitute<F>(den_, A, L, dd, apow, lpow);
  if (D.is_zero()) fail(ErrorCode::SubstitutionPole, "denominator vanishes under substitution");
  if (N.is_zero()) return RatFunc(N);
  if (dd > dn) N = N * L.pow(static_cast<unsigned>(dd - dn));
  if (dn > dd) D = D * L.pow(static_cast<unsigned>(dn - dd));
  return make(N, D);
}

template <class F>
typename RatFunc<F>::Elem RatFunc<F>::eval(std::span<const Elem> point) const {
  Elem d = den_.eval(point);
  if (d.is_zero()) fail(ErrorCode::PoleAtPoint, "denominator vanishes at the point");
  return num_.eval(point) * d.inv();
}

template <class F>
RatFunc<F> RatFunc<F>::derivative(size_t var) const {
  if (den_.is_one()) return RatFunc(num_.derivative(var));
  PolyT n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return make(n, den_ * den_);
}

template <class F>
RatFunc<F> RatFunc<F>::widen(const Ambient& target) const {
  std::vector<size_t> map(ambient().size());
  for (size_t i = 0; i < map.size(); ++i) map[i] = target.require(ambient().name(i));
  return from_normalized(num_.relabel(target, map), den_.relabel(target, map)).rescaled();
}

template <class F>
std::string RatFunc<F>::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const PolyT& p) { return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string(); };
  return wrap(num_) + " / " + wrap(den_);
}

template <class F>
size_t jacobian_rank_at(std::span<const RatFunc<F>> gens, std::span<const typename F::Elem> point) {
  using Elem = typename F::Elem;
  if (gens.empty()) return 0;
  const size_t n = gens[0].ambient().size();
  if (point.size() != n) fail(ErrorCode::ArityMismatch, "point length differs from ambient arity");
  std::vector<std::vector<Elem>> m;
  for (const auto& g : gens) {
    Elem nv = g.num().eval(point), dv = g.den().eval(point);
    if (dv.is_zero()) fail(ErrorCode::PoleAtPoint, "generator has a pole at the point");
    Elem dinv2 = (dv * dv).inv();
    std::vector<Elem> row;
    for (size_t j = 0; j < n; ++j) {
      Elem dn = g.num().derivative(j).eval(point);
      Elem dd = g.den().derivative(j).eval(point);
      row.push_back((dn * dv - nv * dd) * dinv2);
    }
    m.push_back(std::move(row));
  }
  return matrix_rank(std::move(m));
}

}  // namespace invfield
