#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algebra/fields.hpp"
#include "polyring/ambient.hpp"
#include "polyring/monomial.hpp"

namespace invfield {

/// Sparse multivariate polynomial over the field F. Terms are kept strictly
/// sorted in descending graded-lex order with no zero coefficients, so
/// equality is structural.
template <class F>
class Poly {
 public:
  using Field = F;
  using Elem = typename F::Elem;

  struct Term {
    Monomial mono;
    Elem coef;
  };

  Poly() = default;
  Poly(F field, Ambient vars) : field_(std::move(field)), vars_(std::move(vars)) {}

  static Poly constant(const F& field, const Ambient& vars, const Elem& c) {
    Poly p(field, vars);
    if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Poly from_int(const F& field, const Ambient& vars, long long c) {
    return constant(field, vars, field.from_int(c));
  }
  static Poly variable(const F& field, const Ambient& vars, size_t index) {
    if (index >= vars.size()) fail(ErrorCode::UnknownVariable, "variable index out of range");
    Poly p(field, vars);
    p.terms_.push_back({Monomial::unit(index), field.one()});
    return p;
  }
  static Poly variable(const F& field, const Ambient& vars, std::string_view name) {
    return variable(field, vars, vars.require(name));
  }
  /// Builds a canonical polynomial from arbitrary (unsorted, repeated) terms.
  static Poly from_terms(const F& field, const Ambient& vars, std::vector<Term> terms);

  const F& field() const { return field_; }
  const Ambient& ambient() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Elem constant_term() const;

  const Term& leading_term() const { return terms_.front(); }
  const Elem& leading_coef() const { return terms_.front().coef; }
  uint64_t total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
  uint32_t degree_in(size_t var) const;
  bool depends_on(size_t var) const { return degree_in(var) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) { return a.mul(b); }

  Poly scaled(const Elem& c) const;
  Poly times_monomial(const Monomial& m, const Elem& c) const;
  Poly pow(unsigned e) const;
  /// Leading coefficient made 1 (zero stays zero).
  Poly monic() const;

  Elem eval(std::span<const Elem> point) const;
  /// Evaluation into another ring E through a coefficient map.
  template <class E, class Map>
  E eval_mapped(std::span<const E> point, const Map& coef_map, const E& zero) const;

  Poly derivative(size_t var) const;
  Poly derivative(std::string_view var) const { return derivative(vars_.require(var)); }

  /// Exact quotient; NotDivisible when d does not divide this.
  Poly divexact(const Poly& d) const;
  /// Quotient when d divides this exactly.
  bool try_divide(const Poly& d, Poly& quotient) const;

  /// Reinterprets the polynomial over a different ambient list, mapping old
  /// variable i to new variable index map[i].
  Poly relabel(const Ambient& target, std::span<const size_t> map) const;

  /// Applies a coefficient map (field automorphism or embedding).
  template <class G, class Map>
  Poly<G> map_coefficients(const G& target_field, const Map& fn) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
    }
    return true;
  }

  /// Canonical text: "3*x1^2*x2 - x3 + 1".
  std::string to_string() const;

  // Low-level: takes ownership of terms already in canonical order.
  static Poly from_sorted(const F& field, const Ambient& vars, std::vector<Term> terms) {
    Poly p(field, vars);
    p.terms_ = std::move(terms);
    return p;
  }

 private:
  Poly mul(const Poly& o) const;
  void check_compatible(const Poly& o) const;

  F field_{};
  Ambient vars_{};
  std::vector<Term> terms_;
};

std::string format_monomial(const Monomial& m, const Ambient& vars);

// ---------------------------------------------------------------------------

namespace detail {

template <class F>
std::vector<typename Poly<F>::Term> merge_terms(std::vector<typename Poly<F>::Term> a,
                                                std::vector<typename Poly<F>::Term> b) {
  using Term = typename Poly<F>::Term;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = a[i].mono <=> b[j].mono;
    if (c > 0) {
      out.push_back(std::move(a[i++]));
    } else if (c < 0) {
      out.push_back(std::move(b[j++]));
    } else {
      a[i].coef += b[j].coef;
      if (!a[i].coef.is_zero()) out.push_back(std::move(a[i]));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
  return out;
}

}  // namespace detail

template <class F>
Poly<F> Poly<F>::from_terms(const F& field, const Ambient& vars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  return from_sorted(field, vars, std::move(out));
}

template <class F>
typename Poly<F>::Elem Poly<F>::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return field_.zero();
}

template <class F>
uint32_t Poly<F>::degree_in(size_t var) const {
  uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

template <class F>
void Poly<F>::check_compatible(const Poly& o) const {
  if (!(vars_ == o.vars_)) fail(ErrorCode::AmbientMismatch, "polynomials over different variable lists");
  if (!(field_ == o.field_)) fail(ErrorCode::AmbientMismatch, "polynomials over different fields");
}

template <class F>
Poly<F> Poly<F>::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

template <class F>
Poly<F>& Poly<F>::operator+=(const Poly& o) {
  check_compatible(o);
  terms_ = detail::merge_terms<F>(std::move(terms_), o.terms_);
  return *this;
}

template <class F>
Poly<F>& Poly<F>::operator-=(const Poly& o) {
  check_compatible(o);
  terms_ = detail::merge_terms<F>(std::move(terms_), (-o).terms_);
  return *this;
}

template <class F>
Poly<F> Poly<F>::scaled(const Elem& c) const {
  if (c.is_zero()) return Poly(field_, vars_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

template <class F>
Poly<F> Poly<F>::times_monomial(const Monomial& m, const Elem& c) const {
  if (c.is_zero()) return Poly(field_, vars_);
  Poly r(field_, vars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

template <class F>
Poly<F> Poly<F>::mul(const Poly& o) const {
  check_compatible(o);
  if (is_zero() || o.is_zero()) return Poly(field_, vars_);
  const Poly& small = size() <= o.size() ? *this : o;
  const Poly& big = size() <= o.size() ? o : *this;
  // One sorted row per term of the smaller factor, merged pairwise.
  std::vector<std::vector<Term>> rows;
  rows.reserve(small.size());
  for (const auto& t : small.terms_) rows.push_back(big.times_monomial(t.mono, t.coef).terms_);
  while (rows.size() > 1) {
    std::vector<std::vector<Term>> next;
    next.reserve((rows.size() + 1) / 2);
    for (size_t i = 0; i + 1 < rows.size(); i += 2) {
      next.push_back(detail::merge_terms<F>(std::move(rows[i]), std::move(rows[i + 1])));
    }
    if (rows.size() % 2) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  return from_sorted(field_, vars_, std::move(rows.front()));
}

template <class F>
Poly<F> Poly<F>::pow(unsigned e) const {
  Poly result = constant(field_, vars_, field_.one());
  Poly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

template <class F>
Poly<F> Poly<F>::monic() const {
  if (is_zero() || leading_coef().is_one()) return *this;
  return scaled(leading_coef().inv());
}

template <class F>
typename Poly<F>::Elem Poly<F>::eval(std::span<const Elem> point) const {
  return eval_mapped<Elem>(point, [](const Elem& c) { return c; }, field_.zero());
}

template <class F>
template <class E, class Map>
E Poly<F>::eval_mapped(std::span<const E> point, const Map& coef_map, const E& zero) const {
  if (point.size() != vars_.size()) fail(ErrorCode::ArityMismatch, "evaluation point has wrong length");
  const size_t n = vars_.size();
  std::vector<std::vector<E>> powers(n);
  for (size_t v = 0; v < n; ++v) {
    uint32_t d = degree_in(v);
    if (d == 0) continue;
    powers[v].reserve(d + 1);
    powers[v].push_back(point[v]);  // index k holds point^(k+1)
    for (uint32_t k = 1; k < d; ++k) powers[v].push_back(powers[v].back() * point[v]);
  }
  E acc = zero;
  for (const auto& t : terms_) {
    E term = coef_map(t.coef);
    for (size_t v = 0; v < n; ++v) {
      uint32_t e = t.mono[v];
      if (e) term = term * powers[v][e - 1];
    }
    acc = acc + term;
  }
  return acc;
}

template <class F>
Poly<F> Poly<F>::derivative(size_t var) const {
  if (var >= vars_.size()) fail(ErrorCode::UnknownVariable, "derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    uint32_t e = t.mono[var];
    if (e == 0) continue;
    Elem c = t.coef * field_.from_int(e);
    if (c.is_zero()) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, c});
  }
  // Lowering one exponent keeps relative order only within equal degrees;
  // re-sort to stay canonical.
  return from_terms(field_, vars_, std::move(out));
}

template <class F>
bool Poly<F>::try_divide(const Poly& d, Poly& quotient) const {
  check_compatible(d);
  if (d.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  quotient = Poly(field_, vars_);
  if (is_zero()) return true;
  const Term& lead = d.terms_.front();
  Elem lead_inv = lead.coef.inv();
  if (d.size() == 1) {
    std::vector<Term> q;
    q.reserve(size());
    for (const auto& t : terms_) {
      if (!lead.mono.divides(t.mono)) return false;
      q.push_back({lead.mono.quotient_of(t.mono), t.coef * lead_inv});
    }
    quotient.terms_ = std::move(q);
    return true;
  }
  std::map<Monomial, Elem, std::greater<Monomial>> rem;
  for (const auto& t : terms_) rem.emplace(t.mono, t.coef);
  std::vector<Term> q;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return false;
    if (it->first < lead.mono) return false;
    Monomial qm = lead.mono.quotient_of(it->first);
    Elem qc = it->second * lead_inv;
    rem.erase(it);
    for (size_t k = 1; k < d.terms_.size(); ++k) {
      Monomial m = d.terms_[k].mono * qm;
      Elem c = d.terms_[k].coef * qc;
      auto [pos, inserted] = rem.try_emplace(m, -c);
      if (!inserted) {
        pos->second -= c;
        if (pos->second.is_zero()) rem.erase(pos);
      }
    }
    q.push_back({qm, qc});
  }
  quotient.terms_ = std::move(q);
  return true;
}

template <class F>
Poly<F> Poly<F>::divexact(const Poly& d) const {
  Poly q;
  if (!try_divide(d, q)) fail(ErrorCode::NotDivisible, "(" + to_string() + ") / (" + d.to_string() + ")");
  return q;
}

template <class F>
Poly<F> Poly<F>::relabel(const Ambient& target, std::span<const size_t> map) const {
  if (map.size() != vars_.size()) fail(ErrorCode::ArityMismatch, "relabel map has wrong length");
  std::vector<Term> out;
  out.reserve(size());
  for (const auto& t : terms_) {
    Monomial m;
    for (size_t i = 0; i < map.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] >= target.size()) fail(ErrorCode::UnknownVariable, "relabel target out of range");
      m.set(map[i], m[map[i]] + t.mono[i]);
    }
    out.push_back({m, t.coef});
  }
  return from_terms(field_, target, std::move(out));
}

template <class F>
template <class G, class Map>
Poly<G> Poly<F>::map_coefficients(const G& target_field, const Map& fn) const {
  std::vector<typename Poly<G>::Term> out;
  out.reserve(size());
  for (const auto& t : terms_) {
    auto c = fn(t.coef);
    if (!c.is_zero()) out.push_back({t.mono, std::move(c)});
  }
  return Poly<G>::from_sorted(target_field, vars_, std::move(out));
}

template <class F>
std::string Poly<F>::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = field_.negative(t.coef);
    Elem mag = neg ? -t.coef : t.coef;
    std::string c = field_.format_coef(mag);
    std::string mono = format_monomial(t.mono, vars_);
    std::string body;
    if (mono.empty()) {
      body = c;
    } else if (mag.is_one()) {
      body = mono;
    } else {
      body = c + "*" + mono;
    }
    if (first) {
      s = neg ? "-" + body : body;
      first = false;
    } else {
      s += neg ? " - " : " + ";
      s += body;
    }
  }
  return s;
}

}  // namespace invfield
