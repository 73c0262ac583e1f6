#pragma once

#include <random>
#include <string>

#include "algebra/fields.hpp"
#include "polyring/modfield.hpp"
#include "polyring/poly.hpp"

namespace invfield {

/// Element of a word-size finite field, usable wherever a field element type
/// is expected (evaluation, matrix rank).
template <class FF>
struct FFElem {
  const FF* ff = nullptr;
  typename FF::E v{};

  bool is_zero() const { return ff->is_zero(v); }
  bool is_one() const { return v == ff->one(); }
  FFElem inv() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in a finite field");
    return {ff, ff->inv(v)};
  }
  friend FFElem operator+(const FFElem& a, const FFElem& b) { return {a.ff, a.ff->add(a.v, b.v)}; }
  friend FFElem operator-(const FFElem& a, const FFElem& b) { return {a.ff, a.ff->sub(a.v, b.v)}; }
  friend FFElem operator*(const FFElem& a, const FFElem& b) { return {a.ff, a.ff->mul(a.v, b.v)}; }
  FFElem operator-() const { return {ff, ff->neg(v)}; }
  friend bool operator==(const FFElem& a, const FFElem& b) { return a.v == b.v; }
};

/// Random points with exact coordinates: small integers in [-20, 20].
template <class F>
class ExactSampler {
 public:
  using E = typename F::Elem;

  explicit ExactSampler(F field) : field_(std::move(field)) {}

  E zero() const { return field_.zero(); }
  E embed(const E& c) const { return c; }
  E random(std::mt19937_64& rng) const {
    return field_.from_int(std::uniform_int_distribution<int>(-20, 20)(rng));
  }
  std::string describe() const { return field_.name() + " integer points in [-20,20]"; }

 private:
  F field_;
};

/// Random points in a finite extension of the coefficient field, large
/// enough that a random point avoids a fixed hypersurface with high
/// probability.
template <class F, class FF>
class FiniteSampler {
 public:
  using E = FFElem<FF>;

  FiniteSampler(F field, FF ff) : field_(std::move(field)), ff_(std::move(ff)) {
    if constexpr (is_cyclo_field_v<F>) omega_ = ff_.cube_root_of_unity();
  }
  FiniteSampler(const FiniteSampler& o) : field_(o.field_), ff_(o.ff_), omega_(o.omega_) {}
  FiniteSampler& operator=(const FiniteSampler&) = delete;

  E zero() const { return {&ff_, ff_.zero()}; }
  E embed(const typename F::Elem& c) const {
    if constexpr (is_cyclo_field_v<F>) {
      auto a = ff_.from_u64(c.a().residue());
      auto b = ff_.from_u64(c.b().residue());
      return {&ff_, ff_.add(a, ff_.mul(b, omega_))};
    } else {
      return {&ff_, ff_.from_u64(c.residue())};
    }
  }
  E random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<uint64_t> d(0, ff_.size() - 1);
    return {&ff_, ff_.element(d(rng))};
  }
  std::string describe() const { return "random points of a field of size " + std::to_string(ff_.size()); }

 private:
  F field_;
  FF ff_;
  typename FF::E omega_{};
};

/// Calls fn with a sampler suited to the field: exact small integers in
/// characteristic 0, otherwise a finite field of size at least 2^15
/// containing the coefficient field.
template <class F, class Fn>
decltype(auto) with_sampler(const F& field, Fn&& fn) {
  if constexpr (std::is_same_v<F, RationalField> || std::is_same_v<F, CycloQ>) {
    return fn(ExactSampler<F>(field));
  } else {
    uint32_t p;
    bool even = false;
    if constexpr (is_cyclo_field_v<F>) {
      p = field.base.p;
      even = true;
    } else {
      p = field.p;
      if (p >= 4096) return fn(FiniteSampler<F, modular::PrimeFF>(field, modular::PrimeFF(p)));
    }
    uint32_t k = modular::table_degree_for(p, even);
    if (k == 0) fail(ErrorCode::InvalidArgument, "no sampling field available for " + field.name());
    return fn(FiniteSampler<F, modular::TableFF>(field, modular::TableFF(p, k)));
  }
}

/// Evaluates p at a sampler point.
template <class S, class F>
typename S::E eval_at(const S& s, const Poly<F>& p, std::span<const typename S::E> pt) {
  return p.template eval_mapped<typename S::E>(pt, [&](const typename F::Elem& c) { return s.embed(c); }, s.zero());
}

}  // namespace invfield
