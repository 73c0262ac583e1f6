#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include "algebra/cyclo.hpp"
#include "algebra/error.hpp"
#include "algebra/rational.hpp"
#include "algebra/zp.hpp"

namespace invfield {

// Field descriptors. Each one is a small value type that knows how to build
// constants of its element type; polynomials carry their field by value.

struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Rational(); }
  Elem one() const { return Rational(1); }
  Elem from_int(long long v) const { return Rational(mpz_class(std::to_string(v))); }
  Elem from_rational(const Rational& r) const { return r; }

  unsigned characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  bool negative(const Elem& e) const { return e.is_negative(); }

  std::string format(const Elem& e) const { return e.to_string(); }
  std::string format_coef(const Elem& e) const { return e.to_string(); }
  Elem parse(std::string_view text) const;

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

struct PrimeField {
  using Elem = Zp;

  PrimeField() = default;
  explicit PrimeField(uint32_t prime);

  uint32_t p = 2;

  Elem zero() const { return Zp(0, p); }
  Elem one() const { return Zp(1, p); }
  Elem from_int(long long v) const { return Zp::from_int(v, p); }
  Elem from_rational(const Rational& r) const;

  unsigned characteristic() const { return p; }
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }
  bool negative(const Elem&) const { return false; }

  std::string format(const Elem& e) const { return e.to_string(); }
  std::string format_coef(const Elem& e) const { return std::to_string(e.residue()); }
  Elem parse(std::string_view text) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

namespace detail {
std::string format_cyclo(const std::string& a, const std::string& b, bool b_negative,
                         const std::string& b_abs);
// Parses "a + b*z3" style text into (a, b) substrings of base-field text.
void split_cyclo(std::string_view text, std::string& a, std::string& b);
}  // namespace detail

/// Base field with a primitive cube root of unity adjoined. Over GF(p) this
/// is only a field when p = 2 (mod 3); other primes are rejected.
template <class BaseField>
struct CycloField {
  using BaseElem = typename BaseField::Elem;
  using Elem = Cyclo<BaseElem>;

  CycloField() = default;
  explicit CycloField(BaseField b) : base(std::move(b)) {
    if constexpr (std::is_same_v<BaseField, PrimeField>) {
      if (base.p % 3 != 2) {
        fail(ErrorCode::InvalidArgument,
             "z^2+z+1 is reducible over " + base.name() + "; choose p = 2 (mod 3)");
      }
    }
  }

  BaseField base{};

  Elem zero() const { return Elem(base.zero(), base.zero()); }
  Elem one() const { return Elem(base.one(), base.zero()); }
  Elem zeta() const { return Elem(base.zero(), base.one()); }
  Elem from_int(long long v) const { return Elem(base.from_int(v), base.zero()); }
  Elem from_rational(const Rational& r) const { return Elem(base.from_rational(r), base.zero()); }
  Elem embed(const BaseElem& e) const { return Elem(e, base.zero()); }

  unsigned characteristic() const { return base.characteristic(); }
  std::string name() const { return base.name() + "(z3)"; }
  bool negative(const Elem& e) const {
    if (e.b().is_zero()) return base.negative(e.a());
    return e.a().is_zero() && base.negative(e.b());
  }

  std::string format(const Elem& e) const {
    std::string s = format_plain(e);
    if constexpr (std::is_same_v<BaseField, PrimeField>) s += " mod " + std::to_string(base.p);
    return s;
  }
  std::string format_coef(const Elem& e) const {
    if (e.b().is_zero()) return base.format_coef(e.a());
    if (e.a().is_zero()) return format_plain(e);
    return "(" + format_plain(e) + ")";
  }
  Elem parse(std::string_view text) const {
    std::string t(text);
    if constexpr (std::is_same_v<BaseField, PrimeField>) {
      auto pos = t.find("mod");
      if (pos != std::string::npos) {
        auto mod = std::stoul(t.substr(pos + 3));
        if (mod != base.p) fail(ErrorCode::ParseError, "modulus mismatch in '" + t + "'");
        t = t.substr(0, pos);
      }
    }
    std::string a, b;
    detail::split_cyclo(t, a, b);
    return Elem(base.parse(a), base.parse(b));
  }

  friend bool operator==(const CycloField& x, const CycloField& y) { return x.base == y.base; }

 private:
  std::string format_plain(const Elem& e) const {
    BaseElem nb = -e.b();
    return detail::format_cyclo(base.format_coef(e.a()), base.format_coef(e.b()),
                                base.negative(e.b()), base.format_coef(nb));
  }
};

using CycloQ = CycloField<RationalField>;
using CycloGF = CycloField<PrimeField>;

template <class F>
inline constexpr bool is_cyclo_field_v = false;
template <class B>
inline constexpr bool is_cyclo_field_v<CycloField<B>> = true;

/// Characteristic of a field descriptor.
template <class F>
unsigned characteristic(const F& field) {
  return field.characteristic();
}

}  // namespace invfield
