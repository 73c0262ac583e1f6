#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>

#include "algebra/error.hpp"
#include "polyring/ambient.hpp"

namespace invfield {

/// Exponent vector with one 32-bit slot per ambient variable. Ordered by
/// graded lex: total degree first, then lex with the first variable largest.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const uint32_t> exps) {
    if (exps.size() > kMaxVars) fail(ErrorCode::InvalidArgument, "too many variables");
    for (size_t i = 0; i < exps.size(); ++i) {
      e_[i] = exps[i];
      deg_ += exps[i];
    }
  }

  static Monomial unit(size_t var, uint32_t power = 1) {
    Monomial m;
    m.e_[var] = power;
    m.deg_ = power;
    return m;
  }

  uint32_t operator[](size_t i) const { return e_[i]; }
  uint64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(size_t i, uint32_t v) {
    deg_ = deg_ - e_[i] + v;
    e_[i] = v;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i) {
      uint64_t s = uint64_t(a.e_[i]) + b.e_[i];
      if (s > UINT32_MAX) fail(ErrorCode::ExponentOverflow, "exponent exceeds 32 bits");
      m.e_[i] = static_cast<uint32_t>(s);
    }
    m.deg_ = a.deg_ + b.deg_;
    return m;
  }

  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < kMaxVars; ++i) {
      if (e_[i] > o.e_[i]) return false;
    }
    return true;
  }

  /// o / this, assuming divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i) m.e_[i] = o.e_[i] - e_[i];
    m.deg_ = o.deg_ - deg_;
    return m;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i) {
      m.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
      m.deg_ += m.e_[i];
    }
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.e_ == b.e_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ <=> b.deg_;
    return a.e_ <=> b.e_;
  }

 private:
  std::array<uint32_t, kMaxVars> e_{};
  uint64_t deg_ = 0;
};

}  // namespace invfield
