#pragma once

#include <string>

#include "algebra/error.hpp"

namespace invfield {

/// a + b*z where z is a primitive cube root of unity (z^2 + z + 1 = 0).
template <class B>
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(B a, B b) : a_(std::move(a)), b_(std::move(b)) {}

  const B& a() const { return a_; }
  const B& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool in_base() const { return b_.is_zero(); }

  /// z -> z^2 = -1 - z.
  Cyclo conjugate() const { return Cyclo(a_ - b_, -b_); }

  B norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  Cyclo inv() const {
    B n = norm();
    if (n.is_zero()) {
      fail(ErrorCode::DivisionByZero, "inverse of a zero divisor in the cyclotomic extension");
    }
    B ninv = n.inv();
    Cyclo c = conjugate();
    return Cyclo(c.a_ * ninv, c.b_ * ninv);
  }

  Cyclo& operator+=(const Cyclo& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Cyclo& operator-=(const Cyclo& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  Cyclo& operator*=(const Cyclo& o) {
    // (a + bz)(c + dz) = ac - bd + (ad + bc - bd) z
    B bd = b_ * o.b_;
    B na = a_ * o.a_ - bd;
    B nb = a_ * o.b_ + b_ * o.a_ - bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inv(); }

  friend Cyclo operator+(Cyclo x, const Cyclo& y) { return x += y; }
  friend Cyclo operator-(Cyclo x, const Cyclo& y) { return x -= y; }
  friend Cyclo operator*(Cyclo x, const Cyclo& y) { return x *= y; }
  friend Cyclo operator/(Cyclo x, const Cyclo& y) { return x /= y; }
  Cyclo operator-() const { return Cyclo(-a_, -b_); }

  friend bool operator==(const Cyclo& x, const Cyclo& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  B a_{};
  B b_{};
};

}  // namespace invfield
