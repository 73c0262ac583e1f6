#pragma once

#include <cstdint>
#include <string>

namespace invfield {

bool is_prime_u64(uint64_t n);

/// Element of GF(p). A default-constructed value has modulus 0 and acts as
/// the zero of whatever field it is combined with.
class Zp {
 public:
  Zp() = default;
  Zp(uint64_t residue, uint32_t p) : r_(p ? static_cast<uint32_t>(residue % p) : 0), p_(p) {}

  static Zp from_int(long long v, uint32_t p) {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += p;
    return Zp(static_cast<uint64_t>(m), p);
  }

  uint32_t residue() const { return r_; }
  uint32_t modulus() const { return p_; }
  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1; }

  Zp inv() const;
  Zp pow(uint64_t e) const;

  Zp& operator+=(const Zp& o) {
    p_ = p_ ? p_ : o.p_;
    uint64_t s = uint64_t(r_) + o.r_;
    r_ = static_cast<uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  Zp& operator-=(const Zp& o) {
    p_ = p_ ? p_ : o.p_;
    r_ = r_ >= o.r_ ? r_ - o.r_ : static_cast<uint32_t>(uint64_t(r_) + p_ - o.r_);
    return *this;
  }
  Zp& operator*=(const Zp& o) {
    p_ = p_ ? p_ : o.p_;
    r_ = p_ ? static_cast<uint32_t>(uint64_t(r_) * o.r_ % p_) : 0;
    return *this;
  }
  Zp& operator/=(const Zp& o) { return *this *= o.inv(); }

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  Zp operator-() const { return Zp(r_ ? p_ - r_ : 0, p_); }

  friend bool operator==(const Zp& a, const Zp& b) { return a.r_ == b.r_; }

  /// "a mod p".
  std::string to_string() const;

 private:
  uint32_t r_ = 0;
  uint32_t p_ = 0;
};

}  // namespace invfield
