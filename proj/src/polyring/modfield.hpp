#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace invfield::modular {

/// Word-size prime field with residues in [0, p), p < 2^31.
class PrimeFF {
 public:
  using E = uint32_t;

  explicit PrimeFF(uint32_t p) : p_(p) {}

  uint32_t characteristic() const { return p_; }
  uint64_t size() const { return p_; }

  E zero() const { return 0; }
  E one() const { return 1; }
  bool is_zero(E a) const { return a == 0; }

  E add(E a, E b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  E sub(E a, E b) const { return a >= b ? a - b : a + p_ - b; }
  E neg(E a) const { return a ? p_ - a : 0; }
  E mul(E a, E b) const { return static_cast<E>(uint64_t(a) * b % p_); }
  E inv(E a) const;
  E pow(E a, uint64_t e) const;

  /// The i-th element in a fixed enumeration of the field.
  E element(uint64_t i) const { return static_cast<E>(i % p_); }
  E from_u64(uint64_t v) const { return static_cast<E>(v % p_); }

 private:
  uint32_t p_;
};

struct FieldTables;

/// GF(p^k) with Zech-logarithm arithmetic. Elements are stored as discrete
/// logs to a fixed primitive element; q-1 encodes zero.
class TableFF {
 public:
  using E = uint32_t;

  /// Tables are built on first use and shared process-wide.
  TableFF(uint32_t p, uint32_t k);

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return k_; }
  uint64_t size() const { return uint64_t(q1_) + 1; }

  E zero() const { return q1_; }
  E one() const { return 0; }
  bool is_zero(E a) const { return a == q1_; }

  E add(E a, E b) const {
    if (a == q1_) return b;
    if (b == q1_) return a;
    uint32_t d = b >= a ? b - a : b + q1_ - a;
    uint32_t z = zech_[d];
    if (z == q1_) return q1_;
    uint32_t r = a + z;
    return r >= q1_ ? r - q1_ : r;
  }
  E neg(E a) const {
    if (p_ == 2 || a == q1_) return a;
    uint32_t r = a + q1_ / 2;
    return r >= q1_ ? r - q1_ : r;
  }
  E sub(E a, E b) const { return add(a, neg(b)); }
  E mul(E a, E b) const {
    if (a == q1_ || b == q1_) return q1_;
    uint32_t r = a + b;
    return r >= q1_ ? r - q1_ : r;
  }
  E inv(E a) const { return a == 0 ? 0 : q1_ - a; }
  E pow(E a, uint64_t e) const {
    if (e == 0) return 0;
    if (a == q1_) return q1_;
    return static_cast<E>(uint64_t(a) * (e % q1_) % q1_);
  }

  E element(uint64_t i) const {
    uint64_t idx = i % size();
    return idx == 0 ? q1_ : log_[idx];
  }
  /// Image of the prime-field residue r.
  E from_u64(uint64_t r) const { return element(r % p_); }
  /// Residue r when a lies in the prime field.
  bool to_base(E a, uint32_t& r) const {
    if (a == q1_) {
      r = 0;
      return true;
    }
    uint32_t idx = exp_[a];
    if (idx >= p_) return false;
    r = idx;
    return true;
  }
  /// A primitive cube root of unity; requires 3 | q-1.
  E cube_root_of_unity() const { return q1_ / 3; }

 private:
  std::shared_ptr<const FieldTables> tables_;
  uint32_t p_;
  uint32_t k_;
  uint32_t q1_;
  const uint32_t* exp_;
  const uint32_t* log_;
  const uint32_t* zech_;
};

/// Smallest extension degree k with p^k >= 2^15 (even when requested).
/// Returns 0 when the resulting table would be too large.
uint32_t table_degree_for(uint32_t p, bool even);

}  // namespace invfield::modular
