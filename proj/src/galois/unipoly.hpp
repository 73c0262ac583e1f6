#pragma once

// Dense univariate polynomials over a word-size finite field, coefficients
// stored low degree first with no trailing zeros.

#include <cstdint>
#include <vector>

#include "algebra/error.hpp"

namespace invfield::uni {

template <class FF>
using Vec = std::vector<typename FF::E>;

template <class FF>
void trim(const FF& ff, Vec<FF>& a) {
  while (!a.empty() && ff.is_zero(a.back())) a.pop_back();
}

template <class FF>
long deg(const Vec<FF>& a) {
  return static_cast<long>(a.size()) - 1;
}

template <class FF>
Vec<FF> monic(const FF& ff, Vec<FF> a) {
  trim(ff, a);
  if (a.empty()) return a;
  auto inv = ff.inv(a.back());
  for (auto& c : a) c = ff.mul(c, inv);
  return a;
}

template <class FF>
Vec<FF> sub(const FF& ff, Vec<FF> a, const Vec<FF>& b) {
  if (a.size() < b.size()) a.resize(b.size(), ff.zero());
  for (size_t i = 0; i < b.size(); ++i) a[i] = ff.sub(a[i], b[i]);
  trim(ff, a);
  return a;
}

/// Remainder of a by b (b nonzero); the quotient is written to q when given.
template <class FF>
Vec<FF> divmod(const FF& ff, Vec<FF> a, const Vec<FF>& b, Vec<FF>* q = nullptr) {
  trim(ff, a);
  if (b.empty()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  const long db = deg<FF>(b);
  auto inv = ff.inv(b.back());
  if (q) q->assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, ff.zero());
  while (deg<FF>(a) >= db) {
    const long shift = deg<FF>(a) - db;
    auto f = ff.mul(a.back(), inv);
    if (q) (*q)[shift] = f;
    for (long i = 0; i <= db; ++i) a[i + shift] = ff.sub(a[i + shift], ff.mul(f, b[i]));
    trim(ff, a);
  }
  if (q) trim(ff, *q);
  return a;
}

template <class FF>
Vec<FF> mulmod(const FF& ff, const Vec<FF>& a, const Vec<FF>& b, const Vec<FF>& m) {
  if (a.empty() || b.empty()) return {};
  Vec<FF> r(a.size() + b.size() - 1, ff.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (ff.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = ff.add(r[i + j], ff.mul(a[i], b[j]));
  }
  return divmod(ff, std::move(r), m);
}

template <class FF>
Vec<FF> powmod(const FF& ff, Vec<FF> base, uint64_t e, const Vec<FF>& m) {
  Vec<FF> r{ff.one()};
  r = divmod(ff, r, m);
  base = divmod(ff, std::move(base), m);
  while (e) {
    if (e & 1) r = mulmod(ff, r, base, m);
    e >>= 1;
    if (e) base = mulmod(ff, base, base, m);
  }
  return r;
}

template <class FF>
Vec<FF> gcd(const FF& ff, Vec<FF> a, Vec<FF> b) {
  trim(ff, a);
  trim(ff, b);
  while (!b.empty()) {
    Vec<FF> r = divmod(ff, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(ff, std::move(a));
}

template <class FF>
Vec<FF> derivative(const FF& ff, const Vec<FF>& a) {
  Vec<FF> d;
  for (size_t i = 1; i < a.size(); ++i) {
    auto c = ff.zero();
    for (size_t k = 0; k < i; ++k) c = ff.add(c, a[i]);  // i * a[i] by repeated addition
    d.push_back(c);
  }
  trim(ff, d);
  return d;
}

template <class FF>
bool squarefree(const FF& ff, const Vec<FF>& f) {
  Vec<FF> d = derivative(ff, f);
  if (d.empty()) return false;
  return deg<FF>(gcd(ff, f, d)) == 0;
}

}  // namespace invfield::uni
