#include "polyring/modfield.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "algebra/error.hpp"

namespace invfield::modular {

PrimeFF::E PrimeFF::inv(E a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of 0 in GF(" + std::to_string(p_) + ")");
  int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr) {
    int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return static_cast<E>(t < 0 ? t + p_ : t);
}

PrimeFF::E PrimeFF::pow(E a, uint64_t e) const {
  E r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

struct FieldTables {
  std::vector<uint32_t> exp;   // log -> digit index
  std::vector<uint32_t> log;   // digit index -> log
  std::vector<uint32_t> zech;  // n -> log(1 + g^n)
};

namespace {

// Multiplies the element with base-p digits `d` by x modulo the monic
// polynomial x^k + m[k-1] x^(k-1) + ... + m[0].
void times_x(std::vector<uint32_t>& d, const std::vector<uint32_t>& m, uint32_t p) {
  size_t k = d.size();
  uint32_t top = d[k - 1];
  for (size_t i = k - 1; i > 0; --i) d[i] = d[i - 1];
  d[0] = 0;
  if (top == 0) return;
  for (size_t i = 0; i < k; ++i) {
    uint32_t sub = static_cast<uint32_t>(uint64_t(top) * m[i] % p);
    d[i] = (d[i] + p - sub) % p;
  }
}

uint32_t encode(const std::vector<uint32_t>& d, uint32_t p) {
  uint32_t v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

std::shared_ptr<const FieldTables> build_tables(uint32_t p, uint32_t k) {
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) q *= p;
  const uint32_t q1 = static_cast<uint32_t>(q - 1);
  auto t = std::make_shared<FieldTables>();
  t->exp.resize(q1);
  t->log.assign(q, q1);
  // Try monic candidates m in increasing digit order until x has order q-1.
  std::vector<uint32_t> m(k, 0);
  m[0] = 1;
  for (;;) {
    std::vector<uint32_t> d(k, 0);
    d[0] = 1;
    uint32_t n = 0;
    bool ok = true;
    for (; n < q1; ++n) {
      uint32_t idx = encode(d, p);
      if (n > 0 && idx == 1) {
        ok = false;
        break;
      }
      t->exp[n] = idx;
      times_x(d, m, p);
    }
    if (ok && encode(d, p) == 1) break;
    // next candidate, keeping m[0] != 0
    size_t i = 0;
    for (; i < k; ++i) {
      if (++m[i] < p) break;
      m[i] = 0;
    }
    if (i == k) fail(ErrorCode::Internal, "no primitive polynomial found");
    if (m[0] == 0) m[0] = 1;
  }
  for (uint32_t n = 0; n < q1; ++n) t->log[t->exp[n]] = n;
  t->zech.resize(q1);
  for (uint32_t n = 0; n < q1; ++n) {
    uint32_t idx = t->exp[n];
    uint32_t d0 = idx % p;
    uint32_t nidx = idx - d0 + (d0 + 1) % p;
    t->zech[n] = nidx == 0 ? q1 : t->log[nidx];
  }
  return t;
}

std::shared_ptr<const FieldTables> tables_for(uint32_t p, uint32_t k) {
  static std::mutex mu;
  static std::map<std::pair<uint32_t, uint32_t>, std::shared_ptr<const FieldTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = build_tables(p, k);
  return slot;
}

}  // namespace

TableFF::TableFF(uint32_t p, uint32_t k) : p_(p), k_(k) {
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) q *= p;
  if (k == 0 || q > (uint64_t(1) << 23)) fail(ErrorCode::InvalidArgument, "extension field too large");
  q1_ = static_cast<uint32_t>(q - 1);
  tables_ = tables_for(p, k);
  exp_ = tables_->exp.data();
  log_ = tables_->log.data();
  zech_ = tables_->zech.data();
}

uint32_t table_degree_for(uint32_t p, bool even) {
  uint64_t q = 1;
  uint32_t k = 0;
  while (q < (uint64_t(1) << 15) || (even && k % 2)) {
    q *= p;
    ++k;
  }
  return q > (uint64_t(1) << 23) ? 0 : k;
}

}  // namespace invfield::modular
