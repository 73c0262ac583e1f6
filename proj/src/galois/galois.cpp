#include "galois/galois.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "galois/unipoly.hpp"
#include "polyring/modfield.hpp"
#include "ratfield/sampling.hpp"

namespace invfield {

using modular::PrimeFF;
using modular::TableFF;

namespace {

template <class FF>
CycleType ddf(const FF& ff, uni::Vec<FF> f) {
  f = uni::monic(ff, std::move(f));
  if (!uni::squarefree(ff, f)) fail(ErrorCode::NotSquarefree, "polynomial has a repeated factor");
  const uint64_t q = ff.size();
  const uni::Vec<FF> x{ff.zero(), ff.one()};
  CycleType out;
  uni::Vec<FF> h = uni::divmod(ff, x, f);
  for (long d = 1; 2 * d <= uni::deg<FF>(f); ++d) {
    h = uni::powmod(ff, h, q, f);
    uni::Vec<FF> g = uni::gcd(ff, f, uni::sub(ff, h, x));
    const long dg = uni::deg<FF>(g);
    if (dg > 0) {
      for (long k = 0; k < dg / d; ++k) out.push_back(static_cast<unsigned>(d));
      uni::Vec<FF> quo;
      uni::divmod(ff, f, g, &quo);
      f = std::move(quo);
      h = uni::divmod(ff, h, f);
    }
  }
  if (uni::deg<FF>(f) > 0) out.push_back(static_cast<unsigned>(uni::deg<FF>(f)));
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

std::variant<UniPoly, Skip> reduce_mod_p(const std::vector<Rational>& lower, uint32_t p) {
  if (p < 2) fail(ErrorCode::InvalidArgument, "modulus must be prime");
  const PrimeFF ff(p);
  // Leading coefficient 1 followed by c_{n-1}..c_0.
  mpz_class lcm = 1;
  for (const auto& c : lower) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  if (mpz_divisible_ui_p(lcm.get_mpz_t(), p)) return Skip{"p divides a coefficient denominator"};
  UniPoly u;
  u.p = p;
  const size_t n = lower.size();
  u.coeffs.assign(n + 1, 0);
  u.coeffs[n] = 1;
  for (size_t i = 0; i < n; ++i) {
    mpz_class num = lower[i].numerator();
    uint32_t r = static_cast<uint32_t>(mpz_fdiv_ui(num.get_mpz_t(), p));
    uint32_t d = static_cast<uint32_t>(mpz_fdiv_ui(lower[i].denominator().get_mpz_t(), p));
    u.coeffs[n - 1 - i] = ff.mul(r, ff.inv(d));
  }
  if (!uni::squarefree(ff, u.coeffs)) return Skip{"reduction is not squarefree"};
  return u;
}

std::variant<UniPoly, Skip> reduce_mod_p(const SpecializedSextic<RationalField>& s, uint32_t p) {
  return reduce_mod_p(s.coeffs, p);
}

CycleType distinct_degree_pattern(const UniPoly& f) {
  if (f.coeffs.empty() || f.coeffs.back() != 1) fail(ErrorCode::InvalidArgument, "polynomial must be monic");
  return ddf(PrimeFF(f.p), f.coeffs);
}

CycleType brute_force_pattern(const UniPoly& f) {
  const PrimeFF ff(f.p);
  if (f.degree() > 7) fail(ErrorCode::InvalidArgument, "brute-force factorization is limited to degree 7");
  uni::Vec<PrimeFF> rest = uni::monic(ff, f.coeffs);
  CycleType out;
  for (long d = 1; d <= 3 && uni::deg<PrimeFF>(rest) >= 2 * d; ++d) {
    // Enumerate monic g of degree d; by the time degree d is reached, every
    // divisor found is irreducible because smaller factors are gone.
    uint64_t count = 1;
    for (long i = 0; i < d; ++i) count *= f.p;
    uni::Vec<PrimeFF> g(d + 1, 0);
    g[d] = 1;
    for (uint64_t idx = 0; idx < count && uni::deg<PrimeFF>(rest) >= 2 * d; ++idx) {
      uint64_t v = idx;
      for (long i = 0; i < d; ++i) {
        g[i] = static_cast<uint32_t>(v % f.p);
        v /= f.p;
      }
      for (;;) {
        uni::Vec<PrimeFF> quo, q2;
        if (!uni::divmod(ff, rest, g, &quo).empty()) break;
        if (uni::divmod(ff, quo, g, &q2).empty()) fail(ErrorCode::NotSquarefree, "polynomial has a repeated factor");
        out.push_back(static_cast<unsigned>(d));
        rest = std::move(quo);
      }
    }
  }
  if (uni::deg<PrimeFF>(rest) > 0) out.push_back(static_cast<unsigned>(uni::deg<PrimeFF>(rest)));
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<uint32_t> primes_in(uint32_t lo, uint32_t hi) {
  std::vector<uint32_t> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> comp(hi + 1, false);
  for (uint64_t i = 2; i <= hi; ++i) {
    if (comp[i]) continue;
    if (i >= lo) out.push_back(static_cast<uint32_t>(i));
    for (uint64_t j = i * i; j <= hi; j += i) comp[j] = true;
  }
  return out;
}

FrobeniusCensus sample_census(const std::vector<Rational>& lower, uint32_t lo, uint32_t hi) {
  FrobeniusCensus c;
  for (uint32_t p : primes_in(lo, hi)) {
    auto r = reduce_mod_p(lower, p);
    if (auto* u = std::get_if<UniPoly>(&r)) {
      ++c.counts[distinct_degree_pattern(*u)];
      ++c.total;
    } else {
      c.skipped.push_back(p);
    }
  }
  if (c.total == 0) fail(ErrorCode::NoUsablePrimes, "no usable prime in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return c;
}

FrobeniusCensus sample_census(const SpecializedSextic<RationalField>& s, uint32_t lo, uint32_t hi) {
  return sample_census(s.coeffs, lo, hi);
}

CensusComparison compare_census(const FrobeniusCensus& observed, const std::map<CycleType, Rational>& theoretical) {
  if (observed.total <= 0) fail(ErrorCode::InvalidArgument, "empty census");
  CensusComparison r;
  double tv = 0;
  for (const auto& [ct, n] : observed.counts) {
    const double obs = static_cast<double>(n) / static_cast<double>(observed.total);
    auto it = theoretical.find(ct);
    const double theo = it == theoretical.end() ? 0.0 : it->second.value().get_d();
    tv += std::fabs(obs - theo);
    if (it == theoretical.end() || it->second.is_zero()) {
      r.containment = false;
      r.foreign.push_back(ct);
    }
  }
  for (const auto& [ct, q] : theoretical) {
    if (!observed.counts.count(ct)) tv += q.value().get_d();
  }
  r.tv = tv / 2;
  return r;
}

FrobeniusCensus char2_function_field_census(const std::vector<uint64_t>& params, unsigned max_degree) {
  if (params.size() != 5) fail(ErrorCode::ArityMismatch, "the char2 form takes five parameters");
  if (max_degree == 0 || max_degree > 16) fail(ErrorCode::InvalidArgument, "place degree must be in 1..16");
  const PrimeField f2(2);
  const GenericSextic<PrimeField> g = generic_char2(f2);
  FrobeniusCensus c;
  for (unsigned d = 1; d <= max_degree; ++d) {
    const TableFF ff(2, d);
    using E = FFElem<TableFF>;
    const uint32_t q1 = static_cast<uint32_t>(ff.size() - 1);
    // Points of exact degree d, one per Frobenius orbit. Nonzero elements
    // are discrete logs L, and Frobenius doubles L mod q-1; the smallest L
    // stands for its orbit. Zero is a point of degree 1.
    std::vector<uint32_t> points;
    if (d == 1) points.push_back(ff.zero());
    for (uint32_t L = 0; L < q1; ++L) {
      uint32_t size = 1;
      bool smallest = true;
      for (uint64_t m = (uint64_t(L) * 2) % q1; m != L; m = (m * 2) % q1) {
        ++size;
        if (m < L) smallest = false;
      }
      if (smallest && size == d) points.push_back(L);
    }
    for (uint32_t a : points) {
      // t_k(alpha) from the binary digits.
      std::vector<E> t;
      for (uint64_t bits : params) {
        E acc{&ff, ff.zero()}, pw{&ff, ff.one()};
        for (; bits; bits >>= 1) {
          if (bits & 1) acc = acc + pw;
          pw = pw * E{&ff, a};
        }
        t.push_back(acc);
      }
      uni::Vec<TableFF> poly(7, ff.zero());
      poly[6] = ff.one();
      for (size_t k = 0; k < 6; ++k) {
        auto embed = [&](const Zp& z) { return E{&ff, ff.from_u64(z.residue())}; };
        E num = g.coeffs[k].num().template eval_mapped<E>(std::span<const E>(t), embed, E{&ff, ff.zero()});
        E den = g.coeffs[k].den().template eval_mapped<E>(std::span<const E>(t), embed, E{&ff, ff.zero()});
        poly[5 - k] = (num * den.inv()).v;
      }
      if (!uni::squarefree(ff, poly)) {
        c.skipped.push_back(d);
        continue;
      }
      ++c.counts[ddf(ff, poly)];
      ++c.total;
    }
  }
  if (c.total == 0) fail(ErrorCode::NoUsablePrimes, "no usable place");
  return c;
}

}  // namespace invfield
