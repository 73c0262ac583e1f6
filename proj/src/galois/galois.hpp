#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "genpoly/genpoly.hpp"
#include "permgrp/perm.hpp"

namespace invfield {

/// Monic polynomial over GF(p), residues low degree first.
struct UniPoly {
  uint32_t p = 0;
  std::vector<uint32_t> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

struct Skip {
  std::string reason;
};

/// Clears denominators and reduces mod p; Skip when p divides a
/// denominator, the degree drops, or the reduction is not squarefree.
std::variant<UniPoly, Skip> reduce_mod_p(const SpecializedSextic<RationalField>& s, uint32_t p);
/// Same, for a monic polynomial given by rational coefficients c_{n-1}..c_0
/// below the leading 1.
std::variant<UniPoly, Skip> reduce_mod_p(const std::vector<Rational>& lower, uint32_t p);

/// Degrees of the irreducible factors by distinct-degree factorization.
/// NotSquarefree for inputs with repeated factors.
CycleType distinct_degree_pattern(const UniPoly& f);
/// Independent oracle: trial division by every monic polynomial of degree
/// at most 3, valid for degree up to 7.
CycleType brute_force_pattern(const UniPoly& f);

struct FrobeniusCensus {
  std::map<CycleType, long> counts;
  long total = 0;
  std::vector<uint32_t> skipped;
};

std::vector<uint32_t> primes_in(uint32_t lo, uint32_t hi);

/// NoUsablePrimes when every prime in [lo, hi] is skipped (or none exist).
FrobeniusCensus sample_census(const std::vector<Rational>& lower, uint32_t lo, uint32_t hi);
FrobeniusCensus sample_census(const SpecializedSextic<RationalField>& s, uint32_t lo, uint32_t hi);

struct CensusComparison {
  double tv = 0;
  bool containment = true;
  std::vector<CycleType> foreign;  // observed types absent from the group
};

CensusComparison compare_census(const FrobeniusCensus& observed, const std::map<CycleType, Rational>& theoretical);

/// The char-2 form over GF(2)(s) with t_i in GF(2)[s] given by the binary
/// digits of params[i] (bit k is the coefficient of s^k). Frobenius cycle
/// types are sampled at every place of degree 1..max_degree; places where
/// the reduction is not squarefree are counted in `skipped` by degree.
FrobeniusCensus char2_function_field_census(const std::vector<uint64_t>& params, unsigned max_degree);

}  // namespace invfield
