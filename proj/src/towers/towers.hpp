#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permgrp/perm.hpp"
#include "ratfield/ratfunc.hpp"

namespace invfield {

/// Named rational functions over a common ambient.
template <class F>
struct GeneratorSet {
  F field;
  Ambient vars;                      // where the functions live
  std::vector<std::string> names;    // names of the functions themselves
  std::vector<std::string> labels;   // display form, e.g. "v2+v3"; empty means the name
  std::vector<RatFunc<F>> gens;

  size_t size() const { return gens.size(); }
  const RatFunc<F>& at(std::string_view name) const;
  std::string label(size_t i) const { return labels.empty() || labels[i].empty() ? names[i] : labels[i]; }
};

/// An element adjoined to the new generators; its minimal polynomial
/// T^d + c_{d-1} T^{d-1} + ... + c_0 is stored by coefficients c_0..c_{d-1}
/// over the certificate ambient (new generators, then auxiliaries).
template <class F>
struct Auxiliary {
  std::string name;
  RatFunc<F> definition;  // over the old generators
  std::vector<RatFunc<F>> minpoly;
  std::string minpoly_text;

  size_t degree() const { return minpoly.size(); }
};

template <class F>
struct Certificate {
  Ambient vars;  // new generator names followed by auxiliary names
  std::vector<Auxiliary<F>> aux;
  std::vector<RatFunc<F>> reconstruction;  // one per old generator

  uint64_t degree() const {
    uint64_t d = 1;
    for (const auto& a : aux) d *= a.degree();
    return d;
  }
};

/// A permutation together with its claimed effect on the old generators.
/// Elements with generates == false are only checked, not quotiented by.
template <class F>
struct Acting {
  std::string label;
  Perm sigma;
  std::vector<RatFunc<F>> images;  // over the old generators
  bool generates = true;
};

template <class F>
struct DescentStep {
  std::string label;
  std::vector<Acting<F>> acting;
  GeneratorSet<F> gens;  // new generators, defined over the old ones
  Certificate<F> cert;
};

template <class F>
struct Tower {
  std::string name;
  Group group;
  F field;
  Ambient base;  // x1..xn
  std::vector<DescentStep<F>> steps;
  std::vector<std::string> notes;

  /// Level 0 is the base; level j holds the generators of step j.
  Ambient level_ambient(size_t j) const;
  const GeneratorSet<F>& final_set() const { return steps.back().gens; }
};

/// One checked identity or count.
struct Obligation {
  std::string step;
  std::string kind;
  std::string subject;
  bool pass = false;
  std::string detail;
};

struct TowerReport {
  std::string tower;
  std::string field;
  uint64_t seed = 0;
  std::vector<Obligation> checks;
  uint64_t total_degree = 0;
  uint64_t group_order = 0;
  size_t jacobian_rank = 0;
  std::string sampling;
  std::string conclusion;

  bool pass() const;
  const Obligation* first_failure() const;
};

struct InvarianceReport {
  struct Failure {
    std::string generator;
    std::string perm;
  };
  size_t checked = 0;
  std::vector<Failure> failures;

  bool pass() const { return failures.empty(); }
};

// Constructions. Each validates the characteristic first.

/// Masuda's pair (u, v) over the ambient (x, y, z).
template <class F>
std::pair<RatFunc<F>, RatFunc<F>> masuda_generators(const F& field);
/// Block sums and Masuda pairs on (x1,x2,x3) and (x4,x5,x6).
template <class F>
GeneratorSet<F> star_generators(const F& field);
template <class F>
GeneratorSet<F> wreath_generators(unsigned n, const F& field);
/// Generators of the wreath group: (12), the n-cycle on the first block and the block swap.
Group wreath_group(unsigned n);

template <class F>
Tower<F> g1_tower(const F& field);
template <class F>
Tower<F> g4_tower(const F& field);
template <class F>
Tower<F> g3_tower_direct(const F& field);
/// Characteristic 2 selects the char-2 chain.
template <class F>
Tower<F> g2_tower(const F& field);
/// F must be a cyclotomic field of characteristic other than 3.
template <class F>
Tower<F> g3_descent_zeta(const F& field);
Tower<PrimeField> g3_char3_tower();

/// The binomially transformed linear forms y1..yp over GF(p).
GeneratorSet<PrimeField> artin_schreier_y(unsigned p);
GeneratorSet<PrimeField> artin_schreier_cp(unsigned p);

// Verification.

template <class F>
InvarianceReport verify_invariance(const GeneratorSet<F>& gens, const Group& group);
template <class F>
TowerReport verify_tower(const Tower<F>& tower, uint64_t seed = 1);
/// Final generators as functions of x1..xn.
template <class F>
GeneratorSet<F> final_x_forms(const Tower<F>& tower);
/// Best Jacobian rank over `tries` random points (poles are redrawn).
template <class F>
size_t jacobian_rank_random(const GeneratorSet<F>& gens, uint64_t seed, int tries = 5);

/// Replaces generator `name` (searched from the last step down) by itself
/// plus 1, or plus the generator `plus` of the same step.
template <class F>
Tower<F> mutate(const Tower<F>& tower, const std::string& name, const std::optional<std::string>& plus = {});

/// Extra checks for the cube-root-of-unity descent: final generators free of
/// z3, lambda^2 composed with conjugation fixes the u-level, and conjugation
/// commutes with the group on sampled tower elements.
template <class F>
std::vector<Obligation> verify_descent(const Tower<F>& tower, uint64_t seed = 1);

}  // namespace invfield
