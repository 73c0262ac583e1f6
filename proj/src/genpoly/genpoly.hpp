#pragma once

#include <string>
#include <vector>

#include "ratfield/ratfunc.hpp"
#include "towers/towers.hpp"

namespace invfield {

enum class SexticForm { Full, Char2, General };

const char* sextic_form_name(SexticForm form);
SexticForm parse_sextic_form(std::string_view name);

/// X^6 + a1 X^5 + ... + a6 with a_i over a parameter ambient (z1..z6 for
/// the full form, t1..t5 for the reduced forms).
template <class F>
struct GenericSextic {
  SexticForm form;
  F field;
  Ambient params;
  std::vector<RatFunc<F>> coeffs;  // a1..a6

  std::string to_string() const;
};

template <class F>
struct SpecializedSextic {
  SexticForm form;
  F field;
  std::vector<typename F::Elem> coeffs;  // a1..a6
  std::vector<std::pair<std::string, typename F::Elem>> params;
};

template <class F>
GenericSextic<F> g1_sextic_full(const F& field);
/// Characteristic 2 only.
template <class F>
GenericSextic<F> generic_char2(const F& field);
/// Characteristic other than 2.
template <class F>
GenericSextic<F> generic_general(const F& field);

/// Substitutes the G1 invariants into each coefficient and compares with
/// (-1)^i e_i(x1..x6).
template <class F>
std::vector<Obligation> verify_g1_identity(const F& field);

/// PoleAtParameters when a coefficient denominator vanishes.
template <class F>
SpecializedSextic<F> specialize(const GenericSextic<F>& g, std::span<const typename F::Elem> values);

}  // namespace invfield
