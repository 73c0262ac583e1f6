#pragma once

#include "polyring/poly.hpp"

namespace invfield {

enum class GcdMethod {
  Auto,          // modular with subresultant fallback
  Modular,       // modular only; Internal error if it cannot finish
  Subresultant,  // primitive subresultant PRS only
};

template <class F>
struct GcdResult {
  Poly<F> gcd;   // leading coefficient 1 (zero only when both inputs are zero)
  Poly<F> cofa;  // a / gcd
  Poly<F> cofb;  // b / gcd
};

template <class F>
GcdResult<F> gcd_cofactors(const Poly<F>& a, const Poly<F>& b, GcdMethod method = GcdMethod::Auto);

template <class F>
Poly<F> gcd(const Poly<F>& a, const Poly<F>& b, GcdMethod method = GcdMethod::Auto) {
  return gcd_cofactors(a, b, method).gcd;
}

/// Content of p as a polynomial in var: gcd of its coefficients.
template <class F>
Poly<F> content_in(const Poly<F>& p, size_t var, GcdMethod method = GcdMethod::Auto);

}  // namespace invfield
