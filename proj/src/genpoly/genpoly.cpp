#include "genpoly/genpoly.hpp"

#include "ratfield/parse.hpp"

namespace invfield {

const char* sextic_form_name(SexticForm form) {
  switch (form) {
    case SexticForm::Full: return "full";
    case SexticForm::Char2: return "char2";
    case SexticForm::General: return "general";
  }
  return "?";
}

SexticForm parse_sextic_form(std::string_view name) {
  if (name == "full") return SexticForm::Full;
  if (name == "char2") return SexticForm::Char2;
  if (name == "general") return SexticForm::General;
  fail(ErrorCode::InvalidArgument, "unknown sextic form '" + std::string(name) + "'");
}

namespace {

template <class F>
GenericSextic<F> from_text(SexticForm form, const F& field, Ambient params, const std::vector<std::string>& a) {
  GenericSextic<F> g{form, field, params, {}};
  for (const auto& s : a) g.coeffs.push_back(parse_ratfunc(field, params, s));
  return g;
}

}  // namespace

template <class F>
std::string GenericSextic<F>::to_string() const {
  std::string out = "X^6";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    const auto& c = coeffs[i];
    if (c.is_zero()) continue;
    const int e = 5 - static_cast<int>(i);
    std::string mono = e == 0 ? "" : (e == 1 ? "X" : "X^" + std::to_string(e));
    if (c.is_one()) {
      out += " + " + mono;
      continue;
    }
    bool neg = false;
    RatFunc<F> shown = c;
    if (c.is_polynomial() && c.num().size() == 1 && field.negative(c.num().leading_coef())) {
      neg = true;
      shown = -c;
    }
    std::string body = shown.to_string();
    const bool wrap = !(shown.is_polynomial() && shown.num().size() == 1);
    if (wrap) body = "(" + body + ")";
    if (mono.empty()) {
      out += (neg ? " - " : " + ") + body;
    } else if (shown.is_one()) {
      out += (neg ? " - " : " + ") + mono;
    } else {
      out += (neg ? " - " : " + ") + body + "*" + mono;
    }
  }
  return out;
}

template <class F>
GenericSextic<F> g1_sextic_full(const F& field) {
  return from_text(SexticForm::Full, field, Ambient::numbered("z", 6),
                   {"-z1", "z2+z4", "-(z3+z5)", "z6+(z4*z2^2-z1*z2*z5+z5^2)/(4*z4-z1^2)",
                    "-(2*z4*z2*z3-z1*(z2*z6+z5*z3)+2*z5*z6)/(4*z4-z1^2)",
                    "(z4*z3^2-z1*z3*z6+z6^2)/(4*z4-z1^2)"});
}

template <class F>
GenericSextic<F> generic_char2(const F& field) {
  if (field.characteristic() != 2) {
    fail(ErrorCode::WrongCharacteristic, "the char2 form needs characteristic 2, not " + field.name());
  }
  return from_text(SexticForm::Char2, field, Ambient::numbered("t", 5),
                   {"1", "t1+t3", "t2+t4", "t5+t3*t1^2+t1*t4+t4^2", "t1*t5+t4*t2", "t3*t2^2+t2*t5+t5^2"});
}

template <class F>
GenericSextic<F> generic_general(const F& field) {
  if (field.characteristic() == 2) {
    fail(ErrorCode::WrongCharacteristic, "the general form needs characteristic other than 2");
  }
  return from_text(SexticForm::General, field, Ambient::numbered("t", 5),
                   {"-2", "2*t1+t3+1", "-(2*t2+2*t4)", "2*t5+t1^2+(t1-t4)^2/t3",
                    "-(t1*t2+(t1-t4)*(t2-t5)/t3)", "t2^2+(t2-t5)^2/t3"});
}

template <class F>
std::vector<Obligation> verify_g1_identity(const F& field) {
  GenericSextic<F> g = g1_sextic_full(field);
  GeneratorSet<F> z = final_x_forms(g1_tower(field));
  const Ambient& x = z.vars;
  // e_k(x1..x6) via the product of (1 + x_i T).
  std::vector<Poly<F>> e(7, Poly<F>(field, x));
  e[0] = Poly<F>::constant(field, x, field.one());
  for (size_t i = 0; i < 6; ++i) {
    Poly<F> xi = Poly<F>::variable(field, x, i);
    for (size_t k = i + 1; k >= 1; --k) e[k] = e[k] + e[k - 1] * xi;
  }
  std::vector<Obligation> out;
  for (size_t i = 0; i < 6; ++i) {
    Obligation o{"G1 sextic", "identity", "a" + std::to_string(i + 1), false, ""};
    try {
      RatFunc<F> lhs = g.coeffs[i].compose(z.gens);
      RatFunc<F> rhs((i % 2 == 0) ? -e[i + 1] : e[i + 1]);
      o.pass = lhs == rhs;
      if (!o.pass) o.detail = "composed coefficient differs from the elementary symmetric form";
    } catch (const Error& err) {
      o.detail = err.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

template <class F>
SpecializedSextic<F> specialize(const GenericSextic<F>& g, std::span<const typename F::Elem> values) {
  if (values.size() != g.params.size()) {
    fail(ErrorCode::ArityMismatch, "expected " + std::to_string(g.params.size()) + " parameter values");
  }
  SpecializedSextic<F> s{g.form, g.field, {}, {}};
  for (size_t i = 0; i < values.size(); ++i) s.params.emplace_back(g.params.name(i), values[i]);
  for (size_t i = 0; i < g.coeffs.size(); ++i) {
    const auto& c = g.coeffs[i];
    auto d = c.den().eval(values);
    if (d.is_zero()) fail(ErrorCode::PoleAtParameters, "denominator of a" + std::to_string(i + 1) + " vanishes");
    s.coeffs.push_back(c.num().eval(values) * d.inv());
  }
  return s;
}

#define INVFIELD_INSTANTIATE(F)                                                                \
  template struct GenericSextic<F>;                                                            \
  template GenericSextic<F> g1_sextic_full(const F&);                                          \
  template GenericSextic<F> generic_char2(const F&);                                           \
  template GenericSextic<F> generic_general(const F&);                                         \
  template std::vector<Obligation> verify_g1_identity(const F&);                               \
  template SpecializedSextic<F> specialize(const GenericSextic<F>&, std::span<const F::Elem>);

INVFIELD_INSTANTIATE(RationalField)
INVFIELD_INSTANTIATE(PrimeField)

}  // namespace invfield
