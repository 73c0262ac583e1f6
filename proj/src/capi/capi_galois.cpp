#include "capi/common.hpp"
#include "galois/galois.hpp"
#include "genpoly/genpoly.hpp"

using namespace invfield;
using namespace invfield::capi;

struct ivf_sextic {
  std::variant<GenericSextic<RationalField>, GenericSextic<PrimeField>> v;
};

namespace {

void require_g1(const std::string& group) {
  if (group == "G1") return;
  if (group == "G2" || group == "G3" || group == "G4") {
    fail(ErrorCode::NotProvided, "generic polynomial for " + group +
                                     " not provided: no usable closed form is known, only G1 is available");
  }
  fail(ErrorCode::InvalidArgument, "unknown group '" + group + "'");
}

io::json census_report(const FrobeniusCensus& c, const char* group) {
  io::json j = io::to_json(c);
  if (!group) {
    j["group"] = nullptr;
    j["tv"] = nullptr;
    j["containment"] = nullptr;
    return j;
  }
  const Group& g = catalog().by_name(group);
  const CensusComparison cmp = compare_census(c, g.cycle_census());
  io::json foreign = io::json::array();
  for (const auto& ct : cmp.foreign) foreign.push_back(cycle_type_string(ct));
  j["group"] = group;
  j["tv"] = cmp.tv;
  j["containment"] = cmp.containment;
  j["foreign"] = foreign;
  j["theoretical"] = io::census_json(g.cycle_census());
  return j;
}

/// Monic coefficients c_{n-1}..c_0 from c_n..c_0.
std::vector<Rational> monic_lower(const std::vector<Rational>& full) {
  if (full.size() < 2) fail(ErrorCode::InvalidArgument, "polynomial must have degree at least 1");
  if (full[0].is_zero()) fail(ErrorCode::InvalidArgument, "leading coefficient is zero");
  std::vector<Rational> lower;
  for (size_t i = 1; i < full.size(); ++i) lower.push_back(full[i] / full[0]);
  return lower;
}

io::json frobenius(const std::vector<Rational>& full, uint32_t pmin, uint32_t pmax, const char* group) {
  if (pmax < 2 || pmin > pmax) fail(ErrorCode::InvalidArgument, "empty prime range");
  const std::vector<Rational> lower = monic_lower(full);
  if (group && catalog().by_name(group).degree() != lower.size()) {
    fail(ErrorCode::DegreeMismatch, "polynomial degree differs from the group degree");
  }
  io::json j = census_report(sample_census(lower, pmin, pmax), group);
  j["degree"] = lower.size();
  j["pmin"] = pmin;
  j["pmax"] = pmax;
  return j;
}

}  // namespace

extern "C" {

ivf_status ivf_sextic_new(const char* group, const char* form, unsigned characteristic, ivf_sextic** out) {
  IVF_REQUIRE(group);
  IVF_REQUIRE(form);
  IVF_REQUIRE(out);
  return guarded([&] {
    require_g1(group);
    const SexticForm sf = parse_sextic_form(form);
    auto make = [&](const auto& f) {
      switch (sf) {
        case SexticForm::Full: return g1_sextic_full(f);
        case SexticForm::Char2: return generic_char2(f);
        case SexticForm::General: return generic_general(f);
      }
      fail(ErrorCode::Internal, "unhandled form");
    };
    if (characteristic == 0) *out = new ivf_sextic{make(RationalField{})};
    else *out = new ivf_sextic{make(PrimeField(characteristic))};
  });
}

void ivf_sextic_free(ivf_sextic* s) { delete s; }

ivf_status ivf_sextic_to_string(const ivf_sextic* s, char** out) {
  IVF_REQUIRE(s);
  IVF_REQUIRE(out);
  return guarded([&] { *out = dup_string(std::visit([](const auto& g) { return g.to_string(); }, s->v)); });
}

ivf_status ivf_sextic_to_json(const ivf_sextic* s, char** out) {
  IVF_REQUIRE(s);
  IVF_REQUIRE(out);
  return guarded([&] { *out = dup_json(std::visit([](const auto& g) { return io::to_json(g); }, s->v)); });
}

ivf_status ivf_sextic_param_count(const ivf_sextic* s, size_t* out) {
  IVF_REQUIRE(s);
  IVF_REQUIRE(out);
  return guarded([&] { *out = std::visit([](const auto& g) { return g.params.size(); }, s->v); });
}

ivf_status ivf_sextic_verify_identity(const ivf_sextic* s, int* pass, char** report_json) {
  IVF_REQUIRE(s);
  IVF_REQUIRE(pass);
  return guarded([&] {
    std::visit(
        [&](const auto& g) {
          if (g.form != SexticForm::Full) {
            fail(ErrorCode::InvalidArgument, "the identity check applies to the full form");
          }
          std::vector<Obligation> obs = verify_g1_identity(g.field);
          bool ok = true;
          io::json checks = io::json::array();
          for (const auto& o : obs) {
            ok = ok && o.pass;
            checks.push_back(io::to_json(o));
          }
          *pass = ok ? 1 : 0;
          if (report_json) *report_json = dup_json({{"field", g.field.name()}, {"pass", ok}, {"checks", checks}});
        },
        s->v);
  });
}

ivf_status ivf_sextic_specialize(const ivf_sextic* s, const char* const* values, size_t n, char** out_json) {
  IVF_REQUIRE(s);
  IVF_REQUIRE(out_json);
  if (n > 0) IVF_REQUIRE(values);
  return guarded([&] {
    std::visit(
        [&](const auto& g) {
          std::vector<typename std::decay_t<decltype(g.field)>::Elem> vals;
          for (size_t i = 0; i < n; ++i) vals.push_back(g.field.parse(values[i]));
          *out_json = dup_json(io::to_json(specialize(g, std::span<const typename decltype(vals)::value_type>(vals))));
        },
        s->v);
  });
}

ivf_status ivf_frobenius_census(const char* const* coeffs, size_t n, uint32_t pmin, uint32_t pmax, const char* group,
                                char** out_json) {
  IVF_REQUIRE(coeffs);
  IVF_REQUIRE(out_json);
  return guarded([&] {
    std::vector<Rational> full;
    for (size_t i = 0; i < n; ++i) full.push_back(Rational::parse(coeffs[i]));
    *out_json = dup_json(frobenius(full, pmin, pmax, group));
  });
}

ivf_status ivf_frobenius_census_json(const char* document, uint32_t pmin, uint32_t pmax, const char* group,
                                     char** out_json) {
  IVF_REQUIRE(document);
  IVF_REQUIRE(out_json);
  return guarded([&] {
    const io::json j = io::json::parse(document);
    std::vector<Rational> full;
    auto rational = [](const io::json& c) {
      return c.is_number_integer() ? Rational(c.get<long>()) : Rational::parse(c.get<std::string>());
    };
    if (j.contains("coeffs")) {
      full.push_back(Rational(1));
      for (const auto& c : j["coeffs"]) full.push_back(rational(c));
    } else if (j.contains("terms")) {
      const Poly<RationalField> p = io::poly_from_json(RationalField{}, j);
      if (p.ambient().size() != 1) fail(ErrorCode::ArityMismatch, "expected a polynomial in one variable");
      if (p.is_zero()) fail(ErrorCode::InvalidArgument, "zero polynomial");
      const size_t deg = p.total_degree();
      full.assign(deg + 1, Rational());
      for (const auto& t : p.terms()) full[deg - t.mono[0]] = t.coef;
    } else {
      fail(ErrorCode::ParseError, "expected \"coeffs\" or \"terms\"");
    }
    *out_json = dup_json(frobenius(full, pmin, pmax, group));
  });
}

ivf_status ivf_char2_census(const uint64_t params[5], unsigned max_degree, const char* group, char** out_json) {
  IVF_REQUIRE(params);
  IVF_REQUIRE(out_json);
  return guarded([&] {
    std::vector<uint64_t> ps(params, params + 5);
    io::json j = census_report(char2_function_field_census(ps, max_degree), group);
    j["params"] = ps;
    j["max_degree"] = max_degree;
    *out_json = dup_json(j);
  });
}

ivf_status ivf_degree_pattern(uint32_t p, const uint32_t* coeffs, size_t n, unsigned* pattern, size_t cap,
                              size_t* len) {
  IVF_REQUIRE(coeffs);
  IVF_REQUIRE(len);
  return guarded([&] {
    if (!is_prime_u64(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    UniPoly u{p, std::vector<uint32_t>(coeffs, coeffs + n)};
    for (auto& c : u.coeffs) c %= p;
    const CycleType ct = distinct_degree_pattern(u);
    *len = ct.size();
    if (ct.size() > cap) fail(ErrorCode::InvalidArgument, "pattern buffer too small");
    if (!pattern && !ct.empty()) fail(ErrorCode::InvalidArgument, "pattern buffer is NULL");
    for (size_t i = 0; i < ct.size(); ++i) pattern[i] = ct[i];
  });
}

}  // extern "C"
