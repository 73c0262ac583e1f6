#include <sstream>

#include "capi/common.hpp"
#include "ratfield/parse.hpp"

using namespace invfield;
using invfield::capi::guarded;

namespace invfield::capi {

namespace {
thread_local std::string last_error;

uint32_t parse_modulus(std::string_view digits) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos || digits.size() > 10) {
    fail(ErrorCode::ParseError, "bad modulus '" + std::string(digits) + "'");
  }
  const unsigned long long p = std::stoull(std::string(digits));
  if (p > UINT32_MAX) fail(ErrorCode::InvalidArgument, "modulus too large");
  return static_cast<uint32_t>(p);
}
}  // namespace

void set_error(const std::string& message) { last_error = message; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ivf_status status_of(ErrorCode code) { return static_cast<ivf_status>(static_cast<int>(code) + 1); }

static_assert(static_cast<int>(ErrorCode::Internal) + 1 == IVF_E_INTERNAL);
static_assert(static_cast<int>(ErrorCode::CertificateFailure) + 1 == IVF_E_CERTIFICATE_FAILURE);

AnyField field_from_name(std::string_view name) {
  bool cyclo = false;
  constexpr std::string_view suffix = "(z3)";
  if (name.size() > suffix.size() && name.substr(name.size() - suffix.size()) == suffix) {
    cyclo = true;
    name.remove_suffix(suffix.size());
  }
  if (name == "Q") return cyclo ? AnyField(CycloQ{}) : AnyField(RationalField{});
  if (name.size() > 4 && name.substr(0, 3) == "GF(" && name.back() == ')') {
    PrimeField f(parse_modulus(name.substr(3, name.size() - 4)));
    return cyclo ? AnyField(CycloGF(f)) : AnyField(f);
  }
  fail(ErrorCode::ParseError, "unknown field '" + std::string(name) + "'");
}

AnyField plain_field(unsigned characteristic) {
  if (characteristic == 0) return RationalField{};
  return PrimeField(characteristic);
}

}  // namespace invfield::capi

using namespace invfield::capi;

namespace {

Ambient split_vars(const char* vars) {
  std::vector<std::string> names;
  std::stringstream ss(vars);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) fail(ErrorCode::ParseError, "empty variable name");
    names.push_back(item.substr(b, e - b + 1));
  }
  return Ambient(std::move(names));
}

template <class F>
std::string element_op(const F& f, std::string_view op, const char* a, const char* b) {
  using E = typename F::Elem;
  const E x = f.parse(a);
  auto rhs = [&] {
    if (!b) fail(ErrorCode::InvalidArgument, "binary operation needs a second operand");
    return f.parse(b);
  };
  E r;
  if (op == "add") r = x + rhs();
  else if (op == "sub") r = x - rhs();
  else if (op == "mul") r = x * rhs();
  else if (op == "div") {
    E y = rhs();
    if (y.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
    r = x * y.inv();
  } else if (op == "neg") r = -x;
  else if (op == "inv") {
    if (x.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    r = x.inv();
  } else if (op == "conj") {
    if constexpr (is_cyclo_field_v<F>) r = x.conjugate();
    else fail(ErrorCode::NeedsCycloField, "conjugation needs a field with z3");
  } else {
    fail(ErrorCode::InvalidArgument, "unknown operation '" + std::string(op) + "'");
  }
  return f.format(r);
}

template <class R>
const R& same_kind(const ivf_ratfunc* other) {
  const R* r = std::get_if<R>(&other->v);
  if (!r) fail(ErrorCode::AmbientMismatch, "rational functions over different fields");
  return *r;
}

}  // namespace

extern "C" {

const char* ivf_version(void) { return "1.0.0"; }

const char* ivf_status_name(ivf_status status) {
  if (status == IVF_OK) return "Ok";
  if (status == IVF_E_NULL_ARGUMENT) return "NullArgument";
  if (status > IVF_OK && status < IVF_E_NULL_ARGUMENT) return error_code_name(static_cast<ErrorCode>(status - 1));
  return "Unknown";
}

const char* ivf_last_error(void) { return invfield::capi::last_error.c_str(); }

void ivf_free_string(char* s) { std::free(s); }

ivf_status ivf_field_characteristic(const char* field, unsigned* out) {
  IVF_REQUIRE(field);
  IVF_REQUIRE(out);
  return guarded([&] { *out = std::visit([](const auto& f) { return f.characteristic(); }, field_from_name(field)); });
}

ivf_status ivf_element_op(const char* field, const char* op, const char* a, const char* b, char** out) {
  IVF_REQUIRE(field);
  IVF_REQUIRE(op);
  IVF_REQUIRE(a);
  IVF_REQUIRE(out);
  return guarded([&] {
    std::string r = std::visit([&](const auto& f) { return element_op(f, op, a, b); }, field_from_name(field));
    *out = dup_string(r);
  });
}

ivf_status ivf_ratfunc_parse(const char* field, const char* vars, const char* text, ivf_ratfunc** out) {
  IVF_REQUIRE(field);
  IVF_REQUIRE(vars);
  IVF_REQUIRE(text);
  IVF_REQUIRE(out);
  return guarded([&] {
    Ambient amb = split_vars(vars);
    *out = std::visit([&](const auto& f) { return new ivf_ratfunc{parse_ratfunc(f, amb, text)}; }, field_from_name(field));
  });
}

ivf_status ivf_ratfunc_from_json(const char* field, const char* document, ivf_ratfunc** out) {
  IVF_REQUIRE(document);
  IVF_REQUIRE(out);
  return guarded([&] {
    io::json j = io::json::parse(document);
    std::string name = field ? field : j.value("field", std::string("Q"));
    *out = std::visit(
        [&](const auto& f) {
          // A bare polynomial document has "terms" instead of num/den.
          if (j.contains("terms")) return new ivf_ratfunc{RatFunc(io::poly_from_json(f, j))};
          return new ivf_ratfunc{io::ratfunc_from_json(f, j)};
        },
        field_from_name(name));
  });
}

void ivf_ratfunc_free(ivf_ratfunc* r) { delete r; }

ivf_status ivf_ratfunc_to_string(const ivf_ratfunc* r, char** out) {
  IVF_REQUIRE(r);
  IVF_REQUIRE(out);
  return guarded([&] { *out = dup_string(std::visit([](const auto& x) { return x.to_string(); }, r->v)); });
}

ivf_status ivf_ratfunc_to_json(const ivf_ratfunc* r, char** out) {
  IVF_REQUIRE(r);
  IVF_REQUIRE(out);
  return guarded([&] { *out = dup_json(std::visit([](const auto& x) { return io::to_json(x); }, r->v)); });
}

ivf_status ivf_ratfunc_arith(const ivf_ratfunc* a, char op, const ivf_ratfunc* b, ivf_ratfunc** out) {
  IVF_REQUIRE(a);
  IVF_REQUIRE(b);
  IVF_REQUIRE(out);
  return guarded([&] {
    *out = std::visit(
        [&](const auto& x) {
          using R = std::decay_t<decltype(x)>;
          const R& y = same_kind<R>(b);
          switch (op) {
            case '+': return new ivf_ratfunc{x + y};
            case '-': return new ivf_ratfunc{x - y};
            case '*': return new ivf_ratfunc{x * y};
            case '/': return new ivf_ratfunc{x / y};
          }
          fail(ErrorCode::InvalidArgument, std::string("unknown operator '") + op + "'");
        },
        a->v);
  });
}

ivf_status ivf_ratfunc_apply_perm(const ivf_ratfunc* r, const char* cycles, ivf_ratfunc** out) {
  IVF_REQUIRE(r);
  IVF_REQUIRE(cycles);
  IVF_REQUIRE(out);
  return guarded([&] {
    *out = std::visit(
        [&](const auto& x) {
          const Perm s = Perm::parse(x.ambient().size(), cycles);
          const auto img = s.images();
          return new ivf_ratfunc{x.apply_perm(img)};
        },
        r->v);
  });
}

ivf_status ivf_ratfunc_equal(const ivf_ratfunc* a, const ivf_ratfunc* b, int* out) {
  IVF_REQUIRE(a);
  IVF_REQUIRE(b);
  IVF_REQUIRE(out);
  return guarded([&] {
    *out = std::visit(
        [&](const auto& x) {
          using R = std::decay_t<decltype(x)>;
          const R* y = std::get_if<R>(&b->v);
          return y && x.ambient() == y->ambient() && x == *y ? 1 : 0;
        },
        a->v);
  });
}

ivf_status ivf_ratfunc_eval(const ivf_ratfunc* r, const char* const* point, size_t n, char** out) {
  IVF_REQUIRE(r);
  IVF_REQUIRE(out);
  if (n > 0) IVF_REQUIRE(point);
  return guarded([&] {
    *out = dup_string(std::visit(
        [&](const auto& x) {
          if (n != x.ambient().size()) fail(ErrorCode::ArityMismatch, "point has the wrong number of coordinates");
          std::vector<typename std::decay_t<decltype(x.field())>::Elem> pt;
          for (size_t i = 0; i < n; ++i) pt.push_back(x.field().parse(point[i]));
          return x.field().format(x.eval(pt));
        },
        r->v));
  });
}

ivf_status ivf_catalog_json(char** out) {
  IVF_REQUIRE(out);
  return guarded([&] {
    const Catalog& c = catalog();
    io::json groups = io::json::array();
    for (const char* name : {"G1", "G2", "G3", "G4"}) {
      const Group& g = c.by_name(name);
      io::json gens = io::json::array();
      for (const auto& p : g.generators()) gens.push_back(p.to_string());
      groups.push_back({{"name", name},
                        {"order", g.order()},
                        {"generators", gens},
                        {"transitive", g.is_transitive()},
                        {"census", io::census_json(g.cycle_census())}});
    }
    io::json perms = {{"sigma1", c.sigma1.to_string()}, {"sigma2", c.sigma2.to_string()},
                      {"tau", c.tau.to_string()},       {"lambda", c.lambda.to_string()},
                      {"lambda_prime", c.lambda_prime.to_string()}};
    *out = dup_json({{"degree", 6}, {"permutations", perms}, {"groups", groups}});
  });
}

ivf_status ivf_group_order(const char* group, uint64_t* out) {
  IVF_REQUIRE(group);
  IVF_REQUIRE(out);
  return guarded([&] { *out = catalog().by_name(group).order(); });
}

ivf_status ivf_group_census_json(const char* group, char** out) {
  IVF_REQUIRE(group);
  IVF_REQUIRE(out);
  return guarded([&] { *out = dup_json(io::census_json(catalog().by_name(group).cycle_census())); });
}

ivf_status ivf_group_contains(const char* group, const char* cycles, int* out) {
  IVF_REQUIRE(group);
  IVF_REQUIRE(cycles);
  IVF_REQUIRE(out);
  return guarded([&] {
    const Group& g = catalog().by_name(group);
    *out = g.contains(Perm::parse(g.degree(), cycles)) ? 1 : 0;
  });
}

ivf_status ivf_perm_order(unsigned degree, const char* cycles, unsigned* out) {
  IVF_REQUIRE(cycles);
  IVF_REQUIRE(out);
  return guarded([&] { *out = Perm::parse(degree, cycles).order(); });
}

ivf_status ivf_perm_compose(unsigned degree, const char* a, const char* b, char** out) {
  IVF_REQUIRE(a);
  IVF_REQUIRE(b);
  IVF_REQUIRE(out);
  return guarded([&] { *out = dup_string((Perm::parse(degree, a) * Perm::parse(degree, b)).to_string()); });
}

}  // extern "C"
