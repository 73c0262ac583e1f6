#pragma once

#include <cstdlib>
#include <cstring>
#include <string>
#include <string_view>
#include <variant>

#include "invfield/invfield.h"
#include "io/serialize.hpp"
#include "towers/towers.hpp"

namespace invfield::capi {

using AnyField = std::variant<RationalField, PrimeField, CycloQ, CycloGF>;

/// "Q", "GF(p)", "Q(z3)", "GF(p)(z3)".
AnyField field_from_name(std::string_view name);
/// Q for 0, GF(p) otherwise.
AnyField plain_field(unsigned characteristic);

void set_error(const std::string& message);

char* dup_string(const std::string& s);
inline char* dup_json(const io::json& j) { return dup_string(j.dump()); }

ivf_status status_of(ErrorCode code);

/// Runs fn, converting exceptions into a status and a last-error message.
template <class Fn>
ivf_status guarded(Fn&& fn) {
  try {
    fn();
    set_error("");
    return IVF_OK;
  } catch (const Error& e) {
    set_error(e.what());
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    set_error(std::string("ParseError: ") + e.what());
    return IVF_E_PARSE;
  } catch (const std::exception& e) {
    set_error(std::string("Internal: ") + e.what());
    return IVF_E_INTERNAL;
  }
}

#define IVF_REQUIRE(ptr)                                              \
  do {                                                                \
    if (!(ptr)) {                                                     \
      ::invfield::capi::set_error("NullArgument: " #ptr " is NULL"); \
      return IVF_E_NULL_ARGUMENT;                                     \
    }                                                                 \
  } while (0)

}  // namespace invfield::capi

struct ivf_ratfunc {
  std::variant<invfield::RatFunc<invfield::RationalField>, invfield::RatFunc<invfield::PrimeField>,
               invfield::RatFunc<invfield::CycloQ>, invfield::RatFunc<invfield::CycloGF>>
      v;
};

struct ivf_tower {
  std::variant<invfield::Tower<invfield::RationalField>, invfield::Tower<invfield::PrimeField>,
               invfield::Tower<invfield::CycloQ>, invfield::Tower<invfield::CycloGF>>
      v;
  std::string group;
  std::string path;
};
