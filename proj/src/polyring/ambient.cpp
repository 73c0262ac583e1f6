#include "polyring/ambient.hpp"

#include <algorithm>

#include "algebra/error.hpp"
#include "polyring/monomial.hpp"

namespace invfield {

Ambient::Ambient() : names_(std::make_shared<const std::vector<std::string>>()) {}

Ambient::Ambient(std::vector<std::string> names) {
  if (names.size() > kMaxVars) {
    fail(ErrorCode::InvalidArgument, "at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) fail(ErrorCode::InvalidArgument, "empty variable name");
    for (size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) fail(ErrorCode::InvalidArgument, "duplicate variable name " + names[i]);
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Ambient Ambient::numbered(std::string_view prefix, size_t n) {
  std::vector<std::string> names;
  for (size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return Ambient(std::move(names));
}

std::optional<size_t> Ambient::index_of(std::string_view name) const {
  for (size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

size_t Ambient::require(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) fail(ErrorCode::UnknownVariable, "variable '" + std::string(name) + "' not in ambient");
  return *idx;
}

Ambient Ambient::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = *names_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Ambient(std::move(all));
}

std::string format_monomial(const Monomial& m, const Ambient& vars) {
  std::string s;
  for (size_t i = 0; i < vars.size(); ++i) {
    uint32_t e = m[i];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += vars.name(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace invfield
