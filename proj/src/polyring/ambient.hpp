#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invfield {

inline constexpr size_t kMaxVars = 16;

/// Ordered, immutable list of variable names shared between polynomials.
/// Copies are cheap; equality compares names.
class Ambient {
 public:
  Ambient();
  explicit Ambient(std::vector<std::string> names);
  Ambient(std::initializer_list<std::string> names)
      : Ambient(std::vector<std::string>(names)) {}

  /// "x1".."xn" style list: prefix + 1..n.
  static Ambient numbered(std::string_view prefix, size_t n);

  size_t size() const { return names_->size(); }
  const std::string& name(size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<size_t> index_of(std::string_view name) const;
  /// Index of name or UnknownVariable.
  size_t require(std::string_view name) const;

  /// This list followed by extra names (duplicates rejected).
  Ambient extended(const std::vector<std::string>& extra) const;

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace invfield
