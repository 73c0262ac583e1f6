#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "algebra/rational.hpp"

namespace invfield {

/// Descending cycle lengths, fixed points included as 1s.
using CycleType = std::vector<unsigned>;

std::string cycle_type_string(const CycleType& ct);  // "[3,3]"

/// Permutation of {1..n}. Composition applies the right factor first:
/// (a * b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  /// images[i] is the image of point i+1, written 0-based.
  explicit Perm(std::vector<uint8_t> images);

  static Perm identity(size_t n);
  /// Cycles use 1-based points.
  static Perm from_cycles(size_t n, const std::vector<std::vector<unsigned>>& cycles);
  /// "(123)(45)" or, for degree >= 10, "(1,2,10)(4,5)".
  static Perm parse(size_t n, std::string_view text);

  size_t degree() const { return img_.size(); }
  /// 0-based image of 0-based point i.
  size_t operator()(size_t i) const { return img_[i]; }
  std::vector<size_t> images() const { return {img_.begin(), img_.end()}; }

  Perm inverse() const;
  unsigned order() const;
  CycleType cycle_type() const;
  bool is_even() const;
  bool is_identity() const;

  std::string to_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<uint8_t> img_;
};

inline constexpr size_t kMaxPermDegree = 12;
inline constexpr size_t kClosureBudget = 1000000;

/// Finitely generated permutation group; the element list is computed once
/// on first use and shared between copies.
class Group {
 public:
  Group() = default;
  Group(size_t degree, std::vector<Perm> generators, std::string name = "");

  size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::string& name() const { return name_; }

  /// Sorted lexicographically by image vector.
  const std::vector<Perm>& elements() const;
  size_t order() const { return elements().size(); }
  bool contains(const Perm& p) const;

  Group intersect(const Group& other) const;
  bool is_subgroup_of(const Group& other) const;
  bool is_transitive() const;
  bool is_normal_in(const Group& other) const;
  bool same_elements(const Group& other) const { return elements() == other.elements(); }

  /// Cycle type -> exact proportion of elements.
  std::map<CycleType, Rational> cycle_census() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Perm> elements;
  };

  size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::string name_;
  std::shared_ptr<Cache> cache_;
};

struct Catalog {
  Perm sigma1, sigma2, tau, lambda, lambda_prime;
  Group G1, G2, G3, G4, A6, S6, C3xC3;

  const Group& by_name(std::string_view name) const;
};

/// The transitive groups of degree 6 used throughout, with their generators.
const Catalog& catalog();

}  // namespace invfield
