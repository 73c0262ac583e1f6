#include "permgrp/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "algebra/error.hpp"

namespace invfield {

std::string cycle_type_string(const CycleType& ct) {
  std::string s = "[";
  for (size_t i = 0; i < ct.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ct[i]);
  }
  return s + "]";
}

Perm::Perm(std::vector<uint8_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) fail(ErrorCode::InvalidArgument, "images do not form a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(size_t n) {
  std::vector<uint8_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(size_t n, const std::vector<std::vector<unsigned>>& cycles) {
  if (n > 255) fail(ErrorCode::InvalidArgument, "permutation degree too large");
  std::vector<uint8_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      unsigned a = c[i];
      if (a < 1 || a > n) fail(ErrorCode::InvalidArgument, "cycle point " + std::to_string(a) + " out of range");
      if (used[a - 1]) fail(ErrorCode::InvalidArgument, "cycles are not disjoint");
      used[a - 1] = true;
      img[a - 1] = static_cast<uint8_t>(c[(i + 1) % c.size()] - 1);
    }
  }
  return Perm(std::move(img));
}

Perm Perm::parse(size_t n, std::string_view text) {
  std::vector<std::vector<unsigned>> cycles;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorCode::ParseError, "expected '(' in '" + std::string(text) + "'");
    ++i;
    std::string body;
    while (i < text.size() && text[i] != ')') body.push_back(text[i++]);
    if (i == text.size()) fail(ErrorCode::ParseError, "unclosed cycle in '" + std::string(text) + "'");
    ++i;
    std::vector<unsigned> cyc;
    if (body.find(',') != std::string::npos || body.find(' ') != std::string::npos) {
      std::string cur;
      for (char c : body + ",") {
        if (c == ',' || c == ' ') {
          if (!cur.empty()) cyc.push_back(static_cast<unsigned>(std::stoul(cur)));
          cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          cur.push_back(c);
        } else {
          fail(ErrorCode::ParseError, "bad cycle '" + body + "'");
        }
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail(ErrorCode::ParseError, "bad cycle '" + body + "'");
        cyc.push_back(static_cast<unsigned>(c - '0'));
      }
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip();
  }
  return from_cycles(n, cycles);
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) fail(ErrorCode::DegreeMismatch, "composing permutations of different degree");
  std::vector<uint8_t> img(a.degree());
  for (size_t i = 0; i < img.size(); ++i) img[i] = a.img_[b.img_[i]];
  Perm r;
  r.img_ = std::move(img);
  return r;
}

Perm Perm::inverse() const {
  std::vector<uint8_t> inv(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<uint8_t>(i);
  Perm r;
  r.img_ = std::move(inv);
  return r;
}

CycleType Perm::cycle_type() const {
  CycleType ct;
  std::vector<bool> seen(img_.size(), false);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ct.push_back(len);
  }
  std::sort(ct.rbegin(), ct.rend());
  return ct;
}

unsigned Perm::order() const {
  unsigned o = 1;
  for (unsigned len : cycle_type()) o = std::lcm(o, len);
  return o;
}

bool Perm::is_even() const {
  size_t transpositions = 0;
  for (unsigned len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

std::string Perm::to_string() const {
  const bool sep = img_.size() >= 10;
  std::string s;
  std::vector<bool> seen(img_.size(), false);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += "(";
    bool first = true;
    for (size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (sep && !first) s += ",";
      s += std::to_string(j + 1);
      first = false;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Group::Group(size_t degree, std::vector<Perm> generators, std::string name)
    : degree_(degree), gens_(std::move(generators)), name_(std::move(name)), cache_(std::make_shared<Cache>()) {
  if (degree_ > kMaxPermDegree) {
    fail(ErrorCode::InvalidArgument, "group degree above " + std::to_string(kMaxPermDegree));
  }
  for (const auto& g : gens_) {
    if (g.degree() != degree_) fail(ErrorCode::DegreeMismatch, "generator " + g.to_string() + " has wrong degree");
  }
}

const std::vector<Perm>& Group::elements() const {
  if (!cache_) fail(ErrorCode::InvalidArgument, "empty group handle");
  std::call_once(cache_->once, [this] {
    std::set<Perm> seen{Perm::identity(degree_)};
    std::deque<Perm> queue{Perm::identity(degree_)};
    while (!queue.empty()) {
      Perm cur = queue.front();
      queue.pop_front();
      for (const auto& g : gens_) {
        Perm next = g * cur;
        if (seen.insert(next).second) {
          if (seen.size() > kClosureBudget) {
            fail(ErrorCode::ClosureBudgetExceeded, "closure exceeds " + std::to_string(kClosureBudget) + " elements");
          }
          queue.push_back(std::move(next));
        }
      }
    }
    cache_->elements.assign(seen.begin(), seen.end());
  });
  return cache_->elements;
}

bool Group::contains(const Perm& p) const {
  const auto& el = elements();
  return std::binary_search(el.begin(), el.end(), p);
}

Group Group::intersect(const Group& other) const {
  if (degree_ != other.degree_) fail(ErrorCode::DegreeMismatch, "intersecting groups of different degree");
  std::vector<Perm> common;
  for (const auto& p : elements()) {
    if (other.contains(p)) common.push_back(p);
  }
  // Keep a generating subset: add an element only if it enlarges the span.
  std::vector<Perm> gens;
  std::set<Perm> span{Perm::identity(degree_)};
  for (const auto& p : common) {
    if (span.count(p)) continue;
    gens.push_back(p);
    const Group sub(degree_, gens);
    span = std::set<Perm>(sub.elements().begin(), sub.elements().end());
  }
  std::string nm = name_.empty() || other.name_.empty() ? "" : name_ + "&" + other.name_;
  return Group(degree_, std::move(gens), nm);
}

bool Group::is_subgroup_of(const Group& other) const {
  if (degree_ != other.degree_) fail(ErrorCode::DegreeMismatch, "comparing groups of different degree");
  for (const auto& g : gens_) {
    if (!other.contains(g)) return false;
  }
  return true;
}

bool Group::is_transitive() const {
  if (degree_ == 0) return true;
  std::vector<bool> seen(degree_, false);
  std::vector<size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    size_t x = stack.back();
    stack.pop_back();
    for (const auto& g : gens_) {
      size_t y = g(x);
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool Group::is_normal_in(const Group& other) const {
  if (!is_subgroup_of(other)) return false;
  for (const auto& g : other.generators()) {
    Perm gi = g.inverse();
    for (const auto& h : gens_) {
      if (!contains(g * h * gi)) return false;
    }
  }
  return true;
}

std::map<CycleType, Rational> Group::cycle_census() const {
  std::map<CycleType, long> counts;
  for (const auto& p : elements()) ++counts[p.cycle_type()];
  std::map<CycleType, Rational> out;
  const long n = static_cast<long>(order());
  for (const auto& [ct, c] : counts) out.emplace(ct, Rational(mpz_class(c), mpz_class(n)));
  return out;
}

const Group& Catalog::by_name(std::string_view name) const {
  if (name == "G1") return G1;
  if (name == "G2") return G2;
  if (name == "G3") return G3;
  if (name == "G4") return G4;
  if (name == "A6") return A6;
  if (name == "S6") return S6;
  if (name == "C3xC3") return C3xC3;
  fail(ErrorCode::InvalidArgument, "unknown group '" + std::string(name) + "'");
}

const Catalog& catalog() {
  static const Catalog cat = [] {
    Catalog c;
    c.sigma1 = Perm::parse(6, "(123)");
    c.sigma2 = Perm::parse(6, "(456)");
    c.tau = Perm::parse(6, "(14)(25)(36)");
    c.lambda = Perm::parse(6, "(1425)(36)");
    c.lambda_prime = Perm::parse(6, "(1542)(36)");
    const Perm t12 = Perm::parse(6, "(12)");
    c.G1 = Group(6, {c.sigma1, c.tau, t12}, "G1");
    c.G2 = Group(6, {c.sigma1, c.lambda}, "G2");
    c.G3 = Group(6, {c.sigma1, c.tau, c.lambda * c.lambda}, "G3");
    c.G4 = Group(6, {c.sigma1, c.tau}, "G4");
    c.A6 = Group(6, {c.sigma1, Perm::parse(6, "(23456)")}, "A6");
    c.S6 = Group(6, {t12, Perm::parse(6, "(123456)")}, "S6");
    c.C3xC3 = Group(6, {c.sigma1, c.sigma2}, "C3xC3");
    return c;
  }();
  return cat;
}

}  // namespace invfield
