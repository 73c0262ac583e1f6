#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "ratfield/ratfunc.hpp"

namespace invfield {

namespace detail {

template <class F>
class ExprParser {
 public:
  using Env = std::map<std::string, RatFunc<F>, std::less<>>;

  ExprParser(const F& field, const Ambient& vars, std::string_view text, const Env* env)
      : field_(field), vars_(vars), s_(text), env_(env) {}

  RatFunc<F> parse() {
    RatFunc<F> r = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  using R = RatFunc<F>;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  R expr() {
    R acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  R term() {
    R acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        R d = unary();
        if (d.is_zero()) error("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  R unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  R power() {
    R base = atom();
    if (accept('^')) {
      skip();
      bool neg = accept('-');
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected integer exponent");
      long e = std::stol(std::string(s_.substr(start, pos_ - start)));
      if (neg && base.is_zero()) error("zero to a negative power");
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  R atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      R r = expr();
      if (!accept(')')) error("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(std::string(s_.substr(start, pos_ - start)));
      return R::constant(field_, vars_, field_.from_rational(Rational(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(s_.substr(start, pos_ - start));
      if (auto idx = vars_.index_of(name)) return R::variable(field_, vars_, *idx);
      if (env_) {
        if (auto it = env_->find(name); it != env_->end()) return it->second;
      }
      if constexpr (is_cyclo_field_v<F>) {
        if (name == "z3") return R::constant(field_, vars_, field_.zeta());
      }
      fail(ErrorCode::UnknownVariable, "'" + name + "' is not in the ambient");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const F& field_;
  const Ambient& vars_;
  std::string_view s_;
  const Env* env_;
  size_t pos_ = 0;
};

}  // namespace detail

/// Named sub-expressions available to the parser besides ambient variables.
template <class F>
using ParseEnv = typename detail::ExprParser<F>::Env;

template <class F>
RatFunc<F> parse_ratfunc(const F& field, const Ambient& vars, std::string_view text,
                         const ParseEnv<F>* env = nullptr) {
  return detail::ExprParser<F>(field, vars, text, env).parse();
}

/// Parses a polynomial; NotDivisible if the text denotes a proper fraction.
template <class F>
Poly<F> parse_poly(const F& field, const Ambient& vars, std::string_view text) {
  RatFunc<F> r = parse_ratfunc(field, vars, text);
  if (!r.is_polynomial()) fail(ErrorCode::ParseError, "expected a polynomial: '" + std::string(text) + "'");
  return r.num();
}

}  // namespace invfield
