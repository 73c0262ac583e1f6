#include <algorithm>
#include <cctype>
#include <vector>

#include "algebra/fields.hpp"

namespace invfield {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool valid_integer(const std::string& s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class parse_integer(std::string s) {
  if (!valid_integer(s)) fail(ErrorCode::ParseError, "not an integer: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s);
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of 0");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by 0");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const { return v_.get_str(); }

Rational Rational::parse(std::string_view text) {
  std::string s = strip(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  mpz_class num = parse_integer(s.substr(0, slash));
  mpz_class den = parse_integer(s.substr(slash + 1));
  return Rational(num, den);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Zp Zp::inv() const {
  if (r_ == 0) fail(ErrorCode::DivisionByZero, "inverse of 0 mod " + std::to_string(p_));
  // extended Euclid on (r, p)
  int64_t t = 0, new_t = 1;
  int64_t r = p_, new_r = r_;
  while (new_r != 0) {
    int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p_;
  return Zp(static_cast<uint64_t>(t), p_);
}

Zp Zp::pow(uint64_t e) const { return Zp(powmod(r_, e, p_), p_); }

std::string Zp::to_string() const {
  return std::to_string(r_) + " mod " + std::to_string(p_);
}

Rational RationalField::parse(std::string_view text) const { return Rational::parse(text); }

PrimeField::PrimeField(uint32_t prime) : p(prime) {
  if (!is_prime_u64(prime)) fail(ErrorCode::InvalidArgument, std::to_string(prime) + " is not prime");
}

Zp PrimeField::from_rational(const Rational& r) const {
  mpz_class n = r.numerator() % p;
  mpz_class d = r.denominator() % p;
  if (d == 0) fail(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
  if (n < 0) n += p;
  return Zp(n.get_ui(), p) / Zp(d.get_ui(), p);
}

Zp PrimeField::parse(std::string_view text) const {
  std::string s = strip(text);
  auto pos = s.find("mod");
  if (pos != std::string::npos) {
    mpz_class mod = parse_integer(s.substr(pos + 3));
    if (mod != p) fail(ErrorCode::ParseError, "modulus mismatch in '" + s + "'");
    s = s.substr(0, pos);
  }
  return from_rational(Rational::parse(s));
}

namespace detail {

std::string format_cyclo(const std::string& a, const std::string& b, bool b_negative,
                         const std::string& b_abs) {
  auto zterm = [](const std::string& c) { return c == "1" ? std::string("z3") : c + "*z3"; };
  if (a == "0") {
    if (b_negative) return b_abs == "1" ? "-z3" : "-" + zterm(b_abs);
    return zterm(b);
  }
  if (b_negative) return a + " - " + zterm(b_abs);
  return a + " + " + zterm(b);
}

void split_cyclo(std::string_view text, std::string& a, std::string& b) {
  std::string s = strip(text);
  if (s.empty()) fail(ErrorCode::ParseError, "empty field element");
  if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<std::string> terms;
  std::string cur;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if ((c == '+' || c == '-') && i > 0 && s[i - 1] != '/' && s[i - 1] != '*') {
      terms.push_back(cur);
      cur.clear();
    }
    cur.push_back(c);
  }
  terms.push_back(cur);
  a = "0";
  b = "0";
  bool seen_a = false, seen_b = false;
  for (std::string t : terms) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    auto z = t.find("z3");
    if (z == std::string::npos) {
      if (seen_a) fail(ErrorCode::ParseError, "repeated constant term in '" + s + "'");
      a = t;
      seen_a = true;
      continue;
    }
    if (seen_b) fail(ErrorCode::ParseError, "repeated z3 term in '" + s + "'");
    if (z + 2 != t.size()) fail(ErrorCode::ParseError, "malformed z3 term in '" + s + "'");
    std::string c = t.substr(0, z);
    if (!c.empty() && c.back() == '*') c.pop_back();
    if (c.empty()) c = "1";
    if (c == "-") c = "-1";
    b = c;
    seen_b = true;
  }
}

}  // namespace detail

}  // namespace invfield
