// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "odisc/rational.hpp"

#include "odisc/error.hpp"

namespace odisc {

namespace {
bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}
}  // namespace

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  require(is_integer_literal(num) && is_integer_literal(den),
          "not a rational number: '" + s + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num);
  Integer d(den[0] == '+' ? den.substr(1) : den);
  require(d != 0, "zero denominator in '" + s + "'");
  return Rational(n, d);
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer lcm_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& r : v) {
    Integer d = denominator(r);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  return l;
}

unsigned p_valuation(Integer n, std::uint32_t p) {
  require(n != 0, "p_valuation: zero");
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace odisc
