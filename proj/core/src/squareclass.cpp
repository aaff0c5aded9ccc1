// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "odisc/squareclass.hpp"

#include <optional>
#include <tuple>

#include "odisc/error.hpp"

namespace odisc {

namespace {

// Consecutive primes without a new independent row before giving up.
constexpr int kCertificatePatience = 64;

// Largest s with s^2 | n, n > 0. Trial division, then a perfect-square check
// on the cofactor.
Integer square_part(Integer n) {
  Integer s = 1;
  for (std::uint32_t d = 2; Integer(d) * d <= n && d < 100000; ++d) {
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    for (unsigned i = 0; i < k / 2; ++i) s *= d;
  }
  Integer r = boost::multiprecision::sqrt(n);
  if (n > 1 && r * r == n) s *= r;
  return s;
}

// Scales a by a rational square so that its display coordinates are coprime
// integers times a squarefree integer.
NFElem normalize_content(const NFElem& a, NFElem& factor) {
  auto c = a.display_coords();
  Integer g = 0, l = 1;
  for (const auto& x : c) {
    g = gcd(g, numerator(x));
    l = lcm(l, denominator(x));
  }
  if (g == 0) return a;
  const Integer sn = square_part(abs(g)), sd = square_part(l);
  const Integer dr = l / (sd * sd);
  const Rational m(sd * dr, sn);
  if (m == 1) return a;
  factor = factor.scaled(m);
  return a.scaled(m * m);
}

int sign_pattern(const NFElem& a) {
  const NumberField& k = a.field();
  if (!k.totally_real()) return 0;
  if (is_totally_positive(a)) return 1;
  if (is_totally_positive(-a)) return -1;
  return 0;
}

struct Key {
  Rational primary;
  Rational t2;
  std::vector<Rational> coords;
  bool operator<(const Key& o) const {
    return std::tie(primary, t2, coords) < std::tie(o.primary, o.t2, o.coords);
  }
};

Key key_of(const NFElem& a, int sign) {
  Key k;
  k.coords = a.display_coords();
  k.t2 = (a * a).trace();
  k.primary = sign == 0 ? k.t2 : Rational(sign) * a.trace();
  return k;
}

}  // namespace

std::shared_ptr<const GeneratorList> GeneratorList::create(
    const NumberField& k, std::vector<std::string> names,
    std::vector<NFElem> generators) {
  require(names.size() == generators.size(),
          "generator list: names and elements differ in length");
  require(generators.size() <= 30, "generator list: at most 30 generators");
  std::shared_ptr<GeneratorList> g(new GeneratorList(k));
  Integer bad = k.index();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const NFElem& d = generators[i];
    require(d.field().same_as(k), "generator " + names[i] + ": wrong field");
    require(!d.is_zero(), "generator " + names[i] + " is zero");
    if (k.totally_real())
      require(is_totally_positive(d),
              "generator " + names[i] + " = " + d.to_string() +
                  " is not totally positive");
    Rational n = d.norm();
    bad *= numerator(n) * denominator(n);
    for (const auto& c : d.coeffs()) bad *= denominator(c);
  }
  g->names_ = std::move(names);
  g->gens_ = std::move(generators);

  const std::size_t t = g->gens_.size();
  std::vector<std::uint32_t> basis;  // reduced rows, keyed by lowest set bit
  int idle = 0;
  for (std::uint32_t p = 3; basis.size() < t; p += 2) {
    if (idle > kCertificatePatience)
      throw Error(ErrorKind::InvalidArgument,
                  "generator list over " + k.label() +
                      ": could not certify independence modulo squares "
                      "(rank " + std::to_string(basis.size()) + " of " +
                      std::to_string(t) + ")");
    if (!is_prime(p) || bad % p == 0) continue;
    ++idle;
    for (const auto& ideal : factor_prime(k, p)) {
      std::uint32_t row = 0;
      for (std::size_t i = 0; i < t; ++i)
        if (residue_symbol(ideal, g->gens_[i]).nonsquare) row |= 1u << i;
      for (auto b : basis)
        if (row & (b & -b)) row ^= b;
      if (row == 0) continue;
      for (auto& b : basis)
        if (b & (row & -row)) b ^= row;
      basis.push_back(row);
      idle = 0;
      g->certificate_.push_back(ideal);
      if (basis.size() == t) break;
    }
  }
  return g;
}

NFSquareClass::NFSquareClass(std::shared_ptr<const GeneratorList> gens,
                             std::uint64_t bits, int sign)
    : gens_(std::move(gens)), bits_(bits), sign_(sign) {
  require(sign == 1 || sign == -1, "square class: sign must be +1 or -1");
  require(gens_->size() >= 64 || (bits >> gens_->size()) == 0,
          "square class: exponent bits outside the generator list");
}

NFElem NFSquareClass::representative() const {
  NFElem r = gens_->field().from_int(sign_);
  for (std::size_t i = 0; i < gens_->size(); ++i)
    if (bits_ >> i & 1) r = r * gens_->at(i);
  return r;
}

NFElem NFSquareClass::canonical() const {
  return canonical_representative(representative()).value;
}

std::string NFSquareClass::to_string() const { return canonical().to_string(); }

std::string NFSquareClass::product_string() const {
  std::string s = sign_ < 0 ? "-1" : "";
  for (std::size_t i = 0; i < gens_->size(); ++i) {
    if (!(bits_ >> i & 1)) continue;
    if (!s.empty()) s += "*";
    s += gens_->name(i);
  }
  return s.empty() ? "1" : s;
}

NFSquareClass NFSquareClass::operator*(const NFSquareClass& o) const {
  require(gens_ == o.gens_, "square class product: different generator lists");
  return {gens_, bits_ ^ o.bits_, sign_ * o.sign_};
}

CanonicalForm canonical_representative(const NFElem& a) {
  require(!a.is_zero(), "canonical representative of zero");
  const NumberField& k = a.field();
  NFElem factor = k.from_int(1);
  NFElem cur = normalize_content(a, factor);
  const int sign = sign_pattern(cur);
  const auto units = k.units();
  if (units.empty()) return {cur, factor};

  std::vector<NFElem> steps, step_roots;
  for (const auto& u : units) {
    steps.push_back(u * u);
    step_roots.push_back(u);
    NFElem ui = u.inverse();
    steps.push_back(ui * ui);
    step_roots.push_back(ui);
  }
  auto metric = [&](const NFElem& e) {
    return sign == 0 ? (e * e).trace() : Rational(sign) * e.trace();
  };

  // Descent on the convex metric, then an exhaustive box around the minimum.
  Rational best_metric = metric(cur);
  for (int iter = 0; iter < 10000; ++iter) {
    bool moved = false;
    for (std::size_t s = 0; s < steps.size(); ++s) {
      NFElem next = cur * steps[s];
      Rational m = metric(next);
      if (m < best_metric) {
        best_metric = m;
        cur = next;
        factor = factor * step_roots[s];
        moved = true;
      }
    }
    if (!moved) break;
  }

  const int radius = units.size() <= 2 ? 3 : units.size() <= 4 ? 2 : 1;
  NFElem best = cur, best_factor = factor;
  std::optional<Key> best_key;

  std::vector<int> ex(units.size(), -radius);
  for (;;) {
    NFElem e = cur, f = factor;
    for (std::size_t i = 0; i < units.size(); ++i) {
      const std::size_t s = 2 * i + (ex[i] < 0 ? 1 : 0);
      for (int j = 0; j < std::abs(ex[i]); ++j) {
        e = e * steps[s];
        f = f * step_roots[s];
      }
    }
    e = normalize_content(e, f);
    Key kk = key_of(e, sign);
    if (!best_key || kk < *best_key) {
      best_key = std::move(kk);
      best = e;
      best_factor = f;
    }
    std::size_t i = 0;
    while (i < ex.size() && ex[i] == radius) ex[i++] = -radius;
    if (i == ex.size()) break;
    ++ex[i];
  }
  return {best, best_factor};
}

ResidueSymbol residue_symbol(const PrimeIdeal& ideal, const NFElem& a) {
  require(!ideal.is_dyadic(), "residue symbol at the dyadic ideal " + ideal.label());
  UnitResidue u = unit_residue(ideal, a);
  return {u.valuation % 2 != 0, !is_square(u.residue)};
}

}  // namespace odisc
