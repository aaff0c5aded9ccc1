// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "local.hpp"

#include "odisc/budget.hpp"
#include "odisc/error.hpp"

namespace odisc::detail {

LocalRing::LocalRing(const std::vector<Integer>& f, const zp::Poly& h,
                     unsigned e, std::int64_t p, const FiniteField& residue,
                     unsigned precision)
    : p_(p),
      e_(e),
      f_(static_cast<unsigned>(h.size() - 1)),
      n_(e * static_cast<unsigned>(h.size() - 1)),
      n_prec_(precision),
      h_(h),
      residue_(residue) {
  pn_ = 1;
  for (unsigned i = 0; i < precision; ++i) pn_ *= p;

  zp::Poly fp = zp::reduce(f, p);
  zp::Poly he{1};
  for (unsigned i = 0; i < e; ++i) he = zp::mul(he, h, p);
  auto [g, r] = zp::divmod(fp, he, p);
  require(zp::is_zero(r), "local ring: factor^e does not divide the polynomial");
  if (g == zp::Poly{1}) {
    F_.clear();
    for (const auto& c : f) F_.push_back(mod_floor(c, pn_));
  } else {
    zp::BigPoly G;
    zp::hensel_lift(f, he, g, p, precision, F_, G);
  }

  pi_.prec = c_.prec = precision;
  if (e == 1) {
    pi_.c = {Integer(p) % pn_};
    c_.c = {Integer(1)};
    return;
  }
  pi_.c = zp::big_rem(zp::to_big(h), F_, pn_);
  c_ = one();
  for (unsigned i = 0; i + 1 < e; ++i) c_ = mul(c_, pi_);
  // pi must have valuation 1: pi^e / p is a unit.
  LocalElem pe = mul(c_, pi_);
  LocalElem q = pe;
  for (auto& x : q.c) {
    require(x % p == 0, "prime ideal: the factor does not define a uniformizer");
    x /= p;
  }
  require(this->residue(q).v != 0,
          "prime ideal: " + std::to_string(p) +
              " divides the index of Z[theta] (no uniformizer from the factor)");
}

LocalElem LocalRing::from_integral(const std::vector<Integer>& pc) const {
  zp::BigPoly a;
  for (const auto& c : pc) a.push_back(mod_floor(c, pn_));
  return {zp::big_rem(a, F_, pn_), n_prec_};
}

LocalElem LocalRing::one() const { return {{Integer(1)}, n_prec_}; }

LocalElem LocalRing::mul(const LocalElem& a, const LocalElem& b) const {
  return {zp::big_rem(zp::big_mul(a.c, b.c, pn_), F_, pn_),
          std::min(a.prec, b.prec)};
}

LocalElem LocalRing::add(const LocalElem& a, const LocalElem& b) const {
  LocalElem r;
  r.c.assign(std::max(a.c.size(), b.c.size()), Integer(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  for (auto& x : r.c) x = mod_floor(x, pn_);
  r.prec = std::min(a.prec, b.prec);
  return r;
}

LocalElem LocalRing::sub(const LocalElem& a, const LocalElem& b) const {
  LocalElem r;
  r.c.assign(std::max(a.c.size(), b.c.size()), Integer(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  for (auto& x : r.c) x = mod_floor(x, pn_);
  r.prec = std::min(a.prec, b.prec);
  return r;
}

LocalElem LocalRing::shift(const LocalElem& a) const {
  if (a.prec <= 1) throw PrecisionExhausted{};
  LocalElem b = e_ == 1 ? a : mul(a, c_);
  for (auto& x : b.c) {
    require(x % p_ == 0, "local ring: shift of a unit");
    x /= p_;
  }
  b.prec = a.prec - 1;
  return b;
}

Elem LocalRing::residue(const LocalElem& a) const {
  zp::Poly r = zp::rem(zp::reduce(a.c, p_), h_, p_);
  return residue_.from_coeffs(r);
}

LocalElem LocalRing::lift(Elem r) const {
  LocalElem out;
  for (auto d : residue_.coeffs(r)) out.c.emplace_back(d);
  out.prec = n_prec_;
  return out;
}

unsigned LocalRing::strip(LocalElem& a, unsigned cap) const {
  unsigned v = 0;
  while (v < cap && residue(a).v == 0) {
    a = shift(a);
    ++v;
  }
  return v;
}

std::vector<std::uint32_t> digit_key(const LocalRing& r, LocalElem a, unsigned s) {
  std::vector<std::uint32_t> key;
  for (unsigned i = 0; i < s; ++i) {
    Elem t = r.residue(a);
    key.push_back(t.v);
    if (i + 1 < s) a = r.shift(r.sub(a, r.lift(t)));
  }
  return key;
}

std::shared_ptr<const LocalRing> PrimeIdealData::ring(unsigned precision) const {
  std::lock_guard<std::mutex> lock(mu);
  auto it = rings.find(precision);
  if (it != rings.end()) return it->second;
  auto r = std::make_shared<const LocalRing>(field.poly(), factor_poly, e, p,
                                             residue, precision);
  rings.emplace(precision, r);
  return r;
}

const DyadicTables& PrimeIdealData::dyadic() const {
  std::call_once(dyadic_once, [this] {
    auto t = std::make_unique<DyadicTables>();
    const unsigned s = 2 * e + 1, depth = e + 1;
    t->s = s;
    auto R = ring(s + 2);
    const std::uint64_t qf = residue.order();
    std::uint64_t reps = 1;
    for (unsigned i = 0; i < depth; ++i) reps *= qf;
    const std::uint64_t budget = enumeration_budget(kDefaultBudget);
    if (reps * reps > budget)
      throw Error(ErrorKind::BudgetExceeded,
                  "dyadic square test at " + label + ": " +
                      std::to_string(reps * reps) + " pairs exceed the budget");

    std::vector<LocalElem> pipow{R->one()};
    for (unsigned i = 1; i < depth; ++i) pipow.push_back(R->mul(pipow.back(), R->uniformizer()));
    std::vector<LocalElem> xs;
    std::vector<bool> unit;
    for (std::uint64_t code = 0; code < reps; ++code) {
      std::uint64_t c = code;
      LocalElem x{{Integer(0)}, R->precision()};
      for (unsigned i = 0; i < depth; ++i) {
        Elem d{static_cast<std::uint32_t>(c % qf)};
        c /= qf;
        x = R->add(x, R->mul(pipow[i], R->lift(d)));
      }
      unit.push_back(code % qf != 0);
      xs.push_back(std::move(x));
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (unit[i]) t->squares.insert(digit_key(*R, R->mul(xs[i], xs[i]), s));

    // Unramified quadratic extension O[y]/(y^2 + y + c), c of trace 1.
    Elem cbar{0};
    for (std::uint32_t v = 0; v < residue.order(); ++v)
      if (absolute_trace(residue, Elem{v}) != 0) {
        cbar = Elem{v};
        break;
      }
    const LocalElem c = R->lift(cbar);
    const LocalElem two = R->from_integral({Integer(2)});
    const std::vector<std::uint32_t> zero_key(s, 0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const LocalElem aa = R->mul(xs[i], xs[i]);
      const LocalElem two_a = R->mul(two, xs[i]);
      for (std::size_t j = 0; j < xs.size(); ++j) {
        const LocalElem& b = xs[j];
        LocalElem z1 = R->mul(b, R->sub(two_a, b));
        if (digit_key(*R, z1, s) != zero_key) continue;
        LocalElem z0 = R->sub(aa, R->mul(c, R->mul(b, b)));
        if (R->residue(z0).v == 0) continue;
        t->ext_squares.insert(digit_key(*R, z0, s));
      }
    }
    dyadic_tables = std::move(t);
  });
  return *dyadic_tables;
}

}  // namespace odisc::detail
