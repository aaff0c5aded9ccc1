// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Completion of O_K at a prime ideal, truncated at p^N:
//   R = (Z/p^N)[x] / (F),  F the Hensel lift of h^e from f = h^e g (mod p).

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "odisc/numfield.hpp"
#include "zpoly.hpp"

namespace odisc::detail {

struct NumberFieldData {
  std::string label;
  unsigned m = 1;
  std::vector<Integer> poly;
  std::vector<Rational> galois;
  std::vector<std::vector<Rational>> galois_powers;  // sigma(theta)^i mod f
  std::vector<std::vector<Rational>> integral_basis;
  bool totally_real = false;
  Integer index = 1;
  std::vector<std::vector<Rational>> units;
  std::vector<std::vector<Rational>> display_basis;
  std::vector<std::vector<Rational>> display_inverse;
  std::vector<std::string> display_names;
  std::vector<std::pair<Rational, Rational>> real_roots;  // isolating intervals
};

/// Element of R with its number of meaningful p-adic digits.
struct LocalElem {
  std::vector<Integer> c;
  unsigned prec = 0;
};

struct PrecisionExhausted {};

class LocalRing {
 public:
  LocalRing(const std::vector<Integer>& f, const zp::Poly& h, unsigned e,
            std::int64_t p, const FiniteField& residue, unsigned precision);

  unsigned precision() const { return n_prec_; }
  LocalElem from_integral(const std::vector<Integer>& power_coeffs) const;
  LocalElem mul(const LocalElem& a, const LocalElem& b) const;
  LocalElem add(const LocalElem& a, const LocalElem& b) const;
  LocalElem sub(const LocalElem& a, const LocalElem& b) const;
  LocalElem one() const;
  /// a * pi^(e-1) / p for a in P. Throws PrecisionExhausted.
  LocalElem shift(const LocalElem& a) const;
  Elem residue(const LocalElem& a) const;
  /// Representative with coefficients in [0, p) of degree < f.
  LocalElem lift(Elem r) const;
  const LocalElem& uniformizer() const { return pi_; }
  /// Number of shifts until the residue is nonzero, capped at `cap`;
  /// `a` is replaced by the shifted element. Throws PrecisionExhausted.
  unsigned strip(LocalElem& a, unsigned cap) const;

 private:
  std::int64_t p_;
  unsigned e_, f_, n_;
  unsigned n_prec_;
  Integer pn_;
  zp::BigPoly F_;
  zp::Poly h_;
  FiniteField residue_;
  LocalElem pi_;
  LocalElem c_;  // pi^(e-1)
};

/// Digits of units mod P^(2e+1) that are squares in K_P, resp. in the
/// unramified quadratic extension.
struct DyadicTables {
  unsigned s = 0;
  std::set<std::vector<std::uint32_t>> squares;
  std::set<std::vector<std::uint32_t>> ext_squares;
};

/// Digit key of a modulo P^s.
std::vector<std::uint32_t> digit_key(const LocalRing& r, LocalElem a, unsigned s);

struct PrimeIdealData {
  NumberField field;
  std::uint32_t p = 0;
  zp::Poly factor_poly;
  unsigned f = 1, e = 1;
  std::string label;
  std::optional<NFElem> generator;
  FiniteField residue;

  std::shared_ptr<const LocalRing> ring(unsigned precision) const;
  const DyadicTables& dyadic() const;

  mutable std::mutex mu;
  mutable std::map<unsigned, std::shared_ptr<const LocalRing>> rings;
  mutable std::once_flag dyadic_once;
  mutable std::unique_ptr<DyadicTables> dyadic_tables;

  PrimeIdealData(NumberField k) : field(std::move(k)) {}
};

}  // namespace odisc::detail
