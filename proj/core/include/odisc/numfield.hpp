// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "odisc/gf.hpp"
#include "odisc/rational.hpp"

namespace odisc {

struct NumberFieldSpec {
  std::string label;
  std::vector<Integer> poly;  // monic, least significant first
  /// Z-basis of the maximal order, in power-basis coordinates.
  std::vector<std::vector<Rational>> integral_basis;
  /// sigma(theta) in power-basis coordinates; sigma generates the Galois group.
  std::vector<Rational> galois;
  bool totally_real = false;
  /// Optional units used to normalize printed square-class representatives.
  std::vector<std::vector<Rational>> units;
  /// Optional printing basis (power-basis coordinates) and its names.
  std::vector<std::vector<Rational>> display_basis;
  std::vector<std::string> display_names;
};

class NFElem;

namespace detail {
struct NumberFieldData;
}

/// Abelian number field Q(theta) of degree m <= 6 with cyclic Galois group
/// generated by sigma.
class NumberField {
 public:
  static NumberField create(NumberFieldSpec spec);
  static NumberField rationals();

  const std::string& label() const;
  unsigned degree() const;
  const std::vector<Integer>& poly() const;
  bool totally_real() const;
  /// [O_K : Z[theta]].
  const Integer& index() const;
  std::vector<NFElem> units() const;
  std::vector<NFElem> integral_basis() const;

  NFElem element(std::vector<Rational> power_coeffs) const;
  NFElem from_int(long long n) const;
  NFElem theta() const;
  /// Element from coordinates on the display basis (or power basis if none).
  NFElem from_display(const std::vector<Rational>& coords) const;

  bool same_as(const NumberField& o) const { return d_ == o.d_; }
  const detail::NumberFieldData& data() const { return *d_; }

 private:
  explicit NumberField(std::shared_ptr<const detail::NumberFieldData> d)
      : d_(std::move(d)) {}
  std::shared_ptr<const detail::NumberFieldData> d_;
};

class NFElem {
 public:
  NFElem(NumberField f, std::vector<Rational> c);

  const NumberField& field() const { return field_; }
  /// Power-basis coordinates, exactly degree() entries.
  const std::vector<Rational>& coeffs() const { return c_; }

  NFElem operator+(const NFElem& o) const;
  NFElem operator-(const NFElem& o) const;
  NFElem operator-() const;
  NFElem operator*(const NFElem& o) const;
  NFElem operator/(const NFElem& o) const { return *this * o.inverse(); }
  NFElem inverse() const;
  NFElem pow(unsigned e) const;
  NFElem scaled(const Rational& r) const;

  /// sigma^times applied.
  NFElem galois(unsigned times = 1) const;
  std::vector<NFElem> conjugates() const;
  Rational norm() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_rational() const;
  /// Characteristic polynomial has integer coefficients.
  bool is_integral() const;
  /// Characteristic polynomial, monic, least significant first.
  std::vector<Rational> charpoly() const;

  std::vector<Rational> display_coords() const;
  std::string to_string() const;

  friend bool operator==(const NFElem& a, const NFElem& b) {
    return a.field_.same_as(b.field_) && a.c_ == b.c_;
  }

 private:
  NumberField field_;
  std::vector<Rational> c_;
};

struct NormAndConjugates {
  Rational norm;
  std::vector<NFElem> conjugates;  // orbit order: a, sigma(a), ...
};
NormAndConjugates norm_and_galois(const NFElem& a);

/// Positive at every real embedding; requires a totally real field, a != 0.
bool is_totally_positive(const NFElem& a);

/// A square root of a in a totally real field, nullopt when a is not a
/// square. Throws BudgetExceeded if the root's coordinates outgrow long
/// double precision.
std::optional<NFElem> square_root(const NFElem& a);

enum class SplittingType { Split, Inert, Ramified };
const char* to_string(SplittingType t);

struct PrimeIdealSpec {
  std::string label;
  std::uint32_t p = 0;
  std::vector<std::int64_t> factor_poly;  // monic irreducible factor mod p
  std::optional<std::vector<Rational>> generator;
};

namespace detail {
struct PrimeIdealData;
}

/// Prime of O_K over p given by an irreducible factor h of the defining
/// polynomial mod p (p must not divide the index).
class PrimeIdeal {
 public:
  static PrimeIdeal create(const NumberField& k, const PrimeIdealSpec& spec);

  const NumberField& field() const;
  std::uint32_t p() const;
  const std::vector<std::int64_t>& factor_poly() const;
  unsigned residue_degree() const;
  unsigned ramification_index() const;
  const std::string& label() const;
  const std::optional<NFElem>& generator() const;
  const FiniteField& residue_field() const;
  bool is_dyadic() const { return p() == 2; }

  const detail::PrimeIdealData& data() const { return *d_; }

 private:
  explicit PrimeIdeal(std::shared_ptr<const detail::PrimeIdealData> d)
      : d_(std::move(d)) {}
  std::shared_ptr<const detail::PrimeIdealData> d_;
};

/// One ideal per irreducible factor of the defining polynomial mod p,
/// labelled "<p>.<i>". Throws if p divides the index.
std::vector<PrimeIdeal> factor_prime(const NumberField& k, std::uint32_t p);

/// Image in O_K / P = GF(p^f); the denominator of a must be prime to p.
FieldElement residue_map(const PrimeIdeal& ideal, const NFElem& a);

/// v_P(a) for a != 0.
int valuation(const PrimeIdeal& ideal, const NFElem& a);

/// Valuation of a together with the residue of the unit a * c^v, where
/// c = pi^(e-1)/p is a fixed element of valuation -1 at the ideal. The
/// residue is multiplicative in a.
struct UnitResidue {
  int valuation = 0;
  FieldElement residue;
};
UnitResidue unit_residue(const PrimeIdeal& ideal, const NFElem& a);

/// Behaviour of the ideal in K[sqrt(delta)]. Squares give Split.
SplittingType splitting_type(const PrimeIdeal& ideal, const NFElem& delta);

}  // namespace odisc
