// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace odisc {

/// Packed element of GF(p^k): the base-p digits are the coefficients of the
/// polynomial representative, least significant first.
struct Elem {
  std::uint32_t v = 0;
  friend auto operator<=>(Elem, Elem) = default;
};

namespace detail {
struct FieldData;
}

/// GF(p^k) with an explicit monic irreducible modulus. Cheap to copy; the
/// log/exp tables are shared and immutable.
class FiniteField {
 public:
  FiniteField();  // GF(2)

  std::uint32_t characteristic() const;
  unsigned degree() const;
  std::uint32_t order() const;
  /// Monic modulus, k+1 coefficients, least significant first.
  const std::vector<std::uint32_t>& modulus() const;

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem from_int(std::int64_t n) const;
  /// Reduces an arbitrary-length coefficient vector modulo the modulus.
  Elem from_coeffs(std::span<const std::int64_t> c) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  Elem primitive() const;
  /// Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t n) const;

  std::string to_string(Elem a) const;
  std::string name() const;  // "GF(3^2)"

  bool same_as(const FiniteField& o) const;
  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.same_as(b);
  }

 private:
  friend FiniteField make_field(std::uint32_t, unsigned,
                                std::optional<std::vector<std::int64_t>>);
  explicit FiniteField(std::shared_ptr<const detail::FieldData> d)
      : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

/// Default modulus: least monic irreducible by the integer encoding
/// sum c_i p^i of its lower coefficients. q = p^k is capped at 2^20.
FiniteField make_field(std::uint32_t p, unsigned k,
                       std::optional<std::vector<std::int64_t>> modulus =
                           std::nullopt);

bool is_prime(std::uint64_t n);
/// Exhaustive trial division by monic polynomials of degree <= deg/2.
bool is_irreducible_mod_p(std::span<const std::int64_t> poly, std::uint32_t p);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FiniteField f, Elem v) : field_(std::move(f)), value_(v) {}
  static FieldElement of(const FiniteField& f, std::int64_t n) {
    return {f, f.from_int(n)};
  }

  const FiniteField& field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_.v == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }
  FieldElement inverse() const { return {field_, field_.inv(value_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.field_ == b.field_;
  }
  std::string to_string() const { return field_.to_string(value_); }

 private:
  FiniteField field_;
  Elem value_;
};

/// a^((q-1)/2) == 1. Throws on a == 0 or characteristic 2.
bool is_square(const FieldElement& a);
/// True iff b = a^2 + a for some a, i.e. the absolute trace of b vanishes.
/// Throws in odd characteristic.
bool artin_schreier_trivial(const FieldElement& b);
/// Tr_{GF(p^k)/GF(p)}(a) as an integer in [0, p).
std::uint32_t absolute_trace(const FiniteField& f, Elem a);

/// Image of the subfield `sub` inside `big`: sends the generator x of `sub`
/// to a root of sub's modulus in `big`.
class Embedding {
 public:
  Embedding(const FiniteField& sub, const FiniteField& big);
  const FiniteField& sub() const;
  const FiniteField& big() const;
  Elem lift(Elem a) const;
  /// nullopt when b is outside the image.
  std::optional<Elem> restrict(Elem b) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// Norm / trace down to the subfield of degree d, expressed in
/// make_field(p, d). Throws unless d divides the degree.
FieldElement norm(const FieldElement& a, unsigned subfield_degree);
FieldElement trace(const FieldElement& a, unsigned subfield_degree);
/// Same, landing in an explicit subfield representation.
FieldElement norm_to(const FieldElement& a, const FiniteField& sub);
FieldElement trace_to(const FieldElement& a, const FiniteField& sub);

}  // namespace odisc
