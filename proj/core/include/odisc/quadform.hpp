// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "odisc/ffmatrix.hpp"
#include "odisc/gf.hpp"

namespace odisc {

enum class OType { Plus, Minus };

inline const char* to_string(OType t) { return t == OType::Plus ? "O+" : "O-"; }
inline OType operator*(OType a, OType b) {
  return a == b ? OType::Plus : OType::Minus;
}

/// Square class in odd characteristic, Artin-Schreier class in
/// characteristic 2. Both are groups of order 2.
struct FFSquareClass {
  bool characteristic_two = false;
  bool trivial = true;

  FFSquareClass operator*(FFSquareClass o) const {
    return {characteristic_two, trivial == o.trivial};
  }
  friend bool operator==(FFSquareClass, FFSquareClass) = default;
  std::string to_string() const;
};

/// Q(x) = sum_{i<=j} U_ij x_i x_j with U upper triangular.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  QuadraticForm(FiniteField f, std::size_t dim);
  /// `upper` is row-major dim x dim; entries below the diagonal must be 0.
  QuadraticForm(FiniteField f, std::size_t dim, std::vector<Elem> upper);

  /// Builds the form whose values agree with `q` (assumed quadratic).
  static QuadraticForm from_function(
      const FiniteField& f, std::size_t dim,
      const std::function<Elem(const std::vector<Elem>&)>& q);

  const FiniteField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  Elem coeff(std::size_t i, std::size_t j) const { return u_[i * dim_ + j]; }
  void set_coeff(std::size_t i, std::size_t j, Elem a);

  Elem evaluate(const std::vector<Elem>& x) const;
  Elem bilinear(const std::vector<Elem>& x, const std::vector<Elem>& y) const;
  /// B = U + U^T.
  FfMatrix polarization() const;
  bool is_degenerate() const;

  /// x -> Q(x g), the row-vector convention.
  QuadraticForm transformed(const FfMatrix& g) const;
  QuadraticForm scaled(Elem a) const;

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.u_ == b.u_;
  }

 private:
  FiniteField field_;
  std::size_t dim_ = 0;
  std::vector<Elem> u_;
};

/// Folds M to the upper-triangular coefficient matrix of x M x^T.
std::vector<Elem> sym_reduce(const FfMatrix& m);

FFSquareClass discriminant(const QuadraticForm& q);
/// Characteristic 2 only: sum Q(e_i) Q(f_i) over a symplectic basis built by
/// Gram-Schmidt on the vectors in `order` (a permutation of 0..n-1).
Elem arf_sum(const QuadraticForm& q, const std::vector<std::size_t>& order);
OType classify(const QuadraticForm& q);

/// Number of x with Q(x) = 0, zero included, by enumeration. Throws
/// BudgetExceeded when q^dim exceeds the enumeration budget.
std::uint64_t count_isotropic(const QuadraticForm& q);
OType classify_by_count(const QuadraticForm& q);

QuadraticForm orthogonal_sum(const QuadraticForm& a, const QuadraticForm& b);
/// H(K)^n, dimension 2n.
QuadraticForm hyperbolic(const FiniteField& f, std::size_t n);
/// x -> x^(q+1) on GF(q^2), in the basis 1, g of a primitive g.
QuadraticForm norm_form(const FiniteField& f);

/// T o Q down to the subfield of degree `target_degree` (default modulus).
QuadraticForm restrict_scalars(const QuadraticForm& q, unsigned target_degree);
QuadraticForm restrict_scalars_to(const QuadraticForm& q, const FiniteField& sub);
/// The same coefficients read in GF(q^d) (default modulus of that degree).
QuadraticForm extend_scalars(const QuadraticForm& q, unsigned d);

/// Type of the quadratic form of an n-dimensional Hermitian space over
/// GF(q^2)/GF(q).
OType hermitian_transfer(unsigned n, const FiniteField& base);
/// The explicit form x -> sum N(x_i) over GF(q), dimension 2n.
QuadraticForm hermitian_form(unsigned n, const FiniteField& base);

}  // namespace odisc
