// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "odisc/gf.hpp"

namespace odisc {

/// Dense row-major matrix over a finite field.
class FfMatrix {
 public:
  FfMatrix() = default;
  FfMatrix(FiniteField f, std::size_t rows, std::size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols) {}
  static FfMatrix identity(const FiniteField& f, std::size_t n);

  const FiniteField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Elem at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  FfMatrix operator*(const FfMatrix& o) const;
  FfMatrix transpose() const;
  std::vector<Elem> row_times(const std::vector<Elem>& x) const;  // x * M

  friend bool operator==(const FfMatrix& a, const FfMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  FiniteField field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(FfMatrix& m);
std::size_t rank(FfMatrix m);
Elem determinant(FfMatrix m);
std::optional<FfMatrix> inverse(const FfMatrix& m);
/// Basis of {x : M x = 0} (column vectors).
std::vector<std::vector<Elem>> nullspace(FfMatrix m);

}  // namespace odisc
