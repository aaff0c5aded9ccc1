// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "odisc/ffmatrix.hpp"

#include "odisc/error.hpp"

namespace odisc {

FfMatrix FfMatrix::identity(const FiniteField& f, std::size_t n) {
  FfMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

FfMatrix FfMatrix::operator*(const FfMatrix& o) const {
  require(cols_ == o.rows_, "FfMatrix: shape mismatch in product");
  require(field_ == o.field_, "FfMatrix: field mismatch in product");
  FfMatrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Elem a = at(i, k);
      if (a.v == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
    }
  return r;
}

FfMatrix FfMatrix::transpose() const {
  FfMatrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Elem> FfMatrix::row_times(const std::vector<Elem>& x) const {
  require(x.size() == rows_, "FfMatrix: vector length mismatch");
  std::vector<Elem> y(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (x[i].v == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j)
      y[j] = field_.add(y[j], field_.mul(x[i], at(i, j)));
  }
  return y;
}

std::vector<std::size_t> row_reduce(FfMatrix& m) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c).v == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    Elem inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Elem factor = m.at(i, c);
      if (factor.v == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(FfMatrix m) { return row_reduce(m).size(); }

Elem determinant(FfMatrix m) {
  require(m.rows() == m.cols(), "determinant: matrix is not square");
  const auto& f = m.field();
  const std::size_t n = m.rows();
  Elem det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m.at(piv, c).v == 0) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m.at(c, c));
    Elem inv = f.inv(m.at(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      Elem factor = f.mul(m.at(i, c), inv);
      if (factor.v == 0) continue;
      for (std::size_t j = c; j < n; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
    }
  }
  return det;
}

std::optional<FfMatrix> inverse(const FfMatrix& m) {
  require(m.rows() == m.cols(), "inverse: matrix is not square");
  const std::size_t n = m.rows();
  FfMatrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = m.field().one();
  }
  auto piv = row_reduce(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  FfMatrix r(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

std::vector<std::vector<Elem>> nullspace(FfMatrix m) {
  const auto& f = m.field();
  auto piv = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> x(m.cols());
    x[free] = f.one();
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = f.neg(m.at(r, free));
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace odisc
