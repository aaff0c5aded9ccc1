// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "odisc/quadform.hpp"

#include <numeric>

#include "odisc/budget.hpp"
#include "odisc/error.hpp"

namespace odisc {

std::string FFSquareClass::to_string() const {
  if (characteristic_two) return trivial ? "trivial" : "nontrivial";
  return trivial ? "square" : "nonsquare";
}

QuadraticForm::QuadraticForm(FiniteField f, std::size_t dim)
    : field_(std::move(f)), dim_(dim), u_(dim * dim) {}

QuadraticForm::QuadraticForm(FiniteField f, std::size_t dim,
                             std::vector<Elem> upper)
    : field_(std::move(f)), dim_(dim), u_(std::move(upper)) {
  require(u_.size() == dim * dim, "QuadraticForm: coefficient matrix must be " +
                                      std::to_string(dim) + "x" +
                                      std::to_string(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < i; ++j)
      require(u_[i * dim + j].v == 0,
              "QuadraticForm: coefficient matrix is not upper triangular");
  for (auto e : u_)
    require(e.v < field_.order(), "QuadraticForm: coefficient out of range");
}

void QuadraticForm::set_coeff(std::size_t i, std::size_t j, Elem a) {
  require(i <= j && j < dim_, "QuadraticForm: set_coeff needs i <= j < dim");
  u_[i * dim_ + j] = a;
}

QuadraticForm QuadraticForm::from_function(
    const FiniteField& f, std::size_t dim,
    const std::function<Elem(const std::vector<Elem>&)>& q) {
  QuadraticForm r(f, dim);
  std::vector<Elem> x(dim);
  std::vector<Elem> diag(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    x[i] = f.one();
    diag[i] = q(x);
    x[i] = f.zero();
    r.u_[i * dim + i] = diag[i];
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      x[i] = x[j] = f.one();
      Elem v = f.sub(f.sub(q(x), diag[i]), diag[j]);
      x[i] = x[j] = f.zero();
      r.u_[i * dim + j] = v;
    }
  return r;
}

Elem QuadraticForm::evaluate(const std::vector<Elem>& x) const {
  require(x.size() == dim_, "QuadraticForm: vector length mismatch");
  Elem s = field_.zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].v == 0) continue;
    Elem row = field_.zero();
    for (std::size_t j = i; j < dim_; ++j)
      row = field_.add(row, field_.mul(u_[i * dim_ + j], x[j]));
    s = field_.add(s, field_.mul(x[i], row));
  }
  return s;
}

Elem QuadraticForm::bilinear(const std::vector<Elem>& x,
                             const std::vector<Elem>& y) const {
  auto b = polarization();
  auto by = b.transpose().row_times(y);  // B y^T as a row
  Elem s = field_.zero();
  for (std::size_t i = 0; i < dim_; ++i) s = field_.add(s, field_.mul(x[i], by[i]));
  return s;
}

FfMatrix QuadraticForm::polarization() const {
  FfMatrix b(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      b.at(i, j) = field_.add(u_[i * dim_ + j], u_[j * dim_ + i]);
  return b;
}

bool QuadraticForm::is_degenerate() const {
  if (dim_ == 0) return false;
  return determinant(polarization()).v == 0;
}

std::vector<Elem> sym_reduce(const FfMatrix& m) {
  require(m.rows() == m.cols(), "sym_reduce: matrix is not square");
  const auto& f = m.field();
  const std::size_t n = m.rows();
  std::vector<Elem> u(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i * n + i] = m.at(i, i);
    for (std::size_t j = i + 1; j < n; ++j)
      u[i * n + j] = f.add(m.at(i, j), m.at(j, i));
  }
  return u;
}

QuadraticForm QuadraticForm::transformed(const FfMatrix& g) const {
  require(g.cols() == dim_, "QuadraticForm::transformed: shape mismatch");
  FfMatrix u(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) u.at(i, j) = u_[i * dim_ + j];
  FfMatrix m = g * u * g.transpose();
  return QuadraticForm(field_, g.rows(), sym_reduce(m));
}

QuadraticForm QuadraticForm::scaled(Elem a) const {
  QuadraticForm r = *this;
  for (auto& e : r.u_) e = field_.mul(e, a);
  return r;
}

namespace {

void require_classifiable(const QuadraticForm& q) {
  if (q.field().characteristic() == 2 && q.dim() % 2 == 1)
    throw Error(ErrorKind::DegenerateForm,
                "quadratic form of odd dimension " + std::to_string(q.dim()) +
                    " in characteristic 2 is degenerate");
  if (q.is_degenerate())
    throw Error(ErrorKind::DegenerateForm, "quadratic form is degenerate");
}

}  // namespace

Elem arf_sum(const QuadraticForm& q, const std::vector<std::size_t>& order) {
  const auto& f = q.field();
  require(f.characteristic() == 2, "arf_sum: characteristic must be 2");
  const std::size_t n = q.dim();
  require(order.size() == n, "arf_sum: order must list every basis index");
  const FfMatrix b = q.polarization();
  auto bil = [&](const std::vector<Elem>& x, const std::vector<Elem>& y) {
    Elem s = f.zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].v == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        s = f.add(s, f.mul(x[i], f.mul(b.at(i, j), y[j])));
    }
    return s;
  };
  std::vector<std::vector<Elem>> rest;
  for (auto idx : order) {
    require(idx < n, "arf_sum: index out of range");
    std::vector<Elem> e(n);
    e[idx] = f.one();
    rest.push_back(std::move(e));
  }
  Elem sum = f.zero();
  while (!rest.empty()) {
    auto u = rest.front();
    std::size_t partner = 0;
    Elem c{0};
    for (std::size_t i = 1; i < rest.size(); ++i) {
      c = bil(u, rest[i]);
      if (c.v != 0) {
        partner = i;
        break;
      }
    }
    if (partner == 0)
      throw Error(ErrorKind::DegenerateForm, "quadratic form is degenerate");
    auto v = rest[partner];
    Elem ci = f.inv(c);
    for (auto& e : v) e = f.mul(e, ci);
    sum = f.add(sum, f.mul(q.evaluate(u), q.evaluate(v)));
    std::vector<std::vector<Elem>> next;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      if (i == partner) continue;
      auto w = rest[i];
      Elem wv = bil(w, v), wu = bil(w, u);
      for (std::size_t j = 0; j < n; ++j)
        w[j] = f.add(w[j], f.add(f.mul(wv, u[j]), f.mul(wu, v[j])));
      next.push_back(std::move(w));
    }
    rest = std::move(next);
  }
  return sum;
}

FFSquareClass discriminant(const QuadraticForm& q) {
  const auto& f = q.field();
  const bool two = f.characteristic() == 2;
  if (q.dim() == 0) return {two, true};
  require_classifiable(q);
  if (two) {
    std::vector<std::size_t> order(q.dim());
    std::iota(order.begin(), order.end(), std::size_t{0});
    Elem s = arf_sum(q, order);
    return {true, absolute_trace(f, s) == 0};
  }
  const std::size_t n = q.dim();
  Elem d = determinant(q.polarization());
  if ((n * (n - 1) / 2) % 2 == 1) d = f.neg(d);
  return {false, is_square(FieldElement(f, d))};
}

OType classify(const QuadraticForm& q) {
  if (q.dim() % 2 == 1)
    throw Error(ErrorKind::DegenerateForm,
                "classify: odd dimension " + std::to_string(q.dim()) +
                    " has no O+/O- type");
  return discriminant(q).trivial ? OType::Plus : OType::Minus;
}

std::uint64_t count_isotropic(const QuadraticForm& q) {
  const auto& f = q.field();
  const std::size_t n = q.dim();
  const std::uint64_t qq = f.order();
  const std::uint64_t budget = enumeration_budget(kDefaultBudget);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= qq;
    if (total > budget)
      throw Error(ErrorKind::BudgetExceeded,
                  "count_isotropic: " + std::to_string(qq) + "^" +
                      std::to_string(n) + " vectors exceed the budget of " +
                      std::to_string(budget));
  }
  if (n == 0) return 1;

  // Depth-first over coordinates; partial[i] = Q restricted to x_0..x_{i-1}.
  std::vector<Elem> x(n), partial(n + 1);
  std::vector<std::uint32_t> next(n, 0);
  std::uint64_t count = 0;
  std::size_t level = 0;
  while (true) {
    if (next[level] == qq) {
      if (level == 0) break;
      next[level] = 0;
      --level;
      continue;
    }
    Elem xi{next[level]++};
    x[level] = xi;
    Elem lin = q.coeff(level, level);
    lin = f.mul(lin, xi);
    for (std::size_t j = 0; j < level; ++j)
      lin = f.add(lin, f.mul(q.coeff(j, level), x[j]));
    Elem val = f.add(partial[level], f.mul(xi, lin));
    if (level + 1 == n) {
      if (val.v == 0) ++count;
    } else {
      partial[level + 1] = val;
      ++level;
    }
  }
  return count;
}

OType classify_by_count(const QuadraticForm& q) {
  const std::size_t n = q.dim();
  if (n % 2 == 1)
    throw Error(ErrorKind::DegenerateForm,
                "classify_by_count: odd dimension has no O+/O- type");
  if (n == 0) return OType::Plus;
  const std::uint64_t m = n / 2, qq = q.field().order();
  std::uint64_t qm1 = 1;
  for (std::uint64_t i = 0; i + 1 < m; ++i) qm1 *= qq;
  const std::uint64_t qm = qm1 * qq;
  const std::uint64_t base = qm * qm1;  // q^(2m-1)
  const std::uint64_t c = count_isotropic(q);
  if (c == base + (qm - qm1)) return OType::Plus;
  if (c == base - (qm - qm1)) return OType::Minus;
  throw Error(ErrorKind::DegenerateForm,
              "classify_by_count: isotropic count " + std::to_string(c) +
                  " fits neither type; the form is degenerate");
}

QuadraticForm orthogonal_sum(const QuadraticForm& a, const QuadraticForm& b) {
  require(a.field() == b.field(), "orthogonal_sum: field mismatch");
  const std::size_t n = a.dim() + b.dim();
  QuadraticForm r(a.field(), n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) r.set_coeff(i, j, a.coeff(i, j));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i; j < b.dim(); ++j)
      r.set_coeff(a.dim() + i, a.dim() + j, b.coeff(i, j));
  return r;
}

QuadraticForm hyperbolic(const FiniteField& f, std::size_t n) {
  QuadraticForm r(f, 2 * n);
  for (std::size_t i = 0; i < n; ++i) r.set_coeff(2 * i, 2 * i + 1, f.one());
  return r;
}

QuadraticForm norm_form(const FiniteField& f) {
  const FiniteField big = make_field(f.characteristic(), 2 * f.degree());
  const Embedding emb(f, big);
  const Elem g = big.primitive();
  const std::uint64_t e = std::uint64_t(f.order()) + 1;
  return QuadraticForm::from_function(f, 2, [&](const std::vector<Elem>& x) {
    Elem a = big.add(emb.lift(x[0]), big.mul(emb.lift(x[1]), g));
    return *emb.restrict(big.pow(a, e));
  });
}

QuadraticForm restrict_scalars_to(const QuadraticForm& q,
                                  const FiniteField& sub) {
  const FiniteField& big = q.field();
  require(sub.characteristic() == big.characteristic() &&
              big.degree() % sub.degree() == 0,
          "restrict_scalars: " + sub.name() + " is not a subfield of " +
              big.name());
  const Embedding emb(sub, big);
  const std::size_t r = big.degree() / sub.degree();
  const std::size_t n = q.dim();
  std::vector<Elem> basis(r);
  for (std::size_t s = 0; s < r; ++s) basis[s] = big.exp(s);  // g^s
  return QuadraticForm::from_function(
      sub, n * r, [&](const std::vector<Elem>& y) {
        std::vector<Elem> x(n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t s = 0; s < r; ++s)
            x[i] = big.add(x[i], big.mul(emb.lift(y[i * r + s]), basis[s]));
        return trace_to(FieldElement(big, q.evaluate(x)), sub).value();
      });
}

QuadraticForm restrict_scalars(const QuadraticForm& q, unsigned target_degree) {
  const auto& f = q.field();
  require(target_degree >= 1 && f.degree() % target_degree == 0,
          "restrict_scalars: degree " + std::to_string(target_degree) +
              " does not divide " + std::to_string(f.degree()));
  return restrict_scalars_to(q, make_field(f.characteristic(), target_degree));
}

QuadraticForm extend_scalars(const QuadraticForm& q, unsigned d) {
  require(d >= 1, "extend_scalars: degree must be at least 1");
  const auto& f = q.field();
  if (d == 1) return q;
  const FiniteField big = make_field(f.characteristic(), f.degree() * d);
  const Embedding emb(f, big);
  QuadraticForm r(big, q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i; j < q.dim(); ++j)
      r.set_coeff(i, j, emb.lift(q.coeff(i, j)));
  return r;
}

OType hermitian_transfer(unsigned n, const FiniteField& base) {
  require(n >= 1, "hermitian_transfer: dimension must be at least 1");
  (void)base;  // same answer for every base field
  return n % 2 == 1 ? OType::Minus : OType::Plus;
}

QuadraticForm hermitian_form(unsigned n, const FiniteField& base) {
  require(n >= 1, "hermitian_form: dimension must be at least 1");
  QuadraticForm nf = norm_form(base);
  QuadraticForm r = nf;
  for (unsigned i = 1; i < n; ++i) r = orthogonal_sum(r, nf);
  return r;
}

}  // namespace odisc
