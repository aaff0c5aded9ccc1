// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "support/oracle.hpp"

namespace odisc::oracle {

bool is_square_by_enumeration(const FiniteField& f, Elem a) {
  for (std::uint32_t b = 0; b < f.order(); ++b)
    if (f.mul(Elem{b}, Elem{b}) == a) return true;
  return false;
}

bool in_artin_schreier_image(const FiniteField& f, Elem b) {
  for (std::uint32_t a = 0; a < f.order(); ++a)
    if (f.add(f.mul(Elem{a}, Elem{a}), Elem{a}) == b) return true;
  return false;
}

Elem evaluate_naive(const QuadraticForm& q, const std::vector<Elem>& x) {
  const auto& f = q.field();
  Elem s = f.zero();
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i; j < q.dim(); ++j)
      s = f.add(s, f.mul(q.coeff(i, j), f.mul(x[i], x[j])));
  return s;
}

std::vector<std::vector<Elem>> all_vectors(const FiniteField& f, std::size_t n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> x(n);
  while (true) {
    out.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i].v + 1 == f.order()) x[i++] = Elem{0};
    if (i == n) break;
    x[i].v += 1;
  }
  return out;
}

std::uint64_t count_zeros_naive(const QuadraticForm& q) {
  std::uint64_t c = 0;
  for (const auto& x : all_vectors(q.field(), q.dim()))
    if (evaluate_naive(q, x).v == 0) ++c;
  return c;
}

std::vector<Elem> random_vector(std::mt19937_64& rng, const FiniteField& f,
                                std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  std::vector<Elem> x(n);
  for (auto& e : x) e = Elem{d(rng)};
  return x;
}

QuadraticForm random_form(std::mt19937_64& rng, const FiniteField& f,
                          std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  QuadraticForm q(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) q.set_coeff(i, j, Elem{d(rng)});
  return q;
}

FfMatrix random_invertible(std::mt19937_64& rng, const FiniteField& f,
                           std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  while (true) {
    FfMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Elem{d(rng)};
    if (rank(m) == n) return m;
  }
}

std::string data_path(const std::string& name) {
  return std::string(ODISC_DATA_DIR) + "/" + name;
}

std::string golden_path(const std::string& name) {
  return std::string(ODISC_GOLDEN_DIR) + "/" + name;
}

}  // namespace odisc::oracle
