// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "odisc/invform.hpp"

#include <random>

#include "odisc/error.hpp"

namespace odisc {

namespace {

constexpr std::size_t kMaxUnknowns = 5000;

void classify_into(const QuadraticForm& q, FormCensus& c) {
  if (q.is_degenerate()) {
    ++c.degenerate;
    return;
  }
  if (q.dim() % 2 == 0) {
    (classify(q) == OType::Plus ? c.plus : c.minus)++;
    return;
  }
  try {
    (discriminant(q).trivial ? c.disc_square : c.disc_nonsquare)++;
  } catch (const Error&) {
    ++c.degenerate;
  }
}

}  // namespace

MatrixRep MatrixRep::create(FiniteField f, std::size_t dim, std::vector<FfMatrix> gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    const std::string where = "generator " + std::to_string(i);
    require(g.rows() == dim && g.cols() == dim, where + ": expected " + std::to_string(dim) +
                                                    "x" + std::to_string(dim));
    require(g.field() == f, where + ": field mismatch");
    require(inverse(g).has_value(), where + ": not invertible");
  }
  return MatrixRep{std::move(f), dim, std::move(gens)};
}

std::vector<QuadraticForm> invariant_quadratic_space(const MatrixRep& rep) {
  const FiniteField& f = rep.field;
  const std::size_t n = rep.dim;
  const std::size_t unknowns = n * (n + 1) / 2;
  require(unknowns <= kMaxUnknowns, "invariant forms: " + std::to_string(unknowns) +
                                        " unknowns exceed the cap of " +
                                        std::to_string(kMaxUnknowns));
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<std::size_t> slot(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      slot[i * n + j] = slots.size();
      slots.push_back({i, j});
    }

  // Column (i,j): coefficients of (x g)_i (x g)_j minus the unit form x_i x_j.
  FfMatrix sys(f, unknowns * rep.generators.size(), unknowns);
  for (std::size_t gi = 0; gi < rep.generators.size(); ++gi) {
    const FfMatrix& g = rep.generators[gi];
    const std::size_t base = gi * unknowns;
    for (std::size_t col = 0; col < unknowns; ++col) {
      const auto [i, j] = slots[col];
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) {
          Elem v = f.mul(g.at(k, i), g.at(l, j));
          if (k != l) v = f.add(v, f.mul(g.at(l, i), g.at(k, j)));
          Elem& e = sys.at(base + slot[k * n + l], col);
          e = f.add(e, v);
        }
      Elem& d = sys.at(base + col, col);
      d = f.sub(d, f.one());
    }
  }
  std::vector<QuadraticForm> basis;
  for (const auto& v : nullspace(sys)) {
    QuadraticForm q(f, n);
    for (std::size_t c = 0; c < unknowns; ++c) q.set_coeff(slots[c].first, slots[c].second, v[c]);
    basis.push_back(q);
  }
  return basis;
}

FormCensus classify_forms(const FiniteField& f, std::size_t n,
                          const std::vector<QuadraticForm>& basis, std::uint64_t seed) {
  FormCensus c;
  c.space_dim = basis.size();
  const std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size() && total <= kCensusEnumerationCap; ++i) total *= q;

  auto combine = [&](const std::vector<Elem>& a) {
    QuadraticForm r(f, n);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a[b].v == 0) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          r.set_coeff(i, j, f.add(r.coeff(i, j), f.mul(a[b], basis[b].coeff(i, j))));
    }
    return r;
  };

  std::vector<Elem> a(basis.size());
  if (total <= kCensusEnumerationCap) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t r = idx;
      for (auto& x : a) {
        x = Elem{static_cast<std::uint32_t>(r % q)};
        r /= q;
      }
      classify_into(combine(a), c);
      ++c.examined;
    }
    return c;
  }
  c.sampled = true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q - 1));
  for (std::uint64_t s = 0; s < kCensusSamples; ++s) {
    for (auto& x : a) x = Elem{pick(rng)};
    classify_into(combine(a), c);
    ++c.examined;
  }
  return c;
}

FormCensus classify_invariant_forms(const MatrixRep& rep, std::uint64_t seed) {
  return classify_forms(rep.field, rep.dim, invariant_quadratic_space(rep), seed);
}

}  // namespace odisc
