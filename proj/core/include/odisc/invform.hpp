// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "odisc/ffmatrix.hpp"
#include "odisc/quadform.hpp"

namespace odisc {

/// Matrix group acting on row vectors, x -> x g.
struct MatrixRep {
  FiniteField field;
  std::size_t dim = 0;
  std::vector<FfMatrix> generators;

  /// Checks shapes, fields and invertibility.
  static MatrixRep create(FiniteField f, std::size_t dim, std::vector<FfMatrix> gens);
};

/// Basis of {Q : Q(x g) = Q(x) for every generator g}; solves
/// sym_reduce(g U g^T) = U. Caps dim(dim+1)/2 at 5000 unknowns.
std::vector<QuadraticForm> invariant_quadratic_space(const MatrixRep& rep);

struct FormCensus {
  std::size_t space_dim = 0;
  std::uint64_t examined = 0;
  /// Lower bounds from random members when the space is too large.
  bool sampled = false;
  std::uint64_t plus = 0, minus = 0, degenerate = 0;
  /// Odd dimension, odd characteristic: determinant square / nonsquare.
  std::uint64_t disc_square = 0, disc_nonsquare = 0;
};

inline constexpr std::uint64_t kCensusEnumerationCap = 1'000'000;
inline constexpr std::uint64_t kCensusSamples = 10'000;

/// Classifies every member of the invariant space (zero included) when
/// q^dim <= 10^6, else 10^4 random members drawn with `seed`.
FormCensus classify_invariant_forms(const MatrixRep& rep, std::uint64_t seed = 1);
/// Same for the span of `basis`, forms of dimension `dim`.
FormCensus classify_forms(const FiniteField& f, std::size_t dim,
                          const std::vector<QuadraticForm>& basis, std::uint64_t seed = 1);

}  // namespace odisc
