// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "odisc/chardata.hpp"
#include "odisc/numfield.hpp"
#include "odisc/squareclass.hpp"

namespace odisc {

/// What is known about the reduction of one ordinary character modulo one
/// prime ideal.
struct ConstraintFact {
  PrimeIdeal ideal;
  bool stable = false;
  /// Observed orthogonal discriminant of a stable reduction.
  std::optional<OType> type;
  /// [O_K/P : GF(p)(reduction)] is odd.
  bool odd_degree = false;
  /// Cyclic defect data of the block at p.
  std::optional<DefectInfo> cyclic;
  std::string source;
};

enum class FactKind {
  StableWithType,
  StableTypeUnknown,
  NotStable,
  Defect1NotStable,
  Defect1Stable,
  ExceptionalVertexRule,
  NonExceptionalRule,
};
FactKind kind(const ConstraintFact& f);
const char* to_string(FactKind k);

struct LogEntry {
  std::uint64_t bits = 0;
  std::string candidate;  // product of generators
  std::string ideal;
  std::string rule;
  std::string citation;
};

/// eps * prod delta_i^b_i over all b in GF(2)^t, with survivors and the
/// elimination log.
struct CandidateSet {
  int epsilon = 1;
  std::shared_ptr<const GeneratorList> generators;
  std::vector<std::uint64_t> survivors;
  std::vector<LogEntry> log;

  NFSquareClass candidate(std::uint64_t bits) const {
    return NFSquareClass(generators, bits, epsilon);
  }
  std::size_t initial_size() const { return std::size_t(1) << generators->size(); }
};

/// (-1)^(degree/2); the degree must be even.
int epsilon_for_degree(std::uint64_t degree);

/// All 2^t candidates (t <= 24).
CandidateSet enumerate_candidates(std::uint64_t degree,
                                  std::shared_ptr<const GeneratorList> generators);

/// Splitting type of candidate `bits` at the ideal of `fact`.
SplittingType candidate_type(const CandidateSet& c, std::uint64_t bits,
                             const PrimeIdeal& ideal);

/// Stable reductions: the ideal is unramified; O+ excludes inert; O- with
/// an odd residue degree over the reduction's field excludes split.
void apply_stability_constraints(CandidateSet& c, const std::vector<ConstraintFact>& facts);

/// Cyclic defect at odd p. For defect 1, an exceptional vertex, or odd
/// defect, the ideal ramifies exactly when the reduction is not stable;
/// otherwise it never ramifies. Throws at p = 2.
void apply_cyclic_defect(CandidateSet& c, const std::vector<ConstraintFact>& facts);

/// Linear system over GF(2) from the non-dyadic facts: valuation parity and
/// residue symbol rows, with right-hand sides from the observed data.
struct Gf2Result {
  std::size_t equations = 0;
  std::size_t rank = 0;
  bool consistent = true;
  /// First contradictory equation when inconsistent.
  std::string conflict;
  /// Solution set intersected with the candidate survivors.
  std::vector<std::uint64_t> solutions;
  /// The unique solution when rank == t.
  std::optional<std::uint64_t> unique;
};
Gf2Result gf2_solve(const CandidateSet& c, const std::vector<ConstraintFact>& facts);

/// Type at a non-dyadic ideal over a prime not dividing the group order:
/// O+ iff the representative is a square modulo the ideal.
OType primes_not_dividing_order(const PrimeIdeal& ideal, const NFSquareClass& disc);

/// Rational characters with a stable reduction at 2: candidates not 1 mod 4.
std::vector<std::uint64_t> mod2_lint(const CandidateSet& c,
                                     const std::vector<ConstraintFact>& facts);

struct SolveReport {
  CandidateSet set;
  Gf2Result gf2;
  bool determined = false;
  /// Enumeration and linear algebra agree on the candidates they both see.
  bool paths_agree = true;
  std::vector<std::string> warnings;
};

SolveReport solve(std::uint64_t degree, std::shared_ptr<const GeneratorList> generators,
                  const std::vector<ConstraintFact>& facts);

}  // namespace odisc
