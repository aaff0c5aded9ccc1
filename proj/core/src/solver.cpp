// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "odisc/solver.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "odisc/error.hpp"

namespace odisc {

namespace {

constexpr std::size_t kMaxGenerators = 24;

std::string describe_fact(const ConstraintFact& f) {
  std::string s = f.ideal.label() + ": ";
  s += f.stable ? "stable" : "not stable";
  if (f.type) s += std::string(", ") + to_string(*f.type);
  if (f.cyclic)
    s += ", defect " + std::to_string(f.cyclic->defect) +
         (f.cyclic->exceptional ? " (exceptional)" : "");
  if (!f.source.empty()) s += " [" + f.source + "]";
  return s;
}

void check_field(const CandidateSet& c, const PrimeIdeal& ideal) {
  require(ideal.field().same_as(c.generators->field()),
          "fact at " + ideal.label() + " is over a different field");
}

// Removes survivors for which `drop` holds, logging each removal.
template <class Pred>
void eliminate(CandidateSet& c, const ConstraintFact& f, const char* rule, Pred drop) {
  std::vector<std::uint64_t> keep;
  keep.reserve(c.survivors.size());
  for (auto bits : c.survivors) {
    if (drop(bits)) {
      c.log.push_back({bits, c.candidate(bits).product_string(), f.ideal.label(), rule,
                       describe_fact(f)});
    } else {
      keep.push_back(bits);
    }
  }
  c.survivors = std::move(keep);
}

struct Equation {
  std::uint64_t mask = 0;
  bool rhs = false;
  std::string origin;
};

// Reduced echelon basis; returns false when the new row reads 0 = 1.
bool add_equation(std::vector<Equation>& basis, Equation e) {
  for (const auto& b : basis)
    if (e.mask & (b.mask & -b.mask)) {
      e.mask ^= b.mask;
      e.rhs ^= b.rhs;
    }
  if (e.mask == 0) return !e.rhs;
  const std::uint64_t pivot = e.mask & -e.mask;
  for (auto& b : basis)
    if (b.mask & pivot) {
      b.mask ^= e.mask;
      b.rhs ^= e.rhs;
    }
  basis.push_back(std::move(e));
  return true;
}

bool satisfies(const std::vector<Equation>& eqs, std::uint64_t bits) {
  for (const auto& e : eqs)
    if ((std::popcount(e.mask & bits) % 2 != 0) != e.rhs) return false;
  return true;
}

}  // namespace

FactKind kind(const ConstraintFact& f) {
  if (f.cyclic) {
    if (f.cyclic->defect == 1) return f.stable ? FactKind::Defect1Stable : FactKind::Defect1NotStable;
    return f.cyclic->exceptional ? FactKind::ExceptionalVertexRule
                                 : FactKind::NonExceptionalRule;
  }
  if (!f.stable) return FactKind::NotStable;
  return f.type ? FactKind::StableWithType : FactKind::StableTypeUnknown;
}

const char* to_string(FactKind k) {
  switch (k) {
    case FactKind::StableWithType: return "StableWithType";
    case FactKind::StableTypeUnknown: return "StableTypeUnknown";
    case FactKind::NotStable: return "NotStable";
    case FactKind::Defect1NotStable: return "Defect1NotStable";
    case FactKind::Defect1Stable: return "Defect1Stable";
    case FactKind::ExceptionalVertexRule: return "ExceptionalVertexRule";
    case FactKind::NonExceptionalRule: return "NonExceptionalRule";
  }
  return "?";
}

int epsilon_for_degree(std::uint64_t degree) {
  require(degree % 2 == 0, "orthogonal discriminant needs even degree, got " +
                               std::to_string(degree));
  return (degree / 2) % 2 == 0 ? 1 : -1;
}

CandidateSet enumerate_candidates(std::uint64_t degree,
                                  std::shared_ptr<const GeneratorList> generators) {
  require(generators != nullptr, "missing generator list");
  require(generators->size() <= kMaxGenerators,
          "too many generators to enumerate (" + std::to_string(generators->size()) + ")");
  CandidateSet c;
  c.epsilon = epsilon_for_degree(degree);
  c.generators = std::move(generators);
  c.survivors.resize(c.initial_size());
  for (std::size_t i = 0; i < c.survivors.size(); ++i) c.survivors[i] = i;
  return c;
}

SplittingType candidate_type(const CandidateSet& c, std::uint64_t bits,
                             const PrimeIdeal& ideal) {
  return splitting_type(ideal, c.candidate(bits).representative());
}

void apply_stability_constraints(CandidateSet& c, const std::vector<ConstraintFact>& facts) {
  for (const auto& f : facts) {
    if (!f.stable) continue;
    check_field(c, f.ideal);
    std::map<std::uint64_t, SplittingType> type;
    for (auto bits : c.survivors) type[bits] = candidate_type(c, bits, f.ideal);
    eliminate(c, f, "stable-unramified",
              [&](std::uint64_t b) { return type[b] == SplittingType::Ramified; });
    if (f.type == OType::Plus)
      eliminate(c, f, "plus-not-inert",
                [&](std::uint64_t b) { return type[b] == SplittingType::Inert; });
    if (f.type == OType::Minus && f.odd_degree)
      eliminate(c, f, "minus-odd-degree-not-split",
                [&](std::uint64_t b) { return type[b] == SplittingType::Split; });
  }
}

void apply_cyclic_defect(CandidateSet& c, const std::vector<ConstraintFact>& facts) {
  for (const auto& f : facts) {
    if (!f.cyclic) continue;
    check_field(c, f.ideal);
    if (f.ideal.p() == 2)
      fail("cyclic defect rules need an odd prime, got ideal " + f.ideal.label());
    require(f.cyclic->defect >= 1, "cyclic defect must be positive at " + f.ideal.label());
    const bool decisive = f.cyclic->defect % 2 == 1 || f.cyclic->exceptional;
    auto ramified = [&](std::uint64_t b) {
      return candidate_type(c, b, f.ideal) == SplittingType::Ramified;
    };
    if (!decisive)
      eliminate(c, f, "even-defect-unramified", ramified);
    else if (f.stable)
      eliminate(c, f, "cyclic-stable-unramified", ramified);
    else
      eliminate(c, f, "cyclic-unstable-ramified",
                [&](std::uint64_t b) { return !ramified(b); });
  }
}

Gf2Result gf2_solve(const CandidateSet& c, const std::vector<ConstraintFact>& facts) {
  const std::size_t t = c.generators->size();
  Gf2Result r;
  std::vector<Equation> basis, all;
  auto push = [&](Equation e) {
    ++r.equations;
    all.push_back(e);
    if (!add_equation(basis, e) && r.consistent) {
      r.consistent = false;
      r.conflict = e.origin;
    }
  };
  for (const auto& f : facts) {
    if (f.ideal.is_dyadic()) continue;
    check_field(c, f.ideal);
    Equation val, res;
    for (std::size_t i = 0; i < t; ++i) {
      const ResidueSymbol s = residue_symbol(f.ideal, c.generators->at(i));
      if (s.odd_valuation) val.mask |= std::uint64_t{1} << i;
      if (s.nonsquare) res.mask |= std::uint64_t{1} << i;
    }
    const bool eps_nonsquare =
        c.epsilon < 0 && residue_symbol(f.ideal, c.generators->field().from_int(-1)).nonsquare;
    val.origin = res.origin = describe_fact(f);
    const bool decisive_cyclic =
        f.cyclic && (f.cyclic->defect % 2 == 1 || f.cyclic->exceptional);
    if (f.stable || (f.cyclic && !decisive_cyclic)) {
      val.rhs = false;
      push(val);
    } else if (decisive_cyclic) {
      val.rhs = true;
      push(val);
    }
    if (f.stable && f.type == OType::Plus) {
      res.rhs = eps_nonsquare;
      push(res);
    } else if (f.stable && f.type == OType::Minus && f.odd_degree) {
      res.rhs = !eps_nonsquare;
      push(res);
    }
  }
  r.rank = basis.size();
  if (!r.consistent) return r;
  for (auto bits : c.survivors)
    if (satisfies(all, bits)) r.solutions.push_back(bits);
  if (r.rank == t) {
    std::uint64_t y = 0;
    for (const auto& b : basis)
      if (b.rhs) y |= b.mask & -b.mask;
    r.unique = y;
  }
  return r;
}

OType primes_not_dividing_order(const PrimeIdeal& ideal, const NFSquareClass& disc) {
  require(!ideal.is_dyadic(), "residue test needs a non-dyadic ideal, got " + ideal.label());
  const NFElem d = disc.representative();
  const UnitResidue u = unit_residue(ideal, d);
  if (u.valuation != 0)
    fail("discriminant " + d.to_string() + " is not a unit at " + ideal.label());
  return is_square(u.residue) ? OType::Plus : OType::Minus;
}

std::vector<std::uint64_t> mod2_lint(const CandidateSet& c,
                                     const std::vector<ConstraintFact>& facts) {
  std::vector<std::uint64_t> out;
  if (c.generators->field().degree() != 1) return out;
  const bool stable_at_2 = std::any_of(facts.begin(), facts.end(), [](const auto& f) {
    return f.stable && f.ideal.p() == 2;
  });
  if (!stable_at_2) return out;
  for (std::uint64_t bits = 0; bits < c.initial_size(); ++bits) {
    const Rational d = c.candidate(bits).canonical().coeffs()[0];
    Integer n = numerator(d) % 4;
    if (n < 0) n += 4;
    if (n != 1) out.push_back(bits);
  }
  return out;
}

SolveReport solve(std::uint64_t degree, std::shared_ptr<const GeneratorList> generators,
                  const std::vector<ConstraintFact>& facts) {
  SolveReport r{enumerate_candidates(degree, std::move(generators)), {}, false, true, {}};
  apply_stability_constraints(r.set, facts);
  apply_cyclic_defect(r.set, facts);
  r.gf2 = gf2_solve(r.set, facts);

  const std::size_t t = r.set.generators->size();
  const bool dyadic = std::any_of(facts.begin(), facts.end(),
                                  [](const auto& f) { return f.ideal.is_dyadic(); });
  if (!r.gf2.consistent) {
    r.paths_agree = r.set.survivors.empty();
  } else {
    // Without dyadic facts both paths see the same constraints.
    r.paths_agree = r.gf2.solutions == r.set.survivors;
    if (!dyadic && r.set.survivors.size() != (std::size_t(1) << (t - r.gf2.rank)))
      r.paths_agree = false;
    if (r.gf2.unique && r.set.survivors.size() == 1 && *r.gf2.unique != r.set.survivors[0])
      r.paths_agree = false;
  }
  if (!r.paths_agree)
    r.warnings.push_back("enumeration and linear algebra disagree");
  if (facts.empty()) r.warnings.push_back("no facts: all candidates survive");
  if (r.gf2.rank < t && r.set.survivors.size() > 1)
    r.warnings.push_back("rank " + std::to_string(r.gf2.rank) + " < " + std::to_string(t) +
                         ": enumeration result only");

  const NumberField& k = r.set.generators->field();
  std::vector<PrimeIdeal> dyadic_ideals;
  try {
    dyadic_ideals = factor_prime(k, 2);
  } catch (const Error&) {
  }
  for (auto bits : r.set.survivors)
    for (const auto& P : dyadic_ideals)
      if (valuation(P, r.set.candidate(bits).representative()) % 2 != 0)
        r.warnings.push_back("survivor " + r.set.candidate(bits).product_string() +
                             " has odd valuation at dyadic ideal " + P.label());

  r.determined = r.set.survivors.size() == 1;
  if (r.set.survivors.empty()) {
    std::ostringstream os;
    os << "no candidate survives (" << r.set.log.size() << " eliminations)";
    if (!r.gf2.consistent) os << "; linear system contradicts " << r.gf2.conflict;
    r.warnings.push_back(os.str());
  }
  return r;
}

}  // namespace odisc
