// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "odisc/bundle.hpp"
#include "odisc/error.hpp"
#include "odisc/gf.hpp"
#include "odisc/invform.hpp"
#include "odisc/quadform.hpp"
#include "odisc/solver.hpp"
#include "support/oracle.hpp"

using namespace odisc;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::ostringstream problems;
  int failures = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 5) problems << "\n    " << what;
  }
};

std::vector<std::string> printed(const SolveReport& r) {
  std::vector<std::string> out;
  for (auto bits : r.set.survivors) out.push_back(r.set.candidate(bits).to_string());
  return out;
}

std::string list(const std::vector<std::string>& v) {
  std::string s = "{";
  for (const auto& x : v) s += (s.size() > 1 ? ", " : "") + x;
  return s + "}";
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Type read off the zero count of the naive evaluator.
std::optional<OType> type_by_oracle(const QuadraticForm& q) {
  const std::uint64_t n = oracle::count_zeros_naive(q);
  const std::uint64_t s = q.field().order();
  const std::size_t m = q.dim() / 2;
  const std::uint64_t base = ipow(s, 2 * m - 1), gap = ipow(s, m) - ipow(s, m - 1);
  if (n == base + gap) return OType::Plus;
  if (n == base - gap) return OType::Minus;
  return std::nullopt;
}

QuadraticForm plane(const FiniteField& f, OType t) {
  return t == OType::Plus ? hyperbolic(f, 1) : norm_form(f);
}

// H^(m-1) + plane of type t, moved by a random change of basis.
QuadraticForm model(std::mt19937_64& rng, const FiniteField& f, std::size_t m, OType t) {
  QuadraticForm q = plane(f, t);
  if (m > 1) q = orthogonal_sum(hyperbolic(f, m - 1), q);
  return q.transformed(oracle::random_invertible(rng, f, q.dim()));
}

const std::vector<std::pair<std::uint32_t, unsigned>> kFields{{2, 1}, {3, 1}, {2, 2},
                                                              {5, 1}, {7, 1}, {3, 2}};

// ---------------------------------------------------------------- criteria

std::string check_j1(Check& c) {
  const GroupBundle b = load_bundle(oracle::data_path("j1.json"));
  const std::vector<std::pair<std::string, std::string>> table{
      {"56a", "17-4sqrt5"},       {"56b", "17+4sqrt5"},       {"76a", "77"},
      {"76b", "77"},              {"120a", "29-18c19-9c19'"}, {"120b", "47+9c19+18c19'"},
      {"120c", "38+9c19-9c19'"}};
  for (const auto& [id, disc] : table) {
    SolveReport r = solve_character(b, id);
    c.expect(printed(r) == std::vector<std::string>{disc},
             id + ": " + list(printed(r)) + ", want " + disc);
    c.expect(r.paths_agree, id + ": enumeration and GF(2) paths disagree");
  }
  // The three degree-120 values form one Galois orbit.
  const auto& k = b.fields.at("Q(c19)");
  const NFElem a = parse_display(k, "29-18c19-9c19'");
  c.expect(a.galois(1).to_string() == "38+9c19-9c19'" && a.galois(2).to_string() == "47+9c19+18c19'",
           "120a value is not permuted onto 120c, 120b by sigma");
  return "J1 table, 7 characters";
}

std::string check_j2(Check& c) {
  const GroupBundle b = load_bundle(oracle::data_path("j2.json"));
  for (const auto& id : {"224a", "224b"}) {
    SolveReport r = solve_character(b, id);
    c.expect(printed(r) == std::vector<std::string>{"1"}, std::string(id) + ": " + list(printed(r)));
  }
  return "J2 degree 224 pair gives {1}";
}

std::string check_he(Check& c) {
  const GroupBundle b = load_bundle(oracle::data_path("he.json"));
  const std::vector<std::string> rows{"chi6",  "chi12", "chi13", "chi14", "chi15",
                                      "chi16", "chi19", "chi22", "chi25", "chi26",
                                      "chi27", "chi30", "chi31", "chi32"};
  for (const auto& id : rows) {
    SolveReport r = solve_character(b, id);
    const auto match = matching_expected(b, id, r.set);
    c.expect(r.set.survivors.size() == 1 && match == r.set.survivors,
             id + ": " + list(printed(r)) + ", published " + b.expected.at(id));
  }
  SolveReport r = solve_character(b, "chi33");
  const auto s = printed(r);
  c.expect(std::find(s.begin(), s.end(), "1") != s.end(), "chi33: 1 missing from " + list(s));
  c.expect(std::find(r.warnings.begin(), r.warnings.end(),
                     "not determined by decomposition data") != r.warnings.end(),
           "chi33: no undetermined warning");
  return "He rows 6..32 singletons, row 33 " + list(s) + " flagged";
}

std::string check_he_modular(Check& c) {
  const GroupBundle b = load_bundle(oracle::data_path("he.json"));
  int checked = 0;
  for (const auto& [key, t] : b.decompositions) {
    const IdealEntry& e = b.ideals.at(key);
    for (const auto& chi : b.characters) {
      if (chi.field_label != e.field || !t.has_row(chi.id)) continue;
      auto r = reduce(b, chi.id, e.label);
      if (!r || !r->stability.stable || r->constituents.size() < 2) continue;
      std::optional<OType> want;
      for (const auto& f : b.facts)
        if (f.character == chi.id && f.ideal == e.label) want = f.type;
      c.expect(r->type.has_value() && want.has_value() && r->type == want,
               chi.id + " mod " + e.label + ": combination disagrees with the table");
      ++checked;
    }
  }
  c.expect(checked == 12, "expected 12 reducible stable reductions, saw " + std::to_string(checked));
  return std::to_string(checked) + " reducible reductions in characteristics 2, 3, 5, 7";
}

std::string check_form_oracle(Check& c) {
  std::mt19937_64 rng(20260101);
  std::uint64_t n = 0;
  auto check = [&](const QuadraticForm& q, std::optional<OType> expected) {
    if (q.is_degenerate()) return;
    const OType t = classify(q);
    const auto o = type_by_oracle(q);
    c.expect(o.has_value(), "oracle count fits neither formula over " + q.field().name());
    c.expect(classify_by_count(q) == t && o == t,
             "classify disagrees over " + q.field().name() + " dim " + std::to_string(q.dim()));
    if (expected) c.expect(t == *expected, "model form misclassified over " + q.field().name());
    ++n;
  };
  for (auto [p, k] : kFields) {
    const FiniteField f = make_field(p, k);
    for (std::size_t m = 1; m <= 3; ++m)
      for (OType t : {OType::Plus, OType::Minus}) {
        // Structured: all H/N splittings and scalar twists.
        for (std::size_t minus = 0; minus <= m; ++minus) {
          QuadraticForm q = minus ? norm_form(f) : hyperbolic(f, 1);
          for (std::size_t i = 1; i < m; ++i) q = orthogonal_sum(q, i < minus ? norm_form(f) : hyperbolic(f, 1));
          const OType want = minus % 2 ? OType::Minus : OType::Plus;
          if (want != t) continue;
          for (std::uint32_t s = 1; s < f.order(); ++s) check(q.scaled(Elem{s}), want);
        }
        check(model(rng, f, m, t), t);
      }
    const std::size_t per_bucket = 500 / (kFields.size() * 3) + 1;
    for (std::size_t dim = 2; dim <= 6; dim += 2)
      for (std::size_t i = 0; i < per_bucket;) {
        QuadraticForm q = oracle::random_form(rng, f, dim);
        if (q.is_degenerate()) continue;
        check(q, std::nullopt);
        ++i;
      }
  }
  return std::to_string(n) + " forms over GF(2), GF(3), GF(4), GF(5), GF(7), GF(9)";
}

std::string check_parity_laws(Check& c) {
  std::mt19937_64 rng(7);
  std::uint64_t n = 0;
  // Orthogonal sums multiply types.
  for (auto [p, k] : kFields) {
    const FiniteField f = make_field(p, k);
    for (std::size_t a = 1; a <= 2; ++a)
      for (std::size_t b = 1; b <= 2; ++b)
        for (OType s : {OType::Plus, OType::Minus})
          for (OType t : {OType::Plus, OType::Minus}) {
            QuadraticForm q = orthogonal_sum(model(rng, f, a, s), model(rng, f, b, t));
            c.expect(classify(q) == s * t, "sum rule over " + f.name());
            if (q.dim() <= 6) c.expect(type_by_oracle(q) == s * t, "sum rule oracle over " + f.name());
            ++n;
          }
  }
  // Restriction of scalars keeps the type.
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}}) {
    const FiniteField f = make_field(p, k);
    for (std::size_t m = 1; m <= 3; ++m)
      for (OType t : {OType::Plus, OType::Minus}) {
        const QuadraticForm q = model(rng, f, m, t);
        const QuadraticForm r = restrict_scalars(q, 1);
        c.expect(classify(r) == t, "restriction changed the type over " + f.name());
        if (ipow(p, r.dim()) <= 1'000'000) c.expect(type_by_oracle(r) == t, "restriction oracle");
        ++n;
      }
  }
  // Trace carries Artin-Schreier classes, q^d <= 256.
  for (unsigned total = 2; total <= 8; ++total)
    for (unsigned sub = 1; sub < total; ++sub) {
      if (total % sub) continue;
      const FiniteField big = make_field(2, total), small = make_field(2, sub);
      for (std::uint32_t v = 0; v < big.order(); ++v) {
        const FieldElement b(big, Elem{v});
        c.expect(artin_schreier_trivial(trace_to(b, small)) == artin_schreier_trivial(b),
                 "trace of class " + b.to_string() + " in " + big.name());
        ++n;
      }
    }
  // Extension of scalars: O- survives exactly the odd degrees.
  for (auto [p, k] : kFields) {
    const FiniteField f = make_field(p, k);
    for (unsigned d = 1; d <= 3; ++d)
      for (std::size_t m = 1; m <= 3; ++m)
        for (OType t : {OType::Plus, OType::Minus}) {
          const QuadraticForm q = extend_scalars(model(rng, f, m, t), d);
          const OType want = (t == OType::Minus && d % 2 == 1) ? OType::Minus : OType::Plus;
          c.expect(classify(q) == want, "extension rule over " + q.field().name());
          if (ipow(q.field().order(), q.dim()) <= 1'000'000)
            c.expect(type_by_oracle(q) == want, "extension oracle over " + q.field().name());
          ++n;
        }
  }
  // X^2 + X + b is irreducible exactly on the nontrivial class, GF(2^d), d <= 4.
  for (unsigned d = 1; d <= 4; ++d) {
    const FiniteField f = make_field(2, d);
    for (std::uint32_t v = 0; v < f.order(); ++v) {
      bool root = false;
      for (std::uint32_t x = 0; x < f.order() && !root; ++x)
        root = f.add(f.add(f.mul(Elem{x}, Elem{x}), Elem{x}), Elem{v}).v == 0;
      c.expect(root == artin_schreier_trivial(FieldElement(f, Elem{v})),
               "X^2+X+b over " + f.name());
      ++n;
    }
  }
  return std::to_string(n) + " cases: sums, restriction, trace, extension, X^2+X+b";
}

std::string check_exmod(Check& c) {
  const MatrixRep rep = load_rep(oracle::data_path("exmod.json"));
  const auto basis = invariant_quadratic_space(rep);
  c.expect(basis.size() == 2, "invariant space dimension " + std::to_string(basis.size()));
  const FormCensus census = classify_invariant_forms(rep);
  c.expect(!census.sampled, "census was sampled");
  c.expect(census.minus == 0, std::to_string(census.minus) + " O- members");
  c.expect(census.plus > 0, "no nondegenerate member");
  for (const auto& q : basis)
    for (const auto& g : rep.generators) c.expect(q.transformed(g) == q, "basis form not invariant");
  return "dimension " + std::to_string(basis.size()) + ", " + std::to_string(census.plus) +
         " nondegenerate members all O+";
}

std::string check_sl2_8(Check& c) {
  const GroupBundle b = load_bundle(oracle::data_path("sl2_8.json"));
  const auto facts = derive_facts(b, "8a");
  bool seen = false;
  for (const auto& f : facts)
    if (f.ideal.p() == 3) {
      seen = true;
      c.expect(!f.stable && f.cyclic && f.cyclic->defect == 2 && !f.cyclic->exceptional,
               "mod-3 fact is not an unstable defect-2 reduction");
    }
  c.expect(seen, "no mod-3 fact");
  SolveReport r = solve_character(b, "8a");
  const auto s = printed(r);
  c.expect(std::find(s.begin(), s.end(), "1") != s.end(), "1 eliminated: " + list(s));
  return "survivors " + list(s);
}

std::string check_dyadic(Check& c) {
  const NumberField q = NumberField::rationals();
  const PrimeIdeal two = factor_prime(q, 2).front();
  int n = 0;
  for (long long d = -1000; d <= 1000; ++d) {
    if (d == 0 || d == 1) continue;
    bool squarefree = true;
    for (long long k = 2; k * k <= std::llabs(d) && squarefree; ++k) squarefree = d % (k * k) != 0;
    if (!squarefree) continue;
    const long long r = ((d % 8) + 8) % 8;
    const SplittingType want = r == 1   ? SplittingType::Split
                               : r == 5 ? SplittingType::Inert
                                        : SplittingType::Ramified;
    c.expect(splitting_type(two, q.from_int(d)) == want, "splitting at 2 for d = " + std::to_string(d));
    ++n;
  }
  // Lint: exactly the candidates not 1 mod 4, whenever 2 has a stable fact.
  const GroupBundle b = load_bundle(oracle::data_path("he.json"));
  int lints = 0;
  for (const auto& chi : b.characters) {
    if (chi.field_label != "Q" || chi.degree % 2) continue;
    const auto facts = derive_facts(b, chi.id);
    const bool stable_at_2 = std::any_of(facts.begin(), facts.end(), [](const ConstraintFact& f) {
      return f.ideal.p() == 2 && f.stable;
    });
    const CandidateSet set = enumerate_candidates(chi.degree, b.generators.at("Q"));
    std::vector<std::uint64_t> want;
    if (stable_at_2)
      for (std::uint64_t bits = 0; bits < set.initial_size(); ++bits) {
        const Rational v0 = set.candidate(bits).canonical().coeffs()[0];
        const Integer v = boost::multiprecision::numerator(v0);
        if (mod_floor(v, 4) != 1) want.push_back(bits);
      }
    auto got = mod2_lint(set, facts);
    std::sort(got.begin(), got.end());
    c.expect(got == want, chi.id + ": lint set differs");
    if (stable_at_2) {
      ++lints;
      for (auto bits : solve_character(b, chi.id).set.survivors)
        c.expect(std::find(want.begin(), want.end(), bits) == want.end(),
                 chi.id + ": a survivor is not 1 mod 4");
    }
  }
  return std::to_string(n) + " squarefree d, lint on " + std::to_string(lints) + " He rows";
}

}  // namespace

int main() {
  struct Criterion {
    int no;
    const char* name;
    std::function<std::string(Check&)> run;
    double limit_s;
  };
  const std::vector<Criterion> all{
      {1, "J1 end to end", check_j1, 5},
      {2, "J2 example", check_j2, 0},
      {3, "He ordinary table", check_he, 10},
      {4, "He modular tables", check_he_modular, 0},
      {5, "form classification oracle", check_form_oracle, 60},
      {6, "parity laws", check_parity_laws, 0},
      {7, "exmod invariant forms", check_exmod, 0},
      {8, "SL2(8) negative control", check_sl2_8, 0},
      {9, "dyadic rule and mod-2 lint", check_dyadic, 0},
  };
  int failed = 0;
  for (const auto& cr : all) {
    Check c;
    std::string summary;
    const auto t0 = Clock::now();
    try {
      summary = cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (cr.limit_s > 0)
      c.expect(secs < cr.limit_s, "took " + std::to_string(secs) + " s, limit " +
                                      std::to_string(cr.limit_s) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << cr.no << " " << (c.failures ? "FAIL" : "PASS") << ": " << cr.name
              << " (" << summary << "; " << timing << ")" << c.problems.str() << "\n";
    failed += c.failures != 0;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
