// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "odisc/chardata.hpp"
#include "odisc/error.hpp"
#include "odisc/quadform.hpp"

using namespace odisc;

namespace {

BrauerCharacter plus(const std::string& id, std::uint64_t deg, std::uint32_t p,
                     unsigned field = 1, const std::string& orbit = "") {
  BrauerCharacter b;
  b.id = id;
  b.degree = deg;
  b.p = p;
  b.field_degree = field;
  b.orbit = orbit;
  return b;
}

BrauerCharacter minus(const std::string& id, std::uint64_t deg, std::uint32_t p,
                      unsigned field = 1) {
  BrauerCharacter b = plus(id, deg, p, field);
  b.indicator = Indicator::Minus;
  return b;
}

std::pair<BrauerCharacter, BrauerCharacter> dual_pair(const std::string& id,
                                                      std::uint64_t deg,
                                                      std::uint32_t p, unsigned pair_field,
                                                      unsigned ratio,
                                                      const std::string& orbit = "") {
  BrauerCharacter a = plus(id, deg, p, pair_field * ratio, orbit);
  a.indicator = Indicator::Circle;
  a.pair_field_degree = pair_field;
  BrauerCharacter b = a;
  b.id = id + "*";
  a.dual_partner = b.id;
  b.dual_partner = a.id;
  return {a, b};
}

OrdinaryCharacter ordinary(const std::string& id, std::uint64_t deg) {
  OrdinaryCharacter c;
  c.id = id;
  c.degree = deg;
  return c;
}

}  // namespace

TEST(Decomposition, Reduce) {
  std::vector<BrauerCharacter> b = {plus("1", 1, 7), plus("75", 75, 7), plus("76a", 76, 7)};
  b[0].is_trivial = true;
  DecompositionTable t("7.1", 7, b);
  t.add_row("76a", {{"1", 1}, {"75", 1}});
  t.add_row("76b", {{"76a", 1}});
  t.add_row("bad", {{"75", 1}});
  t.add_row("1", {{"1", 1}});
  auto r = t.reduce(ordinary("76a", 76));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].brauer.id, "1");
  EXPECT_EQ(r[1].brauer.id, "75");
  EXPECT_EQ(t.reduce(ordinary("1", 1)).front().brauer.id, "1");
  EXPECT_THROW(t.reduce(ordinary("bad", 76)), Error);
  EXPECT_THROW(t.reduce(ordinary("missing", 76)), Error);
  EXPECT_THROW(t.add_row("x", {{"nope", 1}}), Error);
  EXPECT_THROW(t.add_row("76a", {{"1", 1}}), Error);
}

TEST(Decomposition, TableValidation) {
  EXPECT_THROW(DecompositionTable("2.1", 2, {plus("a", 1, 3)}), Error);
  EXPECT_THROW(DecompositionTable("2.1", 2, {plus("a", 1, 2), plus("a", 3, 2)}), Error);
  auto [a, b] = dual_pair("psi", 3, 5, 1, 2);
  b.dual_partner = "other";
  EXPECT_THROW(DecompositionTable("5.1", 5, {a, b}), Error);
  auto [c, d] = dual_pair("psi", 3, 5, 1, 2);
  c.pair_field_degree = 3;
  EXPECT_THROW(DecompositionTable("5.1", 5, {c, d}), Error);
  // The trivial character has indicator + in characteristic 2.
  BrauerCharacter triv = minus("1", 1, 2);
  triv.is_trivial = true;
  DecompositionTable t("2.1", 2, {triv});
  EXPECT_EQ(t.brauer("1").indicator, Indicator::Plus);
}

TEST(Stability, Examples) {
  auto r = is_orthogonally_stable({{plus("1", 1, 7), 1}, {plus("75", 75, 7), 1}});
  EXPECT_FALSE(r.stable);
  EXPECT_EQ(r.witnesses, (std::vector<std::string>{"1", "75"}));
  EXPECT_FALSE(is_orthogonally_stable({{plus("1", 1, 3), 1}, {plus("7", 7, 3), 1}}).stable);
  EXPECT_TRUE(is_orthogonally_stable({{plus("1920", 1920, 3), 1}}).stable);
  BrauerCharacter triv = plus("1", 1, 2);
  triv.is_trivial = true;
  EXPECT_FALSE(is_orthogonally_stable({{triv, 1}}).stable);
  // Even multiplicity of an odd + constituent is still unstable.
  EXPECT_FALSE(is_orthogonally_stable({{plus("3", 3, 5), 2}}).stable);
  EXPECT_TRUE(is_orthogonally_stable({{minus("3", 3, 5), 2}}).stable);
}

TEST(Stability, SelfDuality) {
  auto [a, b] = dual_pair("psi", 3, 5, 1, 2);
  EXPECT_TRUE(is_orthogonally_stable({{a, 1}, {b, 1}}).stable);
  EXPECT_THROW(is_orthogonally_stable({{a, 1}}), Error);
  EXPECT_THROW(is_orthogonally_stable({{a, 2}, {b, 1}}), Error);
}

TEST(Stability, AddingOddPlusBreaksStability) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Constituent> c;
    std::uniform_int_distribution<int> kind(0, 2), deg(1, 6);
    for (int i = 0; i < 4; ++i) {
      const std::string id = "c" + std::to_string(i);
      switch (kind(rng)) {
        case 0: c.push_back({plus(id, 2 * deg(rng), 3), 1}); break;
        case 1: c.push_back({minus(id, deg(rng), 3), 2}); break;
        default: {
          auto [a, b] = dual_pair(id, deg(rng), 3, 1, 2);
          c.push_back({a, 1});
          c.push_back({b, 1});
        }
      }
    }
    ASSERT_TRUE(is_orthogonally_stable(c).stable);
    c.push_back({plus("odd", 2 * deg(rng) - 1, 3), 1});
    EXPECT_FALSE(is_orthogonally_stable(c).stable);
  }
}

TEST(Split, Kinds) {
  auto [a, b] = dual_pair("psi", 3, 5, 1, 2);
  auto s = split_orthogonally_simple({{a, 1}, {b, 1}}, 1);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].kind, SummandKind::DualPair);
  EXPECT_EQ(s[0].degree, 6u);
  EXPECT_EQ(s[0].pair_field_ratio, 2u);

  s = split_orthogonally_simple({{minus("m", 4, 5), 2}}, 1);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].kind, SummandKind::MinusDoubled);
  EXPECT_EQ(s[0].degree, 8u);

  s = split_orthogonally_simple({{plus("1920", 1920, 3), 1}}, 1, {{"1920", OType::Minus}});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].kind, SummandKind::PlusIrreducible);
  EXPECT_EQ(s[0].type, OType::Minus);

  EXPECT_THROW(split_orthogonally_simple({{minus("m", 4, 5), 3}}, 1), Error);
  EXPECT_THROW(split_orthogonally_simple({{a, 1}}, 1), Error);
  EXPECT_THROW(split_orthogonally_simple({{plus("1", 1, 5), 1}}, 1), Error);
}

TEST(Split, GaloisOrbits) {
  // Two conjugates with field GF(p^2) inside a reduction with field GF(p).
  auto x = plus("x", 2, 3, 2, "X"), y = plus("y", 2, 3, 2, "X");
  auto s = split_orthogonally_simple({{x, 1}, {y, 1}}, 1, {{"x", OType::Minus}});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].degree, 4u);
  EXPECT_EQ(modular_discriminant(s, 1), OType::Minus);
  // Over GF(p^2) they are separate summands and the types cancel.
  s = split_orthogonally_simple({{x, 1}, {y, 1}}, 2, {{"X", OType::Minus}});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(modular_discriminant(s, 2), OType::Plus);
  // A lone conjugate cannot occur over GF(p).
  EXPECT_THROW(split_orthogonally_simple({{x, 1}}, 1, {{"x", OType::Minus}}), Error);
  EXPECT_THROW(split_orthogonally_simple({{x, 1}, {y, 1}}, 1,
                                         {{"x", OType::Minus}, {"y", OType::Plus}}),
               Error);
}

TEST(ModularDisc, Examples) {
  OrthSummand minus_irr;
  minus_irr.kind = SummandKind::PlusIrreducible;
  minus_irr.members = {"psi"};
  minus_irr.degree = minus_irr.psi_degree = 2;
  minus_irr.field_degree = 1;
  minus_irr.type = OType::Minus;
  EXPECT_EQ(modular_discriminant({minus_irr}, 1), OType::Minus);
  EXPECT_EQ(modular_discriminant({minus_irr, minus_irr}, 1), OType::Plus);
  EXPECT_EQ(modular_discriminant({minus_irr}, 2), OType::Plus);
  EXPECT_EQ(modular_discriminant({minus_irr}, 3), OType::Minus);

  OrthSummand pair;
  pair.kind = SummandKind::DualPair;
  pair.psi_degree = 1;
  pair.degree = 2;
  pair.pair_field_ratio = 2;
  EXPECT_EQ(modular_discriminant({pair}, 1), OType::Minus);
  pair.psi_degree = 2;
  EXPECT_EQ(modular_discriminant({pair}, 1), OType::Plus);
  pair.psi_degree = 1;
  pair.pair_field_ratio = 1;
  EXPECT_EQ(modular_discriminant({pair}, 1), OType::Plus);

  OrthSummand md;
  md.kind = SummandKind::MinusDoubled;
  EXPECT_EQ(modular_discriminant({md}, 1), OType::Plus);

  minus_irr.type.reset();
  EXPECT_THROW(modular_discriminant({minus_irr}, 1), Error);
  EXPECT_EQ(modular_discriminant({}, 1), OType::Plus);
}

TEST(ModularDisc, ReorderingInvariance) {
  std::vector<Constituent> c = {{plus("a", 2, 5), 1}, {plus("b", 4, 5), 1},
                                {minus("m", 3, 5), 2}, {plus("d", 6, 5), 1}};
  auto [x, y] = dual_pair("psi", 1, 5, 1, 2);
  c.push_back({x, 1});
  c.push_back({y, 1});
  std::map<std::string, OType> known = {{"a", OType::Minus}, {"b", OType::Plus}, {"d", OType::Minus}};
  const OType want = modular_discriminant(split_orthogonally_simple(c, 1, known), 1);
  EXPECT_EQ(want, OType::Minus);
  std::sort(c.begin(), c.end(), [](auto& l, auto& r) { return l.brauer.id < r.brauer.id; });
  do {
    auto s = split_orthogonally_simple(c, 1, known);
    std::uint64_t total = 0;
    for (const auto& x : s) total += x.degree;
    EXPECT_EQ(total, 2u + 4 + 6 + 6 + 2);
    EXPECT_EQ(modular_discriminant(s, 1), want);
  } while (std::next_permutation(c.begin(), c.end(),
                                 [](auto& l, auto& r) { return l.brauer.id < r.brauer.id; }));
}

// Every combination rule against explicit forms classified by counting.
namespace {

struct Spec {
  SummandKind kind;
  unsigned field;  // f'
  unsigned ratio;  // dual pairs
  unsigned psi;    // psi degree
  OType type;      // plus-irreducible
};

QuadraticForm realize(const Spec& s, std::uint32_t p, unsigned k) {
  const FiniteField f = make_field(p, s.field);
  QuadraticForm q;
  switch (s.kind) {
    case SummandKind::PlusIrreducible:
      q = s.type == OType::Plus
              ? hyperbolic(f, s.psi / 2)
              : (s.psi == 2 ? norm_form(f)
                            : orthogonal_sum(hyperbolic(f, s.psi / 2 - 1), norm_form(f)));
      break;
    case SummandKind::DualPair:
      q = s.ratio == 2 ? hermitian_form(s.psi, f) : hyperbolic(f, s.psi);
      break;
    case SummandKind::MinusDoubled:
      q = hyperbolic(f, s.psi);
      break;
  }
  const unsigned g = std::gcd(k, s.field);
  return extend_scalars(restrict_scalars(q, g), k / g);
}

unsigned orbit_size(const Spec& s, unsigned k) { return s.field / std::gcd(k, s.field); }

unsigned final_dim(const Spec& s, unsigned k) {
  const unsigned base = s.kind == SummandKind::PlusIrreducible ? s.psi : 2 * s.psi;
  return base * orbit_size(s, k);
}

std::vector<Constituent> constituents(const Spec& s, std::uint32_t p, unsigned k,
                                      const std::string& tag,
                                      std::map<std::string, OType>& known) {
  std::vector<Constituent> c;
  const unsigned n = orbit_size(s, k);
  for (unsigned i = 0; i < n; ++i) {
    const std::string id = tag + std::to_string(i);
    switch (s.kind) {
      case SummandKind::PlusIrreducible:
        c.push_back({plus(id, s.psi, p, s.field, tag), 1});
        known[id] = s.type;
        break;
      case SummandKind::DualPair: {
        auto [a, b] = dual_pair(id, s.psi, p, s.field, s.ratio, tag);
        c.push_back({a, 1});
        c.push_back({b, 1});
        break;
      }
      case SummandKind::MinusDoubled:
        if (i == 0) c.push_back({minus(id, s.psi, p, s.field), 2});
        break;
    }
  }
  return c;
}

}  // namespace

TEST(ModularDisc, FormOracle) {
  std::vector<Spec> specs;
  for (unsigned field : {1u, 2u, 3u}) {
    for (unsigned psi : {2u, 4u})
      for (OType t : {OType::Plus, OType::Minus})
        specs.push_back({SummandKind::PlusIrreducible, field, 1, psi, t});
    for (unsigned psi : {1u, 2u, 3u})
      for (unsigned ratio : {1u, 2u})
        specs.push_back({SummandKind::DualPair, field, ratio, psi, OType::Plus});
    for (unsigned psi : {1u, 2u})
      specs.push_back({SummandKind::MinusDoubled, field, 1, psi, OType::Plus});
  }
  const std::uint64_t cap = 1'000'000;
  int checked = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (unsigned k = 1; ; ++k) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < k; ++i) q *= p;
      if (q > 64) break;
      auto fits = [&](unsigned dim) {
        if (dim > 8) return false;
        std::uint64_t n = 1;
        for (unsigned i = 0; i < dim; ++i) {
          n *= q;
          if (n > cap) return false;
        }
        return true;
      };
      auto usable = [&](const Spec& s) {
        std::uint64_t big = 1;
        for (unsigned i = 0; i < s.field * s.ratio; ++i) big *= p;
        return big <= 4096;
      };
      for (std::size_t i = 0; i < specs.size(); ++i) {
        if (!usable(specs[i])) continue;
        for (std::size_t j = i; j <= specs.size(); ++j) {
          std::vector<Spec> combo = {specs[i]};
          if (j < specs.size()) {
            if (!usable(specs[j])) continue;
            combo.push_back(specs[j]);
          }
          unsigned dim = 0;
          for (const auto& s : combo) dim += final_dim(s, k);
          if (!fits(dim)) continue;

          std::map<std::string, OType> known;
          std::vector<Constituent> c;
          QuadraticForm form;
          for (std::size_t t = 0; t < combo.size(); ++t) {
            auto part = constituents(combo[t], p, k, "s" + std::to_string(t) + "_", known);
            c.insert(c.end(), part.begin(), part.end());
            QuadraticForm f = realize(combo[t], p, k);
            form = t == 0 ? f : orthogonal_sum(form, f);
          }
          ASSERT_FALSE(form.is_degenerate());
          const OType predicted = modular_discriminant(split_orthogonally_simple(c, k, known), k);
          EXPECT_EQ(predicted, classify_by_count(form))
              << "p=" << p << " k=" << k << " specs " << i << "," << j;
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 500);
}
