// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "odisc/error.hpp"
#include "odisc/quadform.hpp"
#include "support/oracle.hpp"

using namespace odisc;

namespace {

QuadraticForm form(const FiniteField& f, std::size_t n,
                   std::vector<std::int64_t> upper) {
  std::vector<Elem> u;
  for (auto c : upper) u.push_back(f.from_int(c));
  return QuadraticForm(f, n, u);
}

std::vector<FiniteField> small_fields() {
  return {make_field(2, 1), make_field(3, 1), make_field(2, 2),
          make_field(5, 1), make_field(7, 1), make_field(3, 2)};
}

}  // namespace

TEST(Polarize, Examples) {
  auto f3 = make_field(3, 1);
  auto b = form(f3, 1, {1}).polarization();
  EXPECT_EQ(b.at(0, 0), Elem{2});
  auto h = hyperbolic(f3, 1).polarization();
  EXPECT_EQ(h.at(0, 0), Elem{0});
  EXPECT_EQ(h.at(0, 1), Elem{1});
  EXPECT_EQ(h.at(1, 0), Elem{1});
  auto f2 = make_field(2, 1);
  auto b2 = form(f2, 2, {1, 1, 0, 1}).polarization();
  EXPECT_EQ(b2.at(0, 0), Elem{0});
  EXPECT_EQ(b2.at(1, 1), Elem{0});
  EXPECT_EQ(b2.at(0, 1), Elem{1});
}

TEST(Polarize, MatchesDefinitionOnRandomVectors) {
  std::mt19937_64 rng(7);
  for (const auto& f : small_fields()) {
    auto q = oracle::random_form(rng, f, 4);
    for (int t = 0; t < 50; ++t) {
      auto x = oracle::random_vector(rng, f, 4);
      auto y = oracle::random_vector(rng, f, 4);
      std::vector<Elem> s(4);
      for (int i = 0; i < 4; ++i) s[i] = f.add(x[i], y[i]);
      Elem direct = f.sub(f.sub(oracle::evaluate_naive(q, s),
                                oracle::evaluate_naive(q, x)),
                          oracle::evaluate_naive(q, y));
      EXPECT_EQ(q.bilinear(x, y), direct);
    }
  }
}

TEST(QuadraticForm, RejectsLowerTriangularEntries) {
  auto f = make_field(3, 1);
  EXPECT_THROW(form(f, 2, {1, 0, 1, 1}), Error);
  EXPECT_THROW(form(f, 2, {1, 0}), Error);
}

TEST(Discriminant, Examples) {
  auto f3 = make_field(3, 1);
  EXPECT_TRUE(discriminant(hyperbolic(f3, 1)).trivial);
  EXPECT_FALSE(discriminant(norm_form(f3)).trivial);
  auto f2 = make_field(2, 1);
  auto q = form(f2, 2, {1, 1, 0, 1});
  EXPECT_FALSE(discriminant(q).trivial);
  EXPECT_TRUE(discriminant(q).characteristic_two);
  EXPECT_TRUE(discriminant(QuadraticForm(f3, 0)).trivial);
}

TEST(Discriminant, Errors) {
  auto f3 = make_field(3, 1);
  try {
    discriminant(form(f3, 2, {1, 0, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateForm);
  }
  auto f2 = make_field(2, 1);
  EXPECT_THROW(discriminant(form(f2, 1, {1})), Error);
  EXPECT_THROW(discriminant(form(f2, 3, {0, 1, 0, 0, 0, 0, 0, 0, 1})), Error);
  EXPECT_THROW(classify(form(f3, 1, {1})), Error);
}

TEST(Classify, Examples) {
  auto f5 = make_field(5, 1);
  EXPECT_EQ(classify(hyperbolic(f5, 2)), OType::Plus);
  EXPECT_EQ(classify(orthogonal_sum(hyperbolic(f5, 1), norm_form(f5))),
            OType::Minus);
  auto f2 = make_field(2, 1);
  EXPECT_EQ(classify(orthogonal_sum(norm_form(f2), norm_form(f2))), OType::Plus);
}

TEST(CountIsotropic, Examples) {
  auto f3 = make_field(3, 1);
  EXPECT_EQ(count_isotropic(hyperbolic(f3, 1)), 5u);
  EXPECT_EQ(count_isotropic(norm_form(f3)), 1u);
  EXPECT_EQ(count_isotropic(QuadraticForm(f3, 0)), 1u);
}

TEST(CountIsotropic, AgreesWithNaiveEvaluation) {
  std::mt19937_64 rng(11);
  for (const auto& f : small_fields())
    for (std::size_t n = 1; n <= 4; ++n) {
      auto q = oracle::random_form(rng, f, n);
      EXPECT_EQ(count_isotropic(q), oracle::count_zeros_naive(q));
    }
}

TEST(CountIsotropic, BudgetEnforced) {
  auto f = make_field(7, 1);
  setenv("ODISC_BUDGET", "1000", 1);
  try {
    count_isotropic(hyperbolic(f, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
  unsetenv("ODISC_BUDGET");
  EXPECT_EQ(count_isotropic(hyperbolic(f, 2)), 343u + 42u);
}

TEST(ClassifyByCount, DegenerateRejected) {
  auto f3 = make_field(3, 1);
  EXPECT_THROW(classify_by_count(form(f3, 2, {1, 0, 0, 0})), Error);
}

TEST(Classify, AgreesWithCountOnRandomForms) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    auto fields = small_fields();
    const auto& f = fields[rng() % fields.size()];
    std::size_t n = 2 * (1 + rng() % 3);
    if (f.order() >= 7 && n == 6) n = 4;
    auto q = oracle::random_form(rng, f, n);
    if (q.is_degenerate()) continue;
    EXPECT_EQ(classify(q), classify_by_count(q)) << f.name() << " dim " << n;
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST(Classify, InvariantUnderChangeOfBasis) {
  std::mt19937_64 rng(5);
  for (const auto& f : small_fields()) {
    for (int t = 0; t < 10; ++t) {
      auto q = oracle::random_form(rng, f, 4);
      if (q.is_degenerate()) continue;
      auto g = oracle::random_invertible(rng, f, 4);
      auto r = q.transformed(g);
      EXPECT_EQ(classify(q), classify(r));
      for (int s = 0; s < 20; ++s) {
        auto x = oracle::random_vector(rng, f, 4);
        EXPECT_EQ(r.evaluate(x), q.evaluate(g.row_times(x)));
      }
    }
  }
}

TEST(Discriminant, MultiplicativeOnOrthogonalSums) {
  std::mt19937_64 rng(99);
  for (const auto& f : small_fields()) {
    for (int t = 0; t < 15; ++t) {
      auto a = oracle::random_form(rng, f, 2);
      auto b = oracle::random_form(rng, f, 2 + 2 * (t % 2));
      if (a.is_degenerate() || b.is_degenerate()) continue;
      EXPECT_EQ(discriminant(orthogonal_sum(a, b)),
                discriminant(a) * discriminant(b));
    }
  }
}

TEST(Discriminant, ArfIndependentOfBasisOrder) {
  std::mt19937_64 rng(3);
  for (unsigned d = 1; d <= 3; ++d) {
    auto f = make_field(2, d);
    for (int t = 0; t < 10; ++t) {
      auto q = oracle::random_form(rng, f, 6);
      if (q.is_degenerate()) continue;
      bool base = discriminant(q).trivial;
      std::vector<std::size_t> order{0, 1, 2, 3, 4, 5};
      for (int s = 0; s < 20; ++s) {
        std::shuffle(order.begin(), order.end(), rng);
        EXPECT_EQ(absolute_trace(f, arf_sum(q, order)) == 0, base);
      }
    }
  }
}

TEST(SumRules, MinusPlusMinusIsPlus) {
  for (const auto& f : small_fields()) {
    auto n = norm_form(f);
    auto h = hyperbolic(f, 1);
    for (std::size_t m = 0; m <= 1; ++m) {
      auto a = m ? orthogonal_sum(h, n) : n;
      EXPECT_EQ(classify(orthogonal_sum(a, n)), OType::Plus);
      EXPECT_EQ(classify(orthogonal_sum(a, h)), OType::Minus);
      EXPECT_EQ(classify_by_count(orthogonal_sum(a, n)), OType::Plus);
    }
  }
}

TEST(Constructors, Examples) {
  auto f2 = make_field(2, 1);
  auto h = hyperbolic(f2, 1);
  EXPECT_EQ(h.coeff(0, 1), Elem{1});
  EXPECT_EQ(h.coeff(0, 0), Elem{0});
  auto n2 = norm_form(f2);
  EXPECT_EQ(n2.coeff(0, 0), Elem{1});
  EXPECT_EQ(n2.coeff(0, 1), Elem{1});
  EXPECT_EQ(n2.coeff(1, 1), Elem{1});
  auto f5 = make_field(5, 1);
  auto n5 = norm_form(f5);
  EXPECT_EQ(classify(n5), OType::Minus);
  EXPECT_EQ(classify_by_count(n5), OType::Minus);
  // N(a + b g) = (a + b g)(a + b g^5): nonzero away from 0.
  EXPECT_EQ(count_isotropic(n5), 1u);
}

TEST(RestrictScalars, Examples) {
  auto f9 = make_field(3, 2);
  auto r = restrict_scalars(norm_form(f9), 1);
  EXPECT_EQ(r.dim(), 4u);
  EXPECT_EQ(classify(r), OType::Minus);
  EXPECT_EQ(classify_by_count(r), OType::Minus);
  auto f4 = make_field(2, 2);
  auto rh = restrict_scalars(hyperbolic(f4, 1), 1);
  EXPECT_EQ(rh.dim(), 4u);
  EXPECT_EQ(classify(rh), OType::Plus);
  auto f25 = make_field(5, 2);
  auto r25 = restrict_scalars(norm_form(f25), 1);
  EXPECT_EQ(classify_by_count(r25), OType::Minus);
  EXPECT_THROW(restrict_scalars(norm_form(f9), 3), Error);
}

TEST(RestrictScalars, PreservesTypeAgainstCount) {
  std::mt19937_64 rng(17);
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
    auto f = make_field(p, k);
    for (int t = 0; t < 6; ++t) {
      auto q = oracle::random_form(rng, f, 2);
      if (q.is_degenerate()) continue;
      auto r = restrict_scalars(q, 1);
      EXPECT_EQ(classify(r), classify(q));
      if (r.dim() <= 6 || p == 2) EXPECT_EQ(classify_by_count(r), classify(q));
    }
  }
}

TEST(ExtendScalars, ParityRule) {
  auto f3 = make_field(3, 1);
  EXPECT_EQ(classify(extend_scalars(norm_form(f3), 2)), OType::Plus);
  EXPECT_EQ(classify(extend_scalars(norm_form(f3), 3)), OType::Minus);
  auto f2 = make_field(2, 1);
  for (unsigned d = 1; d <= 4; ++d) {
    EXPECT_EQ(classify(extend_scalars(hyperbolic(f2, 1), d)), OType::Plus);
    auto e = extend_scalars(norm_form(f2), d);
    EXPECT_EQ(classify(e), d % 2 ? OType::Minus : OType::Plus);
    EXPECT_EQ(classify_by_count(e), classify(e));
  }
}

TEST(Hermitian, Transfer) {
  auto f3 = make_field(3, 1);
  auto f2 = make_field(2, 1);
  EXPECT_EQ(hermitian_transfer(2, f3), OType::Plus);
  EXPECT_EQ(hermitian_transfer(1, f2), OType::Minus);
  EXPECT_EQ(hermitian_transfer(3, f3), OType::Minus);
  EXPECT_EQ(classify_by_count(hermitian_form(3, f3)), OType::Minus);
  EXPECT_THROW(hermitian_transfer(0, f3), Error);
  for (const auto& f : small_fields())
    for (unsigned n = 1; n <= 3; ++n) {
      auto h = hermitian_form(n, f);
      if (std::pow(double(f.order()), double(h.dim())) > 2e6) continue;
      EXPECT_EQ(classify_by_count(h), hermitian_transfer(n, f));
    }
}
