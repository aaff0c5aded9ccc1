// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Polynomials over GF(p) (p < 2^31) and over Z/p^N, least significant first.

#include <cstdint>
#include <utility>
#include <vector>

#include "odisc/rational.hpp"

namespace odisc::zp {

using Poly = std::vector<std::int64_t>;

void trim(Poly& a);
std::int64_t inv_mod(std::int64_t a, std::int64_t p);
Poly reduce(const std::vector<Integer>& a, std::int64_t p);
Poly add(const Poly& a, const Poly& b, std::int64_t p);
Poly sub(const Poly& a, const Poly& b, std::int64_t p);
Poly mul(const Poly& a, const Poly& b, std::int64_t p);
Poly scale(const Poly& a, std::int64_t c, std::int64_t p);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::int64_t p);
Poly rem(const Poly& a, const Poly& b, std::int64_t p);
Poly monic(const Poly& a, std::int64_t p);
Poly gcd(Poly a, Poly b, std::int64_t p);
/// g = gcd(a, b) monic, with s*a + t*b = g.
Poly ext_gcd(const Poly& a, const Poly& b, std::int64_t p, Poly& s, Poly& t);
Poly powmod(Poly base, const Integer& e, const Poly& m, std::int64_t p);
Poly derivative(const Poly& a, std::int64_t p);
bool is_zero(const Poly& a);

/// Monic irreducible factors with multiplicities, sorted by degree, then by
/// coefficients from the constant term up. `a` must be nonzero.
std::vector<std::pair<Poly, unsigned>> factor(const Poly& a, std::int64_t p);

// Z/p^N arithmetic on Integer coefficient vectors.
using BigPoly = std::vector<Integer>;
BigPoly big_mul(const BigPoly& a, const BigPoly& b, const Integer& m);
/// Remainder by a monic divisor.
BigPoly big_rem(BigPoly a, const BigPoly& monic_b, const Integer& m);
/// Exact quotient by a monic divisor (remainder discarded).
BigPoly big_div(BigPoly a, const BigPoly& monic_b, const Integer& m);
BigPoly to_big(const Poly& a);

/// Lifts f = g*h (mod p), g monic and gcd(g, h) = 1 mod p, to mod p^n.
/// f need not be monic as long as its leading coefficient is a unit.
void hensel_lift(const BigPoly& f, Poly g0, Poly h0, std::int64_t p, unsigned n,
                 BigPoly& g, BigPoly& h);

}  // namespace odisc::zp
