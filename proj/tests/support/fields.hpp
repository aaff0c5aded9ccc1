// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Number fields used across the tests.

#include "odisc/numfield.hpp"

namespace odisc::fixtures {

/// Q(sqrt5), theta = (1+sqrt5)/2, printed on 1, sqrt5.
NumberField q_sqrt5();
/// Cubic subfield of Q(zeta_19): c^3 + c^2 - 6c - 7, sigma(c) = 4 - c^2,
/// printed on 1, c19, c19'.
NumberField q_c19();
/// Q(sqrt21), theta = (1+sqrt21)/2, printed on 1, sqrt21.
NumberField q_sqrt21();

/// Element with the given display coordinates, each divided by `den`.
NFElem disp(const NumberField& k, std::vector<long long> coords, long long den = 1);

}  // namespace odisc::fixtures

namespace odisc::fixtures {

/// The prime over p at which g has positive valuation, relabelled.
PrimeIdeal ideal_at(const NFElem& g, std::uint32_t p, const std::string& label);

}  // namespace odisc::fixtures
