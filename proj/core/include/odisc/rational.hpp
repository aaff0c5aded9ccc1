// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace odisc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "17", "-3/2". Throws on anything else.
Rational parse_rational(const std::string& s);
std::string to_string(const Integer& n);
std::string to_string(const Rational& r);

/// a mod m in [0, m).
Integer mod_floor(const Integer& a, const Integer& m);
Integer lcm_denominators(const std::vector<Rational>& v);
/// Largest k with p^k | n (n != 0).
unsigned p_valuation(Integer n, std::uint32_t p);

}  // namespace odisc
