// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace odisc {

// Enumeration cap: ODISC_BUDGET if set to a positive integer, else `fallback`.
std::uint64_t enumeration_budget(std::uint64_t fallback);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

}  // namespace odisc
