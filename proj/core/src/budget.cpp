// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "odisc/budget.hpp"

#include <cstdlib>
#include <string>

namespace odisc {

std::uint64_t enumeration_budget(std::uint64_t fallback) {
  const char* env = std::getenv("ODISC_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  return fallback;
}

}  // namespace odisc
