// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace odisc::cli {

enum ExitCode : int { kOk = 0, kEmpty = 1, kBadInput = 2, kBudget = 3 };

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace odisc::cli
