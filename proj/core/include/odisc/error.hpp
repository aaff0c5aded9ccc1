// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace odisc {

enum class ErrorKind {
  InvalidArgument,  // bad parameters or corrupt input data
  DegenerateForm,
  BudgetExceeded,
  Inconsistent,     // solver facts admit no candidate
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, what);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(what);
}

}  // namespace odisc
