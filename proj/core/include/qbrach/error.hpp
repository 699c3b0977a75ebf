// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qbrach {

enum class ErrorCode {
  ZeroVector,
  ParallelStates,
  BadGap,
  Unreachable,
  BrokenPT,
  NotPositive,
  CompletionFailure,
  BadSpec,
  StepTooLarge,
  NoClosure,
};

// Wire name of an error code ("BROKEN_PT", ...), used by the CLI error object.
const char* error_name(ErrorCode code);

// Domain error. `tag` carries an optional extra diagnostic, e.g. "EXCEPTIONAL"
// on a BrokenPT raised exactly at the exceptional point.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string tag = {})
      : std::runtime_error(message), code_(code), tag_(std::move(tag)) {}

  ErrorCode code() const { return code_; }
  const std::string& tag() const { return tag_; }

 private:
  ErrorCode code_;
  std::string tag_;
};

}  // namespace qbrach
