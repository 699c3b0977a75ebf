// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#include "qbrach/error.hpp"

namespace qbrach {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZERO_VECTOR";
    case ErrorCode::ParallelStates: return "PARALLEL_STATES";
    case ErrorCode::BadGap: return "BAD_GAP";
    case ErrorCode::Unreachable: return "UNREACHABLE";
    case ErrorCode::BrokenPT: return "BROKEN_PT";
    case ErrorCode::NotPositive: return "NOT_POSITIVE";
    case ErrorCode::CompletionFailure: return "COMPLETION_FAILURE";
    case ErrorCode::BadSpec: return "BAD_SPEC";
    case ErrorCode::StepTooLarge: return "STEP_TOO_LARGE";
    case ErrorCode::NoClosure: return "NO_CLOSURE";
  }
  return "UNKNOWN";
}

}  // namespace qbrach
