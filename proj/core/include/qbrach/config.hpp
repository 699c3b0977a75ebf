// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>

namespace qbrach {

// Global run configuration. hbar defaults to 1 so that desk-scale checks read
// directly in natural units; every time-dependent formula pulls it from here.
struct Config {
  double hbar = 1.0;
  std::map<std::string, double, std::less<>> tolerances;

  double tolerance(std::string_view name, double fallback) const {
    auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
  }
};

Config& config();

inline double hbar() { return config().hbar; }

}  // namespace qbrach
