// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#include "qbrach/config.hpp"

namespace qbrach {

Config& config() {
  static Config instance;
  return instance;
}

}  // namespace qbrach
