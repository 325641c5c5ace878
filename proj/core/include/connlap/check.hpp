// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace connlap {

/// Outcome of one named verification.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace connlap
