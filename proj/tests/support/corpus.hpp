// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "connlap/graph.hpp"

namespace connlap::testing {

/// Deterministic families at small sizes, refinements and unions of them.
const std::vector<Graph>& deterministic_corpus();

/// gnm graphs with n in 2..20 and seeds 1000, 1001, ...
const std::vector<Graph>& random_corpus();

/// Both of the above, deterministic part first.
const std::vector<Graph>& full_corpus();

inline constexpr std::uint64_t kRandomCorpusSeed = 1000;
inline constexpr int kRandomCorpusSize = 100;

}  // namespace connlap::testing
