// Copyright 2026 The umine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "umine/types.hpp"

namespace umine {

struct ReportedItemset {
  Itemset items;
  double esup = 0.0;
  /// Pr(support >= ms) when the mining definition produces one (exact
  /// miners report the true value, approximate miners their estimate).
  std::optional<double> freq_prob;
};

struct RunMetrics {
  double wall_ms = 0.0;
  std::size_t peak_bytes = 0;  // filled by the harness, not the miner
  /// Candidates scored across all levels, level 1 included.
  std::size_t candidate_count = 0;
  /// Candidates rejected by the Chernoff bound before exact evaluation.
  std::size_t pruned_count = 0;
  /// Candidates per level, starting at level 2.
  std::vector<std::size_t> level_candidate_counts;
};

struct MiningReport {
  std::string algorithm;
  std::vector<ReportedItemset> itemsets;  // sorted lexicographically
  RunMetrics metrics;
};

inline void sort_report(MiningReport& r) {
  std::sort(r.itemsets.begin(), r.itemsets.end(),
            [](const ReportedItemset& a, const ReportedItemset& b) {
              return a.items < b.items;
            });
}

}  // namespace umine
