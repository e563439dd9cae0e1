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
#include <cmath>
#include <vector>

#include "umine/io.hpp"
#include "umine/rng.hpp"
#include "umine/types.hpp"

namespace umine {

/// Gaussian probability assignment: each (transaction, item) occurrence gets
/// an independent draw from N(mean, variance) clamped into [0.01, 1.0].
/// Draw order is transaction-major, items in ascending id order, so a seed
/// pins the exact output database.
inline UncertainDatabase assign_gaussian(const DetDatabase& det, double mean,
                                         double variance, std::uint64_t seed) {
  if (!(mean >= 0.0 && mean <= 1.0)) {
    throw ParamError("gaussian mean must lie in [0,1]");
  }
  if (!(variance >= 0.0)) throw ParamError("gaussian variance must be >= 0");
  SeededRng rng(seed);
  double stddev = std::sqrt(variance);
  std::vector<UncertainTransaction> ts;
  ts.reserve(det.size());
  for (std::size_t ti = 0; ti < det.size(); ++ti) {
    std::vector<Unit> units;
    units.reserve(det[ti].size());
    for (ItemId id : det[ti]) {
      double p = variance == 0.0 ? mean : rng.normal(mean, stddev);
      p = std::clamp(p, 0.01, 1.0);
      units.push_back(Unit{id, Probability(p)});
    }
    ts.emplace_back(ti + 1, std::move(units));
  }
  return UncertainDatabase(std::move(ts));
}

/// Zipf probability assignment: each occurrence draws rank ~ Uniform{1..100}
/// and gets probability rank^(-skew); occurrences with probability at or
/// below zero_cutoff are dropped entirely. Larger skew pushes more mass
/// under the cutoff, so databases thin out as skew grows.
inline UncertainDatabase assign_zipf(const DetDatabase& det, double skew,
                                     double zero_cutoff, std::uint64_t seed) {
  if (!(skew > 0.0)) throw ParamError("zipf skew must be > 0");
  if (!(zero_cutoff >= 0.0 && zero_cutoff < 1.0)) {
    throw ParamError("zero_cutoff must lie in [0,1)");
  }
  SeededRng rng(seed);
  std::vector<UncertainTransaction> ts;
  ts.reserve(det.size());
  for (std::size_t ti = 0; ti < det.size(); ++ti) {
    std::vector<Unit> units;
    for (ItemId id : det[ti]) {
      auto rank = static_cast<double>(1 + rng.uniform_below(100));
      double p = std::pow(rank, -skew);
      if (p <= zero_cutoff) continue;
      units.push_back(Unit{id, Probability(p)});
    }
    ts.emplace_back(ti + 1, std::move(units));
  }
  return UncertainDatabase(std::move(ts));
}

}  // namespace umine
