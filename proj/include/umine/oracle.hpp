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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "umine/error.hpp"
#include "umine/types.hpp"

// Reference implementations: small, direct, independent of the miners. They
// exist to be trusted, not to be fast.

namespace umine {

/// Per-transaction probabilities that a fixed itemset is contained; the
/// support count is the sum of independent Bernoulli(q_t) draws.
inline std::vector<double> containment_vector(const UncertainDatabase& db,
                                              std::span<const ItemId> items) {
  std::vector<double> qs;
  qs.reserve(db.n());
  for (const auto& t : db.transactions()) {
    qs.push_back(containment_prob(t, items));
  }
  return qs;
}

inline double exact_esup(const UncertainDatabase& db,
                         std::span<const ItemId> items) {
  double s = 0.0;
  for (const auto& t : db.transactions()) s += containment_prob(t, items);
  return s;
}

/// Poisson-binomial variance of the support count: sum of q(1-q).
inline double exact_variance(const UncertainDatabase& db,
                             std::span<const ItemId> items) {
  double v = 0.0;
  for (const auto& t : db.transactions()) {
    double q = containment_prob(t, items);
    v += q * (1.0 - q);
  }
  return v;
}

/// Distribution of an itemset's support count. Uncapped: pmf over 0..n.
/// Capped at c: pmf over 0..c where index c holds Pr(support >= c); indices
/// below c are exact.
class SupportDistribution {
 public:
  SupportDistribution(std::vector<double> pmf, bool capped)
      : pmf_(std::move(pmf)), capped_(capped) {}

  const std::vector<double>& pmf() const noexcept { return pmf_; }
  bool capped() const noexcept { return capped_; }
  /// Largest index: n when uncapped, the cap when capped.
  std::size_t top() const noexcept { return pmf_.size() - 1; }

  double prob_at_least(std::size_t k) const {
    if (k > top() && capped_) {
      throw ParamError("tail query beyond the cap of a capped distribution");
    }
    double s = 0.0;
    for (std::size_t i = k; i < pmf_.size(); ++i) s += pmf_[i];
    return s;
  }

  double mean() const {
    if (capped_) throw ParamError("mean of a capped distribution");
    double m = 0.0;
    for (std::size_t k = 0; k < pmf_.size(); ++k) {
      m += static_cast<double>(k) * pmf_[k];
    }
    return m;
  }

  double variance() const {
    if (capped_) throw ParamError("variance of a capped distribution");
    double m = mean(), s = 0.0;
    for (std::size_t k = 0; k < pmf_.size(); ++k) {
      double d = static_cast<double>(k) - m;
      s += d * d * pmf_[k];
    }
    return s;
  }

 private:
  std::vector<double> pmf_;
  bool capped_;
};

/// One-transaction-at-a-time convolution, O(n * top). With a cap c, bucket c
/// absorbs all mass at or above c (a world that reached c stays there).
inline SupportDistribution support_distribution(
    const UncertainDatabase& db, std::span<const ItemId> items,
    std::optional<std::size_t> cap = std::nullopt) {
  std::size_t topk = cap.value_or(db.n());
  if (cap && *cap > db.n()) {
    throw ParamError("cap exceeds transaction count");
  }
  std::vector<double> dp(topk + 1, 0.0);
  dp[0] = 1.0;
  for (const auto& t : db.transactions()) {
    double q = containment_prob(t, items);
    if (q == 0.0) continue;
    for (std::size_t k = topk; k >= 1; --k) {
      bool absorbing = cap.has_value() && k == topk;
      dp[k] = (absorbing ? dp[k] : dp[k] * (1.0 - q)) + dp[k - 1] * q;
    }
    dp[0] *= 1.0 - q;
  }
  return SupportDistribution(std::move(dp), cap.has_value());
}

/// Pr(support >= ms): the frequent probability of an itemset.
inline double frequent_probability(const UncertainDatabase& db,
                                   std::span<const ItemId> items,
                                   std::size_t ms) {
  if (ms == 0) return 1.0;
  if (ms > db.n()) return 0.0;
  return support_distribution(db, items, ms).pmf().back();
}

struct World {
  std::size_t support = 0;
  double prob = 0.0;
};

inline constexpr std::size_t kMaxWorldTransactions = 20;

/// All possible worlds projected onto one itemset: branches only on
/// transactions with containment probability strictly inside (0,1), so a
/// database with u such transactions yields 2^u worlds. Worlds appear in
/// binary-counter order (bit i set = i-th uncertain transaction contains the
/// itemset).
inline std::vector<World> enumerate_worlds(const UncertainDatabase& db,
                                           std::span<const ItemId> items) {
  std::vector<double> qs;
  std::size_t certain = 0;
  for (const auto& t : db.transactions()) {
    double q = containment_prob(t, items);
    if (q == 1.0) {
      ++certain;
    } else if (q > 0.0) {
      qs.push_back(q);
    }
  }
  if (qs.size() > kMaxWorldTransactions) {
    throw SizeError("too many uncertain transactions to enumerate: " +
                    std::to_string(qs.size()));
  }
  std::vector<World> worlds;
  worlds.reserve(std::size_t{1} << qs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << qs.size());
       ++mask) {
    World w;
    w.support = certain;
    w.prob = 1.0;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      if (mask >> i & 1) {
        w.prob *= qs[i];
        ++w.support;
      } else {
        w.prob *= 1.0 - qs[i];
      }
    }
    worlds.push_back(w);
  }
  return worlds;
}

struct ScoredItemset {
  Itemset items;
  double value;  // esup or frequent probability, per containing list
};

struct GroundTruth {
  std::vector<ScoredItemset> esup_frequent;  // value = expected support
  std::vector<ScoredItemset> prob_frequent;  // value = Pr(support >= ms)
};

inline constexpr std::size_t kMaxBruteForceItems = 16;

/// Enumerates every non-empty subset of the item universe and classifies it
/// against both definitions. Output sorted lexicographically by itemset.
inline GroundTruth brute_force_mine(const UncertainDatabase& db,
                                    const MiningParams& params) {
  auto universe = db.item_universe();
  if (universe.size() > kMaxBruteForceItems) {
    throw SizeError("item universe too large for brute force: " +
                    std::to_string(universe.size()));
  }
  GroundTruth gt;
  double min_esup_count = params.min_esup_count();
  for (std::uint32_t mask = 1;
       mask < (std::uint32_t{1} << universe.size()); ++mask) {
    std::vector<ItemId> items;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (mask >> i & 1) items.push_back(universe[i]);
    }
    double esup = exact_esup(db, items);
    if (esup >= min_esup_count) {
      gt.esup_frequent.push_back(ScoredItemset{Itemset(items), esup});
    }
    double fp = frequent_probability(db, items, params.ms);
    if (fp > params.pft) {
      gt.prob_frequent.push_back(ScoredItemset{Itemset(items), fp});
    }
  }
  auto by_items = [](const ScoredItemset& a, const ScoredItemset& b) {
    return a.items < b.items;
  };
  std::sort(gt.esup_frequent.begin(), gt.esup_frequent.end(), by_items);
  std::sort(gt.prob_frequent.begin(), gt.prob_frequent.end(), by_items);
  return gt;
}

}  // namespace umine
