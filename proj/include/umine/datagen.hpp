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
#include <string>
#include <string_view>
#include <vector>

#include "umine/error.hpp"
#include "umine/io.hpp"
#include "umine/rng.hpp"

namespace umine {

struct SynthSpec {
  std::size_t n_transactions = 0;
  std::size_t n_items = 0;
  double avg_len = 0.0;
};

namespace detail {

// Mean of a zero-truncated Poisson is lambda / (1 - e^-lambda); invert by
// bisection so realized transaction lengths average to the requested value.
inline double ztp_lambda_for_mean(double mean) {
  if (mean <= 1.0 + 1e-9) return 0.0;  // degenerate: every length is 1
  double lo = 1e-9, hi = mean;
  for (int i = 0; i < 80; ++i) {
    double mid = 0.5 * (lo + hi);
    double m = mid / (1.0 - std::exp(-mid));
    if (m < mean) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Two-tier popularity: a small head of items under Zipf(0.6) weights takes a
// fixed share of draws, the tail is uniform. The gap between tiers keeps the
// frequent-item set stable across database sizes.
struct Popularity {
  std::size_t head_size = 0;
  std::vector<double> head_cdf;

  explicit Popularity(std::size_t n_items) {
    head_size = std::max<std::size_t>(2, n_items / 40);
    if (head_size > n_items) head_size = n_items;
    head_cdf.resize(head_size);
    double total = 0.0;
    for (std::size_t k = 0; k < head_size; ++k) {
      total += std::pow(static_cast<double>(k + 1), -0.6);
      head_cdf[k] = total;
    }
    for (double& c : head_cdf) c /= total;
  }

  ItemId draw_head(SeededRng& rng) const {
    double u = rng.uniform01();
    auto it = std::lower_bound(head_cdf.begin(), head_cdf.end(), u);
    if (it == head_cdf.end()) --it;
    return static_cast<ItemId>(it - head_cdf.begin());
  }
};

}  // namespace detail

/// Synthetic market-basket generator. Transaction lengths are zero-truncated
/// Poisson tuned to average avg_len; items mix a skewed popular head (55% of
/// draws), a uniform tail, and an injected pattern pool (random subsets of
/// the head) so that frequent itemsets of size >= 2 exist at scale. Item ids
/// are 1-based and dense in [1, n_items].
inline DetDatabase generate_synthetic(const SynthSpec& spec,
                                      std::uint64_t seed) {
  if (spec.n_transactions == 0) {
    throw ParamError("n_transactions must be >= 1");
  }
  if (spec.n_items == 0) throw ParamError("n_items must be >= 1");
  if (!(spec.avg_len >= 1.0) ||
      spec.avg_len > static_cast<double>(spec.n_items)) {
    throw ParamError("avg_len must lie in [1, n_items]");
  }
  SeededRng rng(seed);
  detail::Popularity pop(spec.n_items);
  const double lambda = detail::ztp_lambda_for_mean(spec.avg_len);

  // Pattern pool: random head subsets, sized toward min(0.6 * avg_len, 15).
  const std::size_t n_patterns = std::max<std::size_t>(2, spec.n_items / 50);
  double pat_mean = std::min(spec.avg_len * 0.6, 15.0);
  std::vector<std::vector<ItemId>> patterns(n_patterns);
  for (auto& pat : patterns) {
    std::size_t want = std::min<std::size_t>(
        pop.head_size, 2 + rng.poisson(std::max(0.0, pat_mean - 2.0)));
    while (pat.size() < want) {
      ItemId cand = pop.draw_head(rng);
      if (std::find(pat.begin(), pat.end(), cand) == pat.end()) {
        pat.push_back(cand);
      }
    }
  }

  DetDatabase db;
  db.reserve(spec.n_transactions);
  std::vector<ItemId> txn;
  std::vector<bool> in_txn(spec.n_items, false);
  for (std::size_t ti = 0; ti < spec.n_transactions; ++ti) {
    std::size_t len = 1;
    if (lambda > 0.0) {
      do {
        len = rng.poisson(lambda);
      } while (len == 0);
      len = std::min(len, spec.n_items);
    }
    txn.clear();
    auto add = [&](ItemId id) {
      if (!in_txn[id]) {
        in_txn[id] = true;
        txn.push_back(id);
      }
    };
    if (rng.uniform01() < 0.5) {
      const auto& pat = patterns[rng.uniform_below(patterns.size())];
      for (ItemId m : pat) {
        if (txn.size() >= len) break;
        if (rng.uniform01() < 0.7) add(m);
      }
    }
    std::size_t misses = 0;
    while (txn.size() < len) {
      ItemId cand = rng.uniform01() < 0.55
                        ? pop.draw_head(rng)
                        : static_cast<ItemId>(rng.uniform_below(spec.n_items));
      if (in_txn[cand]) {
        // Dense transactions make rejection slow; finish with a sweep.
        if (++misses > 50 * spec.n_items) {
          for (ItemId id = 0; id < spec.n_items && txn.size() < len; ++id) {
            add(id);
          }
          break;
        }
        continue;
      }
      add(cand);
    }
    for (ItemId id : txn) in_txn[id] = false;
    std::sort(txn.begin(), txn.end());
    DetTransaction out;
    out.reserve(txn.size());
    for (ItemId id : txn) out.push_back(id + 1);  // 1-based ids
    db.push_back(std::move(out));
  }
  return db;
}

/// Named dataset recipe: shape, probability-assignment defaults, and the
/// threshold defaults experiments use with it.
struct Scenario {
  std::string name;
  SynthSpec synth;
  double mean = 0.5;
  double variance = 0.5;
  double min_sup = 0.5;  // default for both min_sup and min_esup
  double pft = 0.9;
};

inline const std::vector<Scenario>& scenario_table() {
  static const std::vector<Scenario> table = {
      {"connect", {67557, 129, 43.0}, 0.95, 0.05, 0.5, 0.9},
      {"accident", {340183, 468, 33.8}, 0.5, 0.5, 0.5, 0.9},
      {"kosarak", {990002, 41270, 8.1}, 0.5, 0.5, 0.0005, 0.9},
      {"gazelle", {59601, 498, 2.5}, 0.95, 0.05, 0.025, 0.9},
      {"t25i15d320k", {320000, 994, 25.0}, 0.9, 0.1, 0.1, 0.9},
  };
  return table;
}

/// Looks up a scenario by name. `name-<count>[k|m]` (e.g. "accident-50k")
/// rescales the transaction count while keeping item universe and average
/// length, hence density, unchanged.
inline Scenario scenario(std::string_view name) {
  for (const Scenario& s : scenario_table()) {
    if (s.name == name) return s;
  }
  auto dash = name.rfind('-');
  if (dash != std::string_view::npos) {
    std::string_view base = name.substr(0, dash);
    std::string_view suffix = name.substr(dash + 1);
    std::uint64_t scale = 1;
    if (!suffix.empty() &&
        (suffix.back() == 'k' || suffix.back() == 'm')) {
      scale = suffix.back() == 'k' ? 1000 : 1000000;
      suffix.remove_suffix(1);
    }
    std::uint64_t count = 0;
    bool all_digits = !suffix.empty();
    for (char c : suffix) {
      if (c < '0' || c > '9') {
        all_digits = false;
        break;
      }
      count = count * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (all_digits) {
      for (const Scenario& s : scenario_table()) {
        if (s.name == base) {
          Scenario scaled = s;
          scaled.name = std::string(name);
          scaled.synth.n_transactions = count * scale;
          if (scaled.synth.n_transactions == 0) {
            throw ParamError("scenario scale must be >= 1 transaction");
          }
          return scaled;
        }
      }
    }
  }
  throw ParamError("unknown scenario: " + std::string(name));
}

}  // namespace umine
