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
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "umine/error.hpp"

namespace umine {

using ItemId = std::uint32_t;

/// A value in [0,1]. Construction rejects anything else (including NaN).
class Probability {
 public:
  Probability() = default;
  explicit Probability(double v) : v_(v) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ParamError("probability out of [0,1]: " + std::to_string(v));
    }
  }
  double value() const noexcept { return v_; }
  friend bool operator==(Probability a, Probability b) noexcept {
    return a.v_ == b.v_;
  }
  friend auto operator<=>(Probability a, Probability b) noexcept {
    return a.v_ <=> b.v_;
  }

 private:
  double v_ = 0.0;
};

/// One item occurrence inside a transaction with its existence probability.
struct Unit {
  ItemId item = 0;
  Probability prob;
};

/// Non-empty, sorted, duplicate-free set of item ids.
class Itemset {
 public:
  explicit Itemset(std::vector<ItemId> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    if (items_.empty()) throw ParamError("itemset must be non-empty");
  }
  Itemset(std::initializer_list<ItemId> items)
      : Itemset(std::vector<ItemId>(items)) {}

  std::span<const ItemId> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool contains(ItemId id) const {
    return std::binary_search(items_.begin(), items_.end(), id);
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(items_[i]);
    }
    return s;
  }

  friend bool operator==(const Itemset& a, const Itemset& b) = default;
  friend auto operator<=>(const Itemset& a, const Itemset& b) = default;

 private:
  std::vector<ItemId> items_;
};

/// Units sorted by strictly increasing item id; zero-probability units are
/// dropped on construction, duplicates rejected.
class UncertainTransaction {
 public:
  UncertainTransaction() = default;
  UncertainTransaction(std::uint64_t tid, std::vector<Unit> units)
      : tid_(tid), units_(std::move(units)) {
    std::erase_if(units_, [](const Unit& u) { return u.prob.value() == 0.0; });
    std::sort(units_.begin(), units_.end(),
              [](const Unit& a, const Unit& b) { return a.item < b.item; });
    for (std::size_t i = 1; i < units_.size(); ++i) {
      if (units_[i].item == units_[i - 1].item) {
        throw ParamError("duplicate item " + std::to_string(units_[i].item) +
                         " in transaction " + std::to_string(tid));
      }
    }
  }

  std::uint64_t tid() const noexcept { return tid_; }
  std::span<const Unit> units() const noexcept { return units_; }
  bool empty() const noexcept { return units_.empty(); }
  std::size_t size() const noexcept { return units_.size(); }

  /// Existence probability of one item; 0 when absent.
  double prob_of(ItemId id) const {
    auto it = std::lower_bound(
        units_.begin(), units_.end(), id,
        [](const Unit& u, ItemId v) { return u.item < v; });
    if (it == units_.end() || it->item != id) return 0.0;
    return it->prob.value();
  }

 private:
  std::uint64_t tid_ = 0;
  std::vector<Unit> units_;
};

/// Probability that every item in `items` (sorted, unique) appears in `t`.
/// Independence product over the transaction's units; 0 if any is missing.
inline double containment_prob(const UncertainTransaction& t,
                               std::span<const ItemId> items) {
  auto us = t.units();
  std::size_t ui = 0;
  double p = 1.0;
  for (ItemId want : items) {
    while (ui < us.size() && us[ui].item < want) ++ui;
    if (ui == us.size() || us[ui].item != want) return 0.0;
    p *= us[ui].prob.value();
    ++ui;
  }
  return p;
}

inline Probability itemset_prob(const UncertainTransaction& t,
                                const Itemset& x) {
  return Probability(containment_prob(t, x.items()));
}

/// Transactions in fixed order plus the sorted universe of item ids that
/// occur anywhere with positive probability. Empty transactions are allowed.
class UncertainDatabase {
 public:
  UncertainDatabase() = default;
  explicit UncertainDatabase(std::vector<UncertainTransaction> ts)
      : transactions_(std::move(ts)) {
    for (const auto& t : transactions_) {
      for (const Unit& u : t.units()) universe_.push_back(u.item);
    }
    std::sort(universe_.begin(), universe_.end());
    universe_.erase(std::unique(universe_.begin(), universe_.end()),
                    universe_.end());
  }

  std::span<const UncertainTransaction> transactions() const noexcept {
    return transactions_;
  }
  std::size_t n() const noexcept { return transactions_.size(); }
  std::span<const ItemId> item_universe() const noexcept { return universe_; }

 private:
  std::vector<UncertainTransaction> transactions_;
  std::vector<ItemId> universe_;
};

/// Absolute support count ms = ceil(n * min_sup), guarded against products
/// like 0.1 * 320000 landing one ulp above the integer they denote.
inline std::size_t absolute_min_support(std::size_t n, double min_sup) {
  double raw = static_cast<double>(n) * min_sup;
  auto ms = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  return ms < 1 ? 1 : ms;
}

/// Thresholds for one mining run. `ms` is derived once from (n, min_sup) so
/// every consumer agrees on the integer support bound.
struct MiningParams {
  double min_esup = 0.0;
  double min_sup = 0.0;
  double pft = 0.0;
  std::size_t n = 0;
  std::size_t ms = 0;

  static MiningParams for_db(std::size_t n, double min_esup, double min_sup,
                             double pft) {
    if (n == 0) throw ParamError("database must have at least one transaction");
    if (!(min_esup > 0.0 && min_esup <= 1.0)) {
      throw ParamError("min_esup must lie in (0,1]");
    }
    if (!(min_sup > 0.0 && min_sup <= 1.0)) {
      throw ParamError("min_sup must lie in (0,1]");
    }
    if (!(pft > 0.0 && pft < 1.0)) throw ParamError("pft must lie in (0,1)");
    MiningParams p;
    p.min_esup = min_esup;
    p.min_sup = min_sup;
    p.pft = pft;
    p.n = n;
    p.ms = absolute_min_support(n, min_sup);
    if (p.ms > n) throw InvariantError("ms exceeds transaction count");
    return p;
  }

  /// Absolute expected-support threshold n * min_esup.
  double min_esup_count() const noexcept {
    return static_cast<double>(n) * min_esup;
  }
};

}  // namespace umine
