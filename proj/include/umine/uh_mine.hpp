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
#include <map>
#include <optional>
#include <vector>

#include "umine/apriori.hpp"
#include "umine/deadline.hpp"
#include "umine/report.hpp"
#include "umine/types.hpp"

namespace umine {

/// Hyperlinked transaction structure. Each retained transaction becomes a
/// row of cells ordered by the head-table order (descending esup, ties by
/// ascending id); every cell carries a link to the next row containing the
/// same item, so an item's chain enumerates exactly its transactions.
class UhStruct {
 public:
  struct Cell {
    std::int32_t item_h = -1;  // head-table index
    double prob = 0.0;
    std::int32_t next_row = -1;
    std::int32_t next_cell = -1;
  };

  struct HeadEntry {
    ItemId item = 0;
    double esup = 0.0;
    double sumsq = 0.0;  // sum of squared unit probabilities
    std::int32_t head_row = -1;
    std::int32_t head_cell = -1;
  };

  /// keep[i] selects universe items that enter the structure; esup/sumsq are
  /// their level-1 accumulations (indexed like the universe).
  UhStruct(const UncertainDatabase& db, const std::vector<bool>& keep,
           const std::vector<double>& esup, const std::vector<double>& sumsq) {
    auto universe = db.item_universe();
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (keep[i]) kept.push_back(i);
    }
    std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
      if (esup[a] != esup[b]) return esup[a] > esup[b];
      return universe[a] < universe[b];
    });
    head_.reserve(kept.size());
    std::vector<std::int32_t> univ2h(universe.size(), -1);
    for (std::size_t h = 0; h < kept.size(); ++h) {
      head_.push_back(HeadEntry{universe[kept[h]], esup[kept[h]],
                                sumsq[kept[h]], -1, -1});
      univ2h[kept[h]] = static_cast<std::int32_t>(h);
    }

    std::vector<std::pair<std::int32_t, std::int32_t>> last(
        head_.size(), {-1, -1});  // chain tails
    std::vector<Cell> cells;
    for (const auto& t : db.transactions()) {
      cells.clear();
      for (const Unit& u : t.units()) {
        auto it = std::lower_bound(universe.begin(), universe.end(), u.item);
        std::int32_t h = univ2h[static_cast<std::size_t>(it - universe.begin())];
        if (h >= 0) cells.push_back(Cell{h, u.prob.value(), -1, -1});
      }
      if (cells.empty()) continue;
      std::sort(cells.begin(), cells.end(),
                [](const Cell& a, const Cell& b) { return a.item_h < b.item_h; });
      auto row = static_cast<std::int32_t>(rows_.size());
      rows_.push_back(cells);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        auto h = static_cast<std::size_t>(cells[c].item_h);
        auto ref = std::pair<std::int32_t, std::int32_t>(
            row, static_cast<std::int32_t>(c));
        if (head_[h].head_row < 0) {
          head_[h].head_row = ref.first;
          head_[h].head_cell = ref.second;
        } else {
          Cell& tail = rows_[static_cast<std::size_t>(last[h].first)]
                            [static_cast<std::size_t>(last[h].second)];
          tail.next_row = ref.first;
          tail.next_cell = ref.second;
        }
        last[h] = ref;
      }
    }
  }

  const std::vector<HeadEntry>& head() const noexcept { return head_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

 private:
  std::vector<std::vector<Cell>> rows_;
  std::vector<HeadEntry> head_;
};

/// Expected-support acceptance: esup against the absolute threshold; no
/// probability to report.
struct EsupPolicy {
  double threshold = 0.0;
  bool accept(double esup, double /*sumsq*/) const {
    return esup >= threshold;
  }
  std::optional<double> report_value(double /*esup*/, double /*sumsq*/) const {
    return std::nullopt;
  }
};

namespace detail {

// One projected row: the current suffix is contained in `row` with
// probability `weight`; extension cells are those before `end_cell`.
struct UhCondEntry {
  std::int32_t row = 0;
  std::int32_t end_cell = 0;
  double weight = 0.0;
};

template <class Policy>
class UhMiner {
 public:
  UhMiner(const UhStruct& uh, const Policy& policy, const Deadline& dl,
          MiningReport& report)
      : uh_(uh), policy_(policy), dl_(dl), report_(report) {}

  void run() {
    const auto& head = uh_.head();
    for (std::size_t h = head.size(); h-- > 0;) {
      dl_.check();
      report_.itemsets.push_back(ReportedItemset{
          Itemset({head[h].item}), head[h].esup,
          policy_.report_value(head[h].esup, head[h].sumsq)});
      std::vector<UhCondEntry> cond;
      for (std::int32_t r = head[h].head_row, c = head[h].head_cell; r >= 0;) {
        const auto& cell =
            uh_.rows()[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        cond.push_back(UhCondEntry{r, c, cell.prob});
        std::int32_t nr = cell.next_row, nc = cell.next_cell;
        r = nr;
        c = nc;
      }
      suffix_.assign(1, head[h].item);
      extend(cond, static_cast<std::int32_t>(h));
    }
  }

 private:
  // Extends the suffix with items ordered before `h_limit`. `cond` lists the
  // rows containing the suffix.
  void extend(const std::vector<UhCondEntry>& cond, std::int32_t h_limit) {
    dl_.check();
    if (cond.empty() || h_limit == 0) return;
    std::vector<double> esup(static_cast<std::size_t>(h_limit), 0.0);
    std::vector<double> sumsq(static_cast<std::size_t>(h_limit), 0.0);
    std::vector<std::vector<UhCondEntry>> sub(
        static_cast<std::size_t>(h_limit));
    for (const UhCondEntry& e : cond) {
      const auto& row = uh_.rows()[static_cast<std::size_t>(e.row)];
      for (std::int32_t c = 0; c < e.end_cell; ++c) {
        const auto& cell = row[static_cast<std::size_t>(c)];
        auto h = static_cast<std::size_t>(cell.item_h);
        double q = e.weight * cell.prob;
        esup[h] += q;
        sumsq[h] += q * q;
        sub[h].push_back(UhCondEntry{e.row, c, q});
      }
    }
    for (std::size_t h = static_cast<std::size_t>(h_limit); h-- > 0;) {
      if (sub[h].empty()) continue;
      ++report_.metrics.candidate_count;
      bump_level_count(suffix_.size() + 1);
      if (!policy_.accept(esup[h], sumsq[h])) continue;
      std::vector<ItemId> items = suffix_;
      items.push_back(uh_.head()[h].item);
      report_.itemsets.push_back(
          ReportedItemset{Itemset(items), esup[h],
                          policy_.report_value(esup[h], sumsq[h])});
      suffix_.push_back(uh_.head()[h].item);
      extend(sub[h], static_cast<std::int32_t>(h));
      suffix_.pop_back();
    }
  }

  void bump_level_count(std::size_t level) {
    auto& counts = report_.metrics.level_candidate_counts;
    if (counts.size() < level - 1) counts.resize(level - 1, 0);
    ++counts[level - 2];
  }

  const UhStruct& uh_;
  const Policy& policy_;
  const Deadline& dl_;
  MiningReport& report_;
  std::vector<ItemId> suffix_;
};

}  // namespace detail

/// Shared UH-Mine driver: level-1 filtering and acceptance are delegated to
/// the policy, so the exact expected-support miner and the normal-
/// approximation miner share the traversal.
template <class Policy>
MiningReport uh_mine_with_policy(const UncertainDatabase& db,
                                 const Policy& policy, const char* name,
                                 const RunOptions& opt = {}) {
  MiningReport report;
  report.algorithm = name;
  auto universe = db.item_universe();
  std::vector<double> esup, sumsq;
  item_esups(db, esup, &sumsq);
  report.metrics.candidate_count = universe.size();
  std::vector<bool> keep(universe.size(), false);
  for (std::size_t i = 0; i < universe.size(); ++i) {
    keep[i] = policy.accept(esup[i], sumsq[i]);
  }
  UhStruct uh(db, keep, esup, sumsq);
  detail::UhMiner<Policy> miner(uh, policy, opt.deadline, report);
  miner.run();
  sort_report(report);
  return report;
}

/// UH-Mine: hyperstructure mining of the expected-support result. Conditional
/// esups are exact, so no verification pass is needed.
inline MiningReport uh_mine(const UncertainDatabase& db, double min_esup,
                            const RunOptions& opt = {}) {
  if (!(min_esup > 0.0 && min_esup <= 1.0)) {
    throw ParamError("min_esup must lie in (0,1]");
  }
  EsupPolicy policy{static_cast<double>(db.n()) * min_esup};
  return uh_mine_with_policy(db, policy, "uhmine", opt);
}

/// First-level conditional head table for a single-item suffix: every item
/// ordered before `suffix_item` that co-occurs with it, with the exact
/// conditional esup. Exposed for inspection and tests.
inline std::vector<std::pair<ItemId, double>> uh_conditional_esups(
    const UncertainDatabase& db, double min_esup, ItemId suffix_item) {
  auto universe = db.item_universe();
  std::vector<double> esup, sumsq;
  item_esups(db, esup, &sumsq);
  const double threshold = static_cast<double>(db.n()) * min_esup;
  std::vector<bool> keep(universe.size(), false);
  for (std::size_t i = 0; i < universe.size(); ++i) {
    keep[i] = esup[i] >= threshold;
  }
  UhStruct uh(db, keep, esup, sumsq);
  std::int32_t h_suffix = -1;
  for (std::size_t h = 0; h < uh.head().size(); ++h) {
    if (uh.head()[h].item == suffix_item) {
      h_suffix = static_cast<std::int32_t>(h);
      break;
    }
  }
  if (h_suffix < 0) return {};
  std::vector<double> acc(static_cast<std::size_t>(h_suffix), 0.0);
  for (std::int32_t r = uh.head()[static_cast<std::size_t>(h_suffix)].head_row,
                    c = uh.head()[static_cast<std::size_t>(h_suffix)].head_cell;
       r >= 0;) {
    const auto& row = uh.rows()[static_cast<std::size_t>(r)];
    const auto& cell = row[static_cast<std::size_t>(c)];
    for (std::int32_t b = 0; b < c; ++b) {
      acc[static_cast<std::size_t>(row[static_cast<std::size_t>(b)].item_h)] +=
          cell.prob * row[static_cast<std::size_t>(b)].prob;
    }
    std::int32_t nr = cell.next_row, nc = cell.next_cell;
    r = nr;
    c = nc;
  }
  std::vector<std::pair<ItemId, double>> out;
  for (std::size_t h = 0; h < acc.size(); ++h) {
    if (acc[h] > 0.0) out.emplace_back(uh.head()[h].item, acc[h]);
  }
  return out;
}

}  // namespace umine
