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
#include <cstdint>
#include <map>
#include <vector>

#include "umine/apriori.hpp"
#include "umine/deadline.hpp"
#include "umine/report.hpp"
#include "umine/types.hpp"

namespace umine {

/// Probability quantized to 4 decimals, rounded UP so every aggregate built
/// from it stays an upper bound on the true expected support. The 1e-7 slack
/// keeps values already on the grid from climbing a step.
inline std::int32_t ufp_quantize(double p) {
  return static_cast<std::int32_t>(std::ceil(p * 10000.0 - 1e-7));
}

inline double ufp_prob(std::int32_t q4) {
  return static_cast<double>(q4) / 10000.0;
}

struct UfpNode {
  ItemId item = 0;
  std::int32_t prob4 = 0;     // quantized probability, 1..10000
  std::uint64_t count = 0;    // transactions threaded through this node
  std::int32_t parent = -1;   // arena index, -1 = child of root
  std::vector<std::int32_t> children;
};

struct UfpHeaderEntry {
  ItemId item = 0;
  double esup = 0.0;
  std::vector<std::int32_t> links;  // arena indices of this item's nodes
};

/// UFP-tree: a prefix tree over frequent items ordered by descending exact
/// esup (ties by ascending id). Sibling paths merge only when both item and
/// quantized probability are equal.
class UfpTree {
 public:
  UfpTree(const UncertainDatabase& db, double min_esup) {
    const double threshold = static_cast<double>(db.n()) * min_esup;
    auto universe = db.item_universe();
    std::vector<double> esup;
    item_esups(db, esup);

    std::vector<std::size_t> freq_idx;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (esup[i] >= threshold) freq_idx.push_back(i);
    }
    std::sort(freq_idx.begin(), freq_idx.end(),
              [&](std::size_t a, std::size_t b) {
                if (esup[a] != esup[b]) return esup[a] > esup[b];
                return universe[a] < universe[b];
              });
    header_.reserve(freq_idx.size());
    std::vector<std::int32_t> order(universe.size(), -1);
    for (std::size_t h = 0; h < freq_idx.size(); ++h) {
      header_.push_back(
          UfpHeaderEntry{universe[freq_idx[h]], esup[freq_idx[h]], {}});
      order[freq_idx[h]] = static_cast<std::int32_t>(h);
    }

    std::vector<std::pair<std::int32_t, double>> path;  // (header idx, prob)
    for (const auto& t : db.transactions()) {
      path.clear();
      for (const Unit& u : t.units()) {
        auto it = std::lower_bound(universe.begin(), universe.end(), u.item);
        std::int32_t h = order[static_cast<std::size_t>(it - universe.begin())];
        if (h >= 0) path.emplace_back(h, u.prob.value());
      }
      if (path.empty()) continue;
      std::sort(path.begin(), path.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      ++inserted_;
      std::int32_t cur = -1;
      for (const auto& [h, p] : path) {
        ItemId item = header_[static_cast<std::size_t>(h)].item;
        std::int32_t q4 = ufp_quantize(p);
        std::int32_t found = -1;
        for (std::int32_t c : children_of(cur)) {
          const UfpNode& n = nodes_[static_cast<std::size_t>(c)];
          if (n.item == item && n.prob4 == q4) {
            found = c;
            break;
          }
        }
        if (found < 0) {
          found = static_cast<std::int32_t>(nodes_.size());
          nodes_.push_back(UfpNode{item, q4, 0, cur, {}});
          children_of(cur).push_back(found);
          header_[static_cast<std::size_t>(h)].links.push_back(found);
        }
        ++nodes_[static_cast<std::size_t>(found)].count;
        cur = found;
      }
    }
  }

  const std::vector<UfpNode>& nodes() const noexcept { return nodes_; }
  const std::vector<UfpHeaderEntry>& header() const noexcept {
    return header_;
  }
  const std::vector<std::int32_t>& root_children() const noexcept {
    return root_children_;
  }
  /// Transactions inserted (those with at least one frequent item).
  std::uint64_t inserted() const noexcept { return inserted_; }

  /// Items the tree orders paths by, most promising first.
  std::vector<ItemId> ordered_items() const {
    std::vector<ItemId> out;
    out.reserve(header_.size());
    for (const auto& e : header_) out.push_back(e.item);
    return out;
  }

 private:
  std::vector<std::int32_t>& children_of(std::int32_t node) {
    return node < 0 ? root_children_
                    : nodes_[static_cast<std::size_t>(node)].children;
  }

  std::vector<UfpNode> nodes_;
  std::vector<std::int32_t> root_children_;
  std::vector<UfpHeaderEntry> header_;
  std::uint64_t inserted_ = 0;
};

namespace detail {

// Conditional tree node. Weight aggregates count * (product of quantized
// probabilities of the suffix so far); every use downstream is linear in the
// weight, so paths sharing (item, prob4) structure collapse losslessly.
struct CondNode {
  std::int32_t item_h = 0;  // header index in the global tree order
  std::int32_t prob4 = 0;
  double weight = 0.0;
  std::int32_t parent = -1;
};

struct CondPath {
  double weight = 0.0;
  // (header idx, prob4) pairs in global order, root-most first.
  std::vector<std::pair<std::int32_t, std::int32_t>> steps;
};

class UfpGrowth {
 public:
  UfpGrowth(const UfpTree& tree, double threshold, const Deadline& dl)
      : tree_(tree), threshold_(threshold), dl_(dl) {}

  /// All candidate itemsets of size >= 2, as header-index vectors.
  std::vector<std::vector<std::int32_t>> run() {
    const auto& header = tree_.header();
    for (std::size_t h = header.size(); h-- > 0;) {
      dl_.check();
      std::vector<CondPath> base;
      for (std::int32_t ni : header[h].links) {
        const UfpNode& n = tree_.nodes()[static_cast<std::size_t>(ni)];
        CondPath cp;
        cp.weight = static_cast<double>(n.count) * ufp_prob(n.prob4);
        for (std::int32_t p = n.parent; p >= 0;) {
          const UfpNode& pn = tree_.nodes()[static_cast<std::size_t>(p)];
          cp.steps.emplace_back(header_index(pn.item), pn.prob4);
          p = pn.parent;
        }
        std::reverse(cp.steps.begin(), cp.steps.end());
        base.push_back(std::move(cp));
      }
      suffix_.assign(1, static_cast<std::int32_t>(h));
      grow(base);
    }
    return std::move(candidates_);
  }

 private:
  std::int32_t header_index(ItemId item) const {
    const auto& header = tree_.header();
    for (std::size_t h = 0; h < header.size(); ++h) {
      if (header[h].item == item) return static_cast<std::int32_t>(h);
    }
    throw InvariantError("item missing from UFP header");
  }

  void grow(const std::vector<CondPath>& base) {
    dl_.check();
    if (base.empty()) return;
    // Build the conditional tree (merge on equal (item, prob4) prefixes).
    std::vector<CondNode> nodes;
    std::vector<std::int32_t> root;
    std::vector<std::vector<std::int32_t>> links(tree_.header().size());
    auto children = [&](std::int32_t n) -> std::vector<std::int32_t>& {
      return n < 0 ? root : kids_[static_cast<std::size_t>(n)];
    };
    kids_.clear();
    for (const CondPath& cp : base) {
      std::int32_t cur = -1;
      for (const auto& [h, q4] : cp.steps) {
        std::int32_t found = -1;
        for (std::int32_t c : children(cur)) {
          if (nodes[static_cast<std::size_t>(c)].item_h == h &&
              nodes[static_cast<std::size_t>(c)].prob4 == q4) {
            found = c;
            break;
          }
        }
        if (found < 0) {
          found = static_cast<std::int32_t>(nodes.size());
          nodes.push_back(CondNode{h, q4, 0.0, cur});
          kids_.emplace_back();
          children(cur).push_back(found);
          links[static_cast<std::size_t>(h)].push_back(found);
        }
        nodes[static_cast<std::size_t>(found)].weight += cp.weight;
        cur = found;
      }
    }

    // Bound per extension item: sum of weight * prob over its nodes.
    for (std::size_t h = links.size(); h-- > 0;) {
      if (links[h].empty()) continue;
      double bound = 0.0;
      for (std::int32_t ni : links[h]) {
        const CondNode& n = nodes[static_cast<std::size_t>(ni)];
        bound += n.weight * ufp_prob(n.prob4);
      }
      if (bound < threshold_) continue;
      suffix_.push_back(static_cast<std::int32_t>(h));
      candidates_.push_back(suffix_);
      std::vector<CondPath> sub;
      sub.reserve(links[h].size());
      for (std::int32_t ni : links[h]) {
        const CondNode& n = nodes[static_cast<std::size_t>(ni)];
        CondPath cp;
        cp.weight = n.weight * ufp_prob(n.prob4);
        for (std::int32_t p = n.parent; p >= 0;) {
          const CondNode& pn = nodes[static_cast<std::size_t>(p)];
          cp.steps.emplace_back(pn.item_h, pn.prob4);
          p = pn.parent;
        }
        std::reverse(cp.steps.begin(), cp.steps.end());
        sub.push_back(std::move(cp));
      }
      // kids_ is shared scratch; grow() rebuilds it, so hand the recursion
      // its own copy of nothing else.
      grow(sub);
      suffix_.pop_back();
    }
  }

  const UfpTree& tree_;
  double threshold_;
  const Deadline& dl_;
  std::vector<std::int32_t> suffix_;
  std::vector<std::vector<std::int32_t>> candidates_;
  std::vector<std::vector<std::int32_t>> kids_;
};

}  // namespace detail

/// UFP-growth: builds the UFP-tree, generates candidates from conditional
/// trees whose aggregated (prob, count) products upper-bound esup, then
/// verifies every candidate's expected support against the database exactly.
inline MiningReport ufp_growth(const UncertainDatabase& db, double min_esup,
                               const RunOptions& opt = {}) {
  if (!(min_esup > 0.0 && min_esup <= 1.0)) {
    throw ParamError("min_esup must lie in (0,1]");
  }
  MiningReport report;
  report.algorithm = "ufp";
  const double threshold = static_cast<double>(db.n()) * min_esup;

  UfpTree tree(db, min_esup);
  report.metrics.candidate_count = db.item_universe().size();
  for (const auto& e : tree.header()) {
    report.itemsets.push_back(ReportedItemset{Itemset({e.item}), e.esup, {}});
  }

  detail::UfpGrowth growth(tree, threshold, opt.deadline);
  std::vector<std::vector<std::int32_t>> raw = growth.run();

  // Candidates arrive as header-index vectors; regroup by size for one
  // verification pass per level.
  std::map<std::size_t, std::vector<Candidate>> by_size;
  for (const auto& hs : raw) {
    Candidate c;
    c.reserve(hs.size());
    for (std::int32_t h : hs) {
      c.push_back(tree.header()[static_cast<std::size_t>(h)].item);
    }
    std::sort(c.begin(), c.end());
    by_size[c.size()].push_back(std::move(c));
  }
  for (auto& [size, cands] : by_size) {
    opt.deadline.check();
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    report.metrics.candidate_count += cands.size();
    report.metrics.level_candidate_counts.push_back(cands.size());
    LevelCounts lc = count_level(db, cands, false, opt.deadline);
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      if (lc.esup[ci] >= threshold) {
        report.itemsets.push_back(
            ReportedItemset{Itemset(cands[ci]), lc.esup[ci], {}});
      }
    }
  }
  sort_report(report);
  return report;
}

}  // namespace umine
