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
#include <cstdint>
#include <span>
#include <vector>

#include "umine/deadline.hpp"
#include "umine/error.hpp"
#include "umine/types.hpp"

// Level-wise (Apriori) machinery shared by the expected-support and
// probabilistic miners: candidate generation and one-pass counting.

namespace umine {

using Candidate = std::vector<ItemId>;

/// F_l (sorted lexicographically) joined with itself on the shared
/// (l-1)-prefix, then pruned: a candidate survives only if every l-subset is
/// in F_l. Output is sorted lexicographically and has at most
/// |F_l| * (|F_l| - 1) / 2 entries.
inline std::vector<Candidate> apriori_join_prune(
    const std::vector<Candidate>& freq) {
  std::vector<Candidate> out;
  if (freq.empty()) return out;
  const std::size_t l = freq[0].size();
  auto is_frequent = [&](const Candidate& c) {
    return std::binary_search(freq.begin(), freq.end(), c);
  };
  std::size_t run_begin = 0;
  while (run_begin < freq.size()) {
    std::size_t run_end = run_begin + 1;
    while (run_end < freq.size() &&
           std::equal(freq[run_begin].begin(), freq[run_begin].end() - 1,
                      freq[run_end].begin(), freq[run_end].end() - 1)) {
      ++run_end;
    }
    for (std::size_t i = run_begin; i < run_end; ++i) {
      for (std::size_t j = i + 1; j < run_end; ++j) {
        Candidate c = freq[i];
        c.push_back(freq[j].back());
        // The two join parents are frequent by construction; check the
        // remaining l-1 leave-one-out subsets.
        bool ok = true;
        if (l >= 2) {
          Candidate sub(c.size() - 1);
          for (std::size_t drop = 0; drop + 2 < c.size() && ok; ++drop) {
            std::size_t w = 0;
            for (std::size_t r = 0; r < c.size(); ++r) {
              if (r != drop) sub[w++] = c[r];
            }
            ok = is_frequent(sub);
          }
        }
        if (ok) out.push_back(std::move(c));
      }
    }
    run_begin = run_end;
  }
  return out;
}

/// Expected support of every single item, indexed per db.item_universe().
/// Optionally also accumulates the sum of squared unit probabilities (used
/// for Poisson-binomial variances: var = esup - sumsq).
inline void item_esups(const UncertainDatabase& db, std::vector<double>& esup,
                       std::vector<double>* sumsq = nullptr) {
  auto universe = db.item_universe();
  esup.assign(universe.size(), 0.0);
  if (sumsq) sumsq->assign(universe.size(), 0.0);
  for (const auto& t : db.transactions()) {
    for (const Unit& u : t.units()) {
      auto it = std::lower_bound(universe.begin(), universe.end(), u.item);
      auto idx = static_cast<std::size_t>(it - universe.begin());
      double p = u.prob.value();
      esup[idx] += p;
      if (sumsq) (*sumsq)[idx] += p * p;
    }
  }
}

struct LevelCounts {
  std::vector<double> esup;
  std::vector<double> sumsq;  // empty unless requested
};

namespace detail {

// Dense pair-counting: candidates are exactly 2-itemsets over K distinct
// items; a K*K upper-triangular index maps (i,j) to the candidate slot.
inline LevelCounts count_pairs(const UncertainDatabase& db,
                               const std::vector<Candidate>& cands,
                               bool want_sumsq, const Deadline& dl) {
  std::vector<ItemId> items;
  for (const auto& c : cands) {
    items.push_back(c[0]);
    items.push_back(c[1]);
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  const std::size_t k = items.size();
  std::vector<std::int32_t> slot(k * k, -1);
  auto dense = [&](ItemId id) {
    return static_cast<std::size_t>(
        std::lower_bound(items.begin(), items.end(), id) - items.begin());
  };
  for (std::size_t ci = 0; ci < cands.size(); ++ci) {
    slot[dense(cands[ci][0]) * k + dense(cands[ci][1])] =
        static_cast<std::int32_t>(ci);
  }

  LevelCounts lc;
  lc.esup.assign(cands.size(), 0.0);
  if (want_sumsq) lc.sumsq.assign(cands.size(), 0.0);
  std::vector<std::pair<std::size_t, double>> present;
  std::size_t tick = 0;
  for (const auto& t : db.transactions()) {
    if ((++tick & 0xfff) == 0) dl.check();
    present.clear();
    for (const Unit& u : t.units()) {
      auto it = std::lower_bound(items.begin(), items.end(), u.item);
      if (it != items.end() && *it == u.item) {
        present.emplace_back(
            static_cast<std::size_t>(it - items.begin()), u.prob.value());
      }
    }
    for (std::size_t a = 0; a < present.size(); ++a) {
      const auto [da, pa] = present[a];
      const std::int32_t* row = slot.data() + da * k;
      for (std::size_t b = a + 1; b < present.size(); ++b) {
        const auto [dbi, pb] = present[b];
        std::int32_t s = row[dbi];
        if (s < 0) continue;
        double q = pa * pb;
        lc.esup[static_cast<std::size_t>(s)] += q;
        if (want_sumsq) lc.sumsq[static_cast<std::size_t>(s)] += q * q;
      }
    }
  }
  return lc;
}

}  // namespace detail

/// One database pass accumulating each candidate's expected support (and,
/// optionally, sum of squared containment probabilities). Candidates must be
/// same-length, sorted lexicographically.
inline LevelCounts count_level(const UncertainDatabase& db,
                               const std::vector<Candidate>& cands,
                               bool want_sumsq, const Deadline& dl = {}) {
  LevelCounts lc;
  if (cands.empty()) return lc;
  const std::size_t l = cands[0].size();
  if (l == 2) {
    // Safe for the dense path as long as the index fits in memory.
    std::vector<ItemId> distinct;
    for (const auto& c : cands) {
      distinct.insert(distinct.end(), c.begin(), c.end());
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    if (distinct.size() <= 4096) {
      return detail::count_pairs(db, cands, want_sumsq, dl);
    }
  }

  lc.esup.assign(cands.size(), 0.0);
  if (want_sumsq) lc.sumsq.assign(cands.size(), 0.0);
  // Candidates grouped by first item (contiguous because they are sorted).
  std::vector<std::pair<ItemId, std::pair<std::size_t, std::size_t>>> buckets;
  std::size_t begin = 0;
  while (begin < cands.size()) {
    std::size_t end = begin + 1;
    while (end < cands.size() && cands[end][0] == cands[begin][0]) ++end;
    buckets.push_back({cands[begin][0], {begin, end}});
    begin = end;
  }
  std::size_t tick = 0;
  for (const auto& t : db.transactions()) {
    if ((++tick & 0xff) == 0) dl.check();
    auto units = t.units();
    if (units.size() < l) continue;
    for (std::size_t ui = 0; ui + l <= units.size(); ++ui) {
      ItemId first = units[ui].item;
      auto bit = std::lower_bound(
          buckets.begin(), buckets.end(), first,
          [](const auto& bkt, ItemId id) { return bkt.first < id; });
      if (bit == buckets.end() || bit->first != first) continue;
      for (std::size_t ci = bit->second.first; ci < bit->second.second;
           ++ci) {
        const Candidate& c = cands[ci];
        double q = units[ui].prob.value();
        std::size_t pos = ui + 1;
        bool all = true;
        for (std::size_t r = 1; r < c.size(); ++r) {
          while (pos < units.size() && units[pos].item < c[r]) ++pos;
          if (pos == units.size() || units[pos].item != c[r]) {
            all = false;
            break;
          }
          q *= units[pos].prob.value();
          ++pos;
        }
        if (!all) continue;
        lc.esup[ci] += q;
        if (want_sumsq) lc.sumsq[ci] += q * q;
      }
    }
  }
  return lc;
}

}  // namespace umine
