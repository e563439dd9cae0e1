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
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "umine/apriori.hpp"
#include "umine/deadline.hpp"
#include "umine/fft.hpp"
#include "umine/oracle.hpp"
#include "umine/report.hpp"
#include "umine/types.hpp"

// Exact frequent-probability computation: Pr(support >= ms) for a support
// count that is a sum of independent Bernoulli(q_t), evaluated either by
// dynamic programming or by divide-and-conquer convolution, with an optional
// Chernoff-bound pre-filter.

namespace umine {

/// DP over transactions. ge[i] after processing j transactions equals
/// Pr(support of first j >= i):
///   ge[i] <- ge[i-1] * q + ge[i] * (1 - q),  ge[0] = 1, ge[i > j] = 0.
/// O(n * ms) time, O(ms) space.
inline double freq_prob_dp(std::span<const double> probs, std::size_t ms) {
  if (ms == 0) return 1.0;
  std::vector<double> ge(ms + 1, 0.0);
  ge[0] = 1.0;
  for (double q : probs) {
    if (q == 0.0) continue;
    for (std::size_t i = ms; i >= 1; --i) {
      ge[i] = ge[i - 1] * q + ge[i] * (1.0 - q);
    }
  }
  return ge[ms];
}

namespace detail {

// Merges two capped support pmfs. A vector of size cap+1 carries its tail
// mass Pr(>= cap) in the last slot; shorter vectors are exact. Entries below
// cap stay exact because i + j < cap forces i, j < cap.
inline std::vector<double> merge_capped(const std::vector<double>& x,
                                        const std::vector<double>& y,
                                        std::size_t cap) {
  const bool xt = x.size() == cap + 1;
  const bool yt = y.size() == cap + 1;
  std::span<const double> xh(x.data(), x.size() - (xt ? 1 : 0));
  std::span<const double> yh(y.data(), y.size() - (yt ? 1 : 0));
  const double tx = xt ? x.back() : 0.0;
  const double ty = yt ? y.back() : 0.0;
  std::vector<double> c = convolve(xh, yh);
  const std::size_t out_top =
      (xt || yt) ? cap : std::min(x.size() + y.size() - 2, cap);
  std::vector<double> out(out_top + 1, 0.0);
  double tail = tx + ty - tx * ty;
  for (std::size_t k = 0; k < c.size(); ++k) {
    double v = std::clamp(c[k], 0.0, 1.0);  // FFT round-off guard
    if (k < cap) {
      out[k] = v;
    } else {
      tail += v;
    }
  }
  if (out_top == cap) out[cap] = std::clamp(tail, 0.0, 1.0);
  return out;
}

inline std::vector<double> dc_pmf(std::span<const double> probs,
                                  std::size_t cap) {
  if (probs.size() == 1) {
    return {1.0 - probs[0], probs[0]};
  }
  const std::size_t mid = probs.size() / 2;
  std::vector<double> left = dc_pmf(probs.first(mid), cap);
  std::vector<double> right = dc_pmf(probs.subspan(mid), cap);
  return merge_capped(left, right, cap);
}

}  // namespace detail

/// Divide-and-conquer: recursive halving down to one-transaction pmfs
/// [1-q, q], conquered by convolution with all intermediates capped at ms+1
/// buckets. Answer is 1 minus the exact mass below ms.
inline double freq_prob_dc(std::span<const double> probs, std::size_t ms) {
  if (ms == 0) return 1.0;
  std::vector<double> nz;
  nz.reserve(probs.size());
  for (double q : probs) {
    if (q > 0.0) nz.push_back(q);
  }
  if (ms > nz.size()) return 0.0;
  std::vector<double> pmf = detail::dc_pmf(nz, ms);
  double below = 0.0;
  for (std::size_t k = 0; k < ms && k < pmf.size(); ++k) below += pmf[k];
  return std::clamp(1.0 - below, 0.0, 1.0);
}

struct ChernoffDecision {
  bool pruned = false;
  double delta = 0.0;
  double mu = 0.0;
};

/// Chernoff-bound pre-filter on mu = esup. With delta = (ms - mu - 1) / mu,
/// Pr(support >= ms) <= Pr(support >= (1 + delta) mu) and the standard tail
/// bounds apply; pruning is sound whenever the bound already sits below pft.
/// delta <= 0 (mu near or above ms) leaves the candidate undecided.
inline ChernoffDecision chernoff_prune(double esup, std::size_t ms,
                                       double pft) {
  ChernoffDecision d;
  d.mu = esup;
  if (esup <= 0.0) {
    d.delta = std::numeric_limits<double>::infinity();
    d.pruned = true;  // support is identically 0 < ms
    return d;
  }
  d.delta = (static_cast<double>(ms) - esup - 1.0) / esup;
  if (d.delta <= 0.0) return d;
  double bound;
  if (d.delta > 2.0 * std::numbers::e - 1.0) {
    bound = std::exp2(-d.delta * d.mu);
  } else {
    bound = std::exp(-d.delta * d.delta * d.mu / 4.0);
  }
  d.pruned = bound < pft;
  return d;
}

enum class ExactMethod { kDP, kDC };

inline const char* exact_algorithm_name(ExactMethod m, bool chernoff) {
  switch (m) {
    case ExactMethod::kDP:
      return chernoff ? "dpb" : "dp";
    case ExactMethod::kDC:
      return chernoff ? "dcb" : "dc";
  }
  return "dp";
}

/// Level-wise probabilistic-frequent mining: keeps X iff
/// Pr(support(X) >= ms) > pft. Each level runs one esup-counting pass, then
/// evaluates survivors candidate-by-candidate (Chernoff pre-filter first
/// when enabled; esup 0 is rejected outright since pft > 0).
inline MiningReport mine_probabilistic(const UncertainDatabase& db,
                                       const MiningParams& params,
                                       ExactMethod method, bool use_chernoff,
                                       const RunOptions& opt = {}) {
  MiningReport report;
  report.algorithm = exact_algorithm_name(method, use_chernoff);
  const std::size_t ms = params.ms;
  const double pft = params.pft;
  auto universe = db.item_universe();

  auto prob_of = [&](const Candidate& c) {
    std::vector<double> qs = containment_vector(db, c);
    return method == ExactMethod::kDP ? freq_prob_dp(qs, ms)
                                      : freq_prob_dc(qs, ms);
  };

  // Level 1: every universe item is a candidate.
  std::vector<double> esup1;
  item_esups(db, esup1);
  report.metrics.candidate_count = universe.size();
  std::vector<Candidate> frequent;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    opt.deadline.check();
    if (use_chernoff && chernoff_prune(esup1[i], ms, pft).pruned) {
      ++report.metrics.pruned_count;
      continue;
    }
    Candidate c{universe[i]};
    double fp = prob_of(c);
    if (fp > pft) {
      report.itemsets.push_back(
          ReportedItemset{Itemset(c), esup1[i], fp});
      frequent.push_back(std::move(c));
    }
  }

  while (!frequent.empty()) {
    opt.deadline.check();
    std::vector<Candidate> cands = apriori_join_prune(frequent);
    if (cands.empty()) break;
    report.metrics.candidate_count += cands.size();
    report.metrics.level_candidate_counts.push_back(cands.size());
    LevelCounts lc = count_level(db, cands, false, opt.deadline);
    std::vector<Candidate> next;
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      opt.deadline.check();
      if (lc.esup[ci] == 0.0) continue;
      if (use_chernoff && chernoff_prune(lc.esup[ci], ms, pft).pruned) {
        ++report.metrics.pruned_count;
        continue;
      }
      double fp = prob_of(cands[ci]);
      if (fp > pft) {
        report.itemsets.push_back(
            ReportedItemset{Itemset(cands[ci]), lc.esup[ci], fp});
        next.push_back(cands[ci]);
      }
    }
    frequent = std::move(next);
  }
  sort_report(report);
  return report;
}

}  // namespace umine
