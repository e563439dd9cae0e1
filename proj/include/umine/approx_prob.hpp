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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <unordered_map>
#include <vector>

#include "umine/apriori.hpp"
#include "umine/deadline.hpp"
#include "umine/report.hpp"
#include "umine/types.hpp"
#include "umine/uh_mine.hpp"

// Approximate frequent-probability models: the support count (a Poisson-
// binomial sum) is replaced by a Poisson or Normal surrogate matched on its
// first (and, for Normal, second) moment.

namespace umine {

/// Pr(Poisson(lambda) >= ms) = 1 - sum_{i<ms} e^-lambda lambda^i / i!.
/// Terms are evaluated in log space so large lambdas cannot overflow.
inline double poisson_freq_prob(double lambda, std::size_t ms) {
  if (ms == 0) return 1.0;
  if (lambda <= 0.0) return 0.0;
  double log_lambda = std::log(lambda);
  double cdf = 0.0;
  for (std::size_t i = 0; i < ms; ++i) {
    double di = static_cast<double>(i);
    cdf += std::exp(di * log_lambda - lambda - std::lgamma(di + 1.0));
  }
  return std::clamp(1.0 - cdf, 0.0, 1.0);
}

/// Bracket for the smallest lambda whose Poisson tail exceeds pft:
/// tail(hi) > pft >= tail(lo) and hi - lo <= 1e-6. Candidates with esup
/// outside (lo, hi) can be classified without evaluating the tail.
struct LambdaThreshold {
  double lo = 0.0;
  double hi = 0.0;
};

inline LambdaThreshold lambda_threshold(std::size_t ms, double pft) {
  if (ms == 0 || !(pft > 0.0 && pft < 1.0)) {
    throw ParamError("lambda_threshold needs ms >= 1 and pft in (0,1)");
  }
  double lo = 0.0;
  double hi = static_cast<double>(ms);
  while (poisson_freq_prob(hi, ms) <= pft) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > 1e-6) {
    double mid = 0.5 * (lo + hi);
    if (poisson_freq_prob(mid, ms) > pft) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return LambdaThreshold{lo, hi};
}

/// Survival form of the CLT estimate with continuity correction:
/// 1 - Phi((ms - 0.5 - esup) / sqrt(var)). A zero-variance support is a
/// point mass, so the estimate degenerates to a step at the corrected
/// threshold.
inline double normal_freq_prob(double esup, double var, std::size_t ms) {
  if (var < 0.0) {
    if (var < -1e-9) throw ParamError("negative variance");
    var = 0.0;
  }
  double edge = static_cast<double>(ms) - 0.5;
  if (var == 0.0) return esup >= edge ? 1.0 : 0.0;
  double z = (edge - esup) / std::sqrt(var);
  return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

/// Optional cache for Phi lookups, keyed on z rounded to 1e-4. Off the hot
/// path by default; enable via RunOptions::normal_memo.
class NormalMemo {
 public:
  double survival(double z) {
    auto key = static_cast<std::int64_t>(std::llround(z * 1e4));
    auto [it, inserted] = cache_.try_emplace(key, 0.0);
    if (inserted) {
      it->second = 0.5 * std::erfc(static_cast<double>(key) * 1e-4 /
                                   std::numbers::sqrt2);
    }
    return it->second;
  }

  std::size_t size() const noexcept { return cache_.size(); }

 private:
  std::unordered_map<std::int64_t, double> cache_;
};

inline double normal_freq_prob_memo(double esup, double var, std::size_t ms,
                                    NormalMemo& memo) {
  if (var < 0.0) {
    if (var < -1e-9) throw ParamError("negative variance");
    var = 0.0;
  }
  double edge = static_cast<double>(ms) - 0.5;
  if (var == 0.0) return esup >= edge ? 1.0 : 0.0;
  return memo.survival((edge - esup) / std::sqrt(var));
}

/// PDUApriori: level-wise mining that keeps X iff
/// poisson_freq_prob(esup(X), ms) > pft. The lambda bracket classifies all
/// but near-threshold candidates from esup alone; the reported probability
/// is always the directly evaluated tail, so the result set is exactly the
/// predicate's.
inline MiningReport pdu_apriori(const UncertainDatabase& db,
                                const MiningParams& params,
                                const RunOptions& opt = {}) {
  MiningReport report;
  report.algorithm = "pdu";
  const std::size_t ms = params.ms;
  const double pft = params.pft;
  const LambdaThreshold thr = lambda_threshold(ms, pft);

  auto keeps = [&](double esup) {
    if (esup >= thr.hi) return true;
    if (esup <= thr.lo) return false;
    return poisson_freq_prob(esup, ms) > pft;
  };

  auto universe = db.item_universe();
  std::vector<double> esup1;
  item_esups(db, esup1);
  report.metrics.candidate_count = universe.size();
  std::vector<Candidate> frequent;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (keeps(esup1[i])) {
      report.itemsets.push_back(
          ReportedItemset{Itemset({universe[i]}), esup1[i],
                          poisson_freq_prob(esup1[i], ms)});
      frequent.push_back(Candidate{universe[i]});
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
      if (keeps(lc.esup[ci])) {
        report.itemsets.push_back(
            ReportedItemset{Itemset(cands[ci]), lc.esup[ci],
                            poisson_freq_prob(lc.esup[ci], ms)});
        next.push_back(cands[ci]);
      }
    }
    frequent = std::move(next);
  }
  sort_report(report);
  return report;
}

/// NDUApriori: level-wise mining that keeps X iff the normal estimate of
/// Pr(support >= ms) exceeds pft. Variance comes for free from the counting
/// pass (var = esup - sum of squared containment probabilities).
inline MiningReport ndu_apriori(const UncertainDatabase& db,
                                const MiningParams& params,
                                const RunOptions& opt = {}) {
  MiningReport report;
  report.algorithm = "ndu";
  const std::size_t ms = params.ms;
  const double pft = params.pft;
  NormalMemo memo;
  auto prob = [&](double esup, double sumsq) {
    double var = std::max(0.0, esup - sumsq);
    return opt.normal_memo ? normal_freq_prob_memo(esup, var, ms, memo)
                           : normal_freq_prob(esup, var, ms);
  };

  auto universe = db.item_universe();
  std::vector<double> esup1, sumsq1;
  item_esups(db, esup1, &sumsq1);
  report.metrics.candidate_count = universe.size();
  std::vector<Candidate> frequent;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    double fp = prob(esup1[i], sumsq1[i]);
    if (fp > pft) {
      report.itemsets.push_back(
          ReportedItemset{Itemset({universe[i]}), esup1[i], fp});
      frequent.push_back(Candidate{universe[i]});
    }
  }
  while (!frequent.empty()) {
    opt.deadline.check();
    std::vector<Candidate> cands = apriori_join_prune(frequent);
    if (cands.empty()) break;
    report.metrics.candidate_count += cands.size();
    report.metrics.level_candidate_counts.push_back(cands.size());
    LevelCounts lc = count_level(db, cands, true, opt.deadline);
    std::vector<Candidate> next;
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      double fp = prob(lc.esup[ci], lc.sumsq[ci]);
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

/// Normal-approximation acceptance for the UH-Mine traversal.
struct NormalPolicy {
  std::size_t ms = 1;
  double pft = 0.5;
  NormalMemo* memo = nullptr;

  double prob(double esup, double sumsq) const {
    double var = std::max(0.0, esup - sumsq);
    return memo ? normal_freq_prob_memo(esup, var, ms, *memo)
                : normal_freq_prob(esup, var, ms);
  }
  bool accept(double esup, double sumsq) const {
    return prob(esup, sumsq) > pft;
  }
  std::optional<double> report_value(double esup, double sumsq) const {
    return prob(esup, sumsq);
  }
};

/// NDUH-Mine: the UH-Mine hyperstructure traversal with normal-approximation
/// acceptance. Agrees with NDUApriori on every input by construction of the
/// shared predicate.
inline MiningReport nduh_mine(const UncertainDatabase& db,
                              const MiningParams& params,
                              const RunOptions& opt = {}) {
  NormalMemo memo;
  NormalPolicy policy{params.ms, params.pft,
                      opt.normal_memo ? &memo : nullptr};
  return uh_mine_with_policy(db, policy, "nduh", opt);
}

}  // namespace umine
