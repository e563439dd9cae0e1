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

#include <vector>

#include "umine/apriori.hpp"
#include "umine/deadline.hpp"
#include "umine/report.hpp"
#include "umine/types.hpp"

namespace umine {

/// UApriori: level-wise expected-support mining. Keeps X iff
/// esup(X) >= n * min_esup. One counting pass per level.
inline MiningReport uapriori(const UncertainDatabase& db, double min_esup,
                             const RunOptions& opt = {}) {
  if (!(min_esup > 0.0 && min_esup <= 1.0)) {
    throw ParamError("min_esup must lie in (0,1]");
  }
  MiningReport report;
  report.algorithm = "uapriori";
  const double threshold =
      static_cast<double>(db.n()) * min_esup;
  auto universe = db.item_universe();

  std::vector<double> esup1;
  item_esups(db, esup1);
  report.metrics.candidate_count = universe.size();
  std::vector<Candidate> frequent;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (esup1[i] >= threshold) {
      report.itemsets.push_back(
          ReportedItemset{Itemset({universe[i]}), esup1[i], {}});
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
      if (lc.esup[ci] >= threshold) {
        report.itemsets.push_back(
            ReportedItemset{Itemset(cands[ci]), lc.esup[ci], {}});
        next.push_back(cands[ci]);
      }
    }
    frequent = std::move(next);
  }
  sort_report(report);
  return report;
}

}  // namespace umine
