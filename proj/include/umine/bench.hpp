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
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "umine/approx_prob.hpp"
#include "umine/exact_prob.hpp"
#include "umine/mem_meter.hpp"
#include "umine/oracle.hpp"
#include "umine/report.hpp"
#include "umine/types.hpp"
#include "umine/uapriori.hpp"
#include "umine/ufp_growth.hpp"
#include "umine/uh_mine.hpp"

namespace umine {

struct PrecisionRecall {
  std::optional<double> precision;  // absent when the approx set is empty
  std::optional<double> recall;     // absent when the exact set is empty
};

/// |A intersect E| / |A| and / |E|. Empty denominators leave the metric
/// undefined (absent), never zero.
inline PrecisionRecall precision_recall(std::vector<Itemset> approx,
                                        std::vector<Itemset> exact) {
  std::sort(approx.begin(), approx.end());
  std::sort(exact.begin(), exact.end());
  std::size_t both = 0;
  std::size_t i = 0, j = 0;
  while (i < approx.size() && j < exact.size()) {
    if (approx[i] == exact[j]) {
      ++both;
      ++i;
      ++j;
    } else if (approx[i] < exact[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  PrecisionRecall pr;
  if (!approx.empty()) {
    pr.precision = static_cast<double>(both) /
                   static_cast<double>(approx.size());
  }
  if (!exact.empty()) {
    pr.recall = static_cast<double>(both) / static_cast<double>(exact.size());
  }
  return pr;
}

inline std::vector<Itemset> report_itemsets(const MiningReport& r) {
  std::vector<Itemset> out;
  out.reserve(r.itemsets.size());
  for (const auto& ri : r.itemsets) out.push_back(ri.items);
  return out;
}

/// One measured experiment row. Optional metrics serialize as empty cells.
struct BenchRecord {
  std::string algorithm;
  std::string dataset;
  std::string scenario;
  std::size_t n_transactions = 0;
  double min_esup = 0.0;
  double min_sup = 0.0;
  double pft = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  double skew = 0.0;
  std::uint64_t seed = 0;
  std::size_t runs = 0;
  double wall_ms = 0.0;
  std::size_t peak_bytes = 0;
  std::size_t itemset_count = 0;
  std::size_t candidate_count = 0;
  std::size_t pruned_count = 0;
  std::optional<double> precision;
  std::optional<double> recall;
  std::string status = "ok";  // ok | timeout | error
};

namespace detail {

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string csv_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace detail

inline const char* csv_header() {
  return "algorithm,dataset,scenario,n_transactions,min_esup,min_sup,pft,"
         "mean,variance,skew,seed,runs,wall_ms,peak_bytes,itemset_count,"
         "candidate_count,pruned_count,precision,recall,status";
}

inline std::string csv_row(const BenchRecord& r) {
  std::string out;
  out += detail::csv_quote(r.algorithm);
  out += ',';
  out += detail::csv_quote(r.dataset);
  out += ',';
  out += detail::csv_quote(r.scenario);
  out += ',';
  out += std::to_string(r.n_transactions);
  out += ',';
  out += detail::csv_num(r.min_esup);
  out += ',';
  out += detail::csv_num(r.min_sup);
  out += ',';
  out += detail::csv_num(r.pft);
  out += ',';
  out += detail::csv_num(r.mean);
  out += ',';
  out += detail::csv_num(r.variance);
  out += ',';
  out += detail::csv_num(r.skew);
  out += ',';
  out += std::to_string(r.seed);
  out += ',';
  out += std::to_string(r.runs);
  out += ',';
  out += detail::csv_num(r.wall_ms);
  out += ',';
  out += std::to_string(r.peak_bytes);
  out += ',';
  out += std::to_string(r.itemset_count);
  out += ',';
  out += std::to_string(r.candidate_count);
  out += ',';
  out += std::to_string(r.pruned_count);
  out += ',';
  if (r.precision) out += detail::csv_num(*r.precision);
  out += ',';
  if (r.recall) out += detail::csv_num(*r.recall);
  out += ',';
  out += detail::csv_quote(r.status);
  return out;
}

inline std::string emit_csv(std::span<const BenchRecord> records) {
  std::string out = csv_header();
  out += '\n';
  for (const auto& r : records) {
    out += csv_row(r);
    out += '\n';
  }
  return out;
}

inline const std::vector<std::string>& algorithm_tags() {
  static const std::vector<std::string> tags = {
      "uapriori", "ufp", "uhmine", "dp",  "dpb",    "dc",
      "dcb",      "pdu", "ndu",    "nduh", "oracle",
  };
  return tags;
}

/// Runs the algorithm named by its CLI tag. Thresholds unused by a given
/// algorithm are ignored (but still validated by MiningParams where used).
inline MiningReport run_algorithm(const std::string& tag,
                                  const UncertainDatabase& db,
                                  double min_esup, double min_sup, double pft,
                                  const RunOptions& opt = {}) {
  if (tag == "uapriori") return uapriori(db, min_esup, opt);
  if (tag == "ufp") return ufp_growth(db, min_esup, opt);
  if (tag == "uhmine") return uh_mine(db, min_esup, opt);
  if (db.n() == 0) {
    MiningReport empty;
    empty.algorithm = tag;
    return empty;
  }
  MiningParams params = MiningParams::for_db(db.n(), min_esup, min_sup, pft);
  if (tag == "dp") {
    return mine_probabilistic(db, params, ExactMethod::kDP, false, opt);
  }
  if (tag == "dpb") {
    return mine_probabilistic(db, params, ExactMethod::kDP, true, opt);
  }
  if (tag == "dc") {
    return mine_probabilistic(db, params, ExactMethod::kDC, false, opt);
  }
  if (tag == "dcb") {
    return mine_probabilistic(db, params, ExactMethod::kDC, true, opt);
  }
  if (tag == "pdu") return pdu_apriori(db, params, opt);
  if (tag == "ndu") return ndu_apriori(db, params, opt);
  if (tag == "nduh") return nduh_mine(db, params, opt);
  if (tag == "oracle") {
    GroundTruth gt = brute_force_mine(db, params);
    MiningReport report;
    report.algorithm = "oracle";
    for (const auto& s : gt.prob_frequent) {
      report.itemsets.push_back(ReportedItemset{
          s.items, exact_esup(db, s.items.items()), s.value});
    }
    sort_report(report);
    return report;
  }
  throw ParamError("unknown algorithm tag: " + tag);
}

struct ExperimentConfig {
  std::string algorithm;
  double min_esup = 0.5;
  double min_sup = 0.5;
  double pft = 0.9;
  std::size_t runs = 10;     // measured repetitions after one warm-up
  double timeout_secs = 3600.0;
  bool normal_memo = false;
};

struct ExperimentResult {
  BenchRecord record;       // identity columns left for the caller
  MiningReport report;      // from the last measured run
};

/// One warm-up run (discarded), then `runs` measured repetitions; wall time
/// is their arithmetic mean, peak heap their maximum. Every repetition runs
/// under its own deadline; expiry marks the record `timeout` and stops the
/// experiment. Determinism check: all repetitions must report identical
/// itemset counts.
inline ExperimentResult run_experiment(const UncertainDatabase& db,
                                       const ExperimentConfig& cfg) {
  ExperimentResult res;
  res.record.algorithm = cfg.algorithm;
  res.record.min_esup = cfg.min_esup;
  res.record.min_sup = cfg.min_sup;
  res.record.pft = cfg.pft;
  res.record.runs = cfg.runs;
  res.record.n_transactions = db.n();

  auto one_run = [&]() {
    RunOptions opt;
    opt.normal_memo = cfg.normal_memo;
    if (cfg.timeout_secs > 0.0) {
      opt.deadline =
          Deadline::after(std::chrono::duration<double>(cfg.timeout_secs));
    }
    return run_algorithm(cfg.algorithm, db, cfg.min_esup, cfg.min_sup,
                         cfg.pft, opt);
  };

  using clock = std::chrono::steady_clock;
  try {
    one_run();  // warm-up, discarded
    double total_ms = 0.0;
    std::int64_t peak = 0;
    std::optional<std::size_t> expect_count;
    for (std::size_t r = 0; r < cfg.runs; ++r) {
      mem::reset_peak();
      std::int64_t base = mem::live_bytes();
      auto t0 = clock::now();
      MiningReport rep = one_run();
      auto t1 = clock::now();
      total_ms +=
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      peak = std::max(peak, mem::peak_bytes() - base);
      if (expect_count && *expect_count != rep.itemsets.size()) {
        throw InvariantError("nondeterministic itemset count across runs");
      }
      expect_count = rep.itemsets.size();
      res.report = std::move(rep);
    }
    res.record.wall_ms = cfg.runs ? total_ms / static_cast<double>(cfg.runs)
                                  : 0.0;
    res.record.peak_bytes =
        peak > 0 ? static_cast<std::size_t>(peak) : 0;
    res.record.itemset_count = res.report.itemsets.size();
    res.record.candidate_count = res.report.metrics.candidate_count;
    res.record.pruned_count = res.report.metrics.pruned_count;
    res.record.status = "ok";
  } catch (const TimeoutError&) {
    res.record.status = "timeout";
    res.record.wall_ms = cfg.timeout_secs * 1000.0;
    res.report = MiningReport{};
    res.report.algorithm = cfg.algorithm;
  }
  return res;
}

/// One sweep point: a database factory (so sweeps over generation axes can
/// rebuild) plus the experiment to run on it. `proto` carries the identity
/// columns into the emitted record.
struct SweepPoint {
  BenchRecord proto;
  std::function<std::shared_ptr<const UncertainDatabase>()> make_db;
  ExperimentConfig cfg;
};

/// Runs points in order, appending one CSV row to `out` after each and
/// flushing, so partial results survive a crash mid-sweep. A point that
/// throws umine::Error is recorded with status=error and the sweep moves on.
inline std::vector<BenchRecord> run_sweep(const std::vector<SweepPoint>& points,
                                          std::ostream& out) {
  std::vector<BenchRecord> records;
  out << csv_header() << '\n';
  out.flush();
  for (const SweepPoint& p : points) {
    BenchRecord rec = p.proto;
    try {
      std::shared_ptr<const UncertainDatabase> db = p.make_db();
      ExperimentResult r = run_experiment(*db, p.cfg);
      rec.wall_ms = r.record.wall_ms;
      rec.peak_bytes = r.record.peak_bytes;
      rec.itemset_count = r.record.itemset_count;
      rec.candidate_count = r.record.candidate_count;
      rec.pruned_count = r.record.pruned_count;
      rec.status = r.record.status;
      rec.n_transactions = r.record.n_transactions;
    } catch (const Error&) {
      rec.status = "error";
    }
    out << csv_row(rec) << '\n';
    out.flush();
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace umine
