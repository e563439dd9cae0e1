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

// umine: mine frequent itemsets over uncertain transaction databases,
// generate benchmark datasets, sweep experiment axes, and cross-verify the
// miners against a brute-force oracle.
//
// Exit codes: 0 success (including runs recorded as timeout), 1 usage or
// parameter error, 2 I/O or parse error, 3 internal invariant violation.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "umine/mem_meter_ops.hpp"
#include "umine/umine.hpp"

namespace {

constexpr const char* kAlgoDescriptions[][2] = {
    {"uapriori", "expected-support mining, level-wise Apriori"},
    {"ufp", "expected-support mining, UFP-tree growth with verification"},
    {"uhmine", "expected-support mining, UH-Mine hyperstructure"},
    {"dp", "probabilistic-frequent mining, exact dynamic programming"},
    {"dpb", "dp with Chernoff-bound pruning"},
    {"dc", "probabilistic-frequent mining, exact divide-and-conquer"},
    {"dcb", "dc with Chernoff-bound pruning"},
    {"pdu", "probabilistic-frequent mining, Poisson approximation"},
    {"ndu", "probabilistic-frequent mining, normal approximation"},
    {"nduh", "normal approximation on the UH-Mine structure"},
    {"oracle", "possible-worlds brute force (small inputs only)"},
};

void print_algorithms() {
  for (const auto& row : kAlgoDescriptions) {
    std::printf("%-10s %s\n", row[0], row[1]);
  }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("UMINE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw umine::ParamError(std::string("bad UMINE_SEED value: ") + env);
    }
  }
  return 1;
}

struct InputFlags {
  std::string input_path;
  std::string scenario_name;
  std::optional<double> mean, variance, skew;
  double zero_cutoff = 0.01;
  std::optional<std::uint64_t> seed_flag;
};

struct ResolvedInput {
  std::shared_ptr<const umine::UncertainDatabase> db;
  std::string dataset_label;
  std::string scenario_label;
  double mean = 0.0, variance = 0.0, skew = 0.0;
  std::uint64_t seed = 1;
  std::optional<umine::Scenario> sc;
  // Kept when the probability layer may be re-applied (sweeps over
  // assignment axes).
  std::shared_ptr<const umine::DetDatabase> det;
};

// Decides where transactions come from (file or generated scenario) and
// which probability layer to apply (explicit flags beat scenario defaults;
// a plain --input with no assignment flags is read as an uncertain
// database).
ResolvedInput resolve_input(const InputFlags& f) {
  ResolvedInput r;
  r.seed = resolve_seed(f.seed_flag);
  if (!f.scenario_name.empty()) {
    r.sc = umine::scenario(f.scenario_name);
    r.scenario_label = r.sc->name;
  }
  if (f.mean && f.skew) {
    throw umine::ParamError(
        "choose one probability assignment: gaussian (--mean/--variance) or "
        "zipf (--skew)");
  }

  std::shared_ptr<const umine::DetDatabase> det;
  if (!f.input_path.empty()) {
    r.dataset_label = f.input_path;
    bool wants_assignment = f.mean || f.variance || f.skew;
    if (!wants_assignment) {
      r.db = std::make_shared<umine::UncertainDatabase>(
          umine::parse_udb_file(f.input_path));
      return r;
    }
    det = std::make_shared<umine::DetDatabase>(
        umine::parse_fimi_file(f.input_path));
  } else if (r.sc) {
    r.dataset_label = "synthetic:" + r.sc->name;
    det = std::make_shared<umine::DetDatabase>(
        umine::generate_synthetic(r.sc->synth, r.seed));
  } else {
    throw umine::ParamError("need --input FILE or --scenario NAME");
  }

  r.det = det;
  if (f.skew) {
    r.skew = *f.skew;
    r.db = std::make_shared<umine::UncertainDatabase>(
        umine::assign_zipf(*det, r.skew, f.zero_cutoff, r.seed));
  } else {
    r.mean = f.mean.value_or(r.sc ? r.sc->mean : 0.5);
    r.variance = f.variance.value_or(r.sc ? r.sc->variance : 0.05);
    r.db = std::make_shared<umine::UncertainDatabase>(
        umine::assign_gaussian(*det, r.mean, r.variance, r.seed));
  }
  return r;
}

std::string format_result_file(const umine::MiningReport& rep) {
  std::string out = "# itemset\tesup\tfreq_prob\n";
  char buf[64];
  for (const auto& ri : rep.itemsets) {
    out += ri.items.to_string();
    std::snprintf(buf, sizeof buf, "\t%.12g\t", ri.esup);
    out += buf;
    if (ri.freq_prob) {
      std::snprintf(buf, sizeof buf, "%.12g", *ri.freq_prob);
      out += buf;
    } else {
      out += '-';
    }
    out += '\n';
  }
  return out;
}

std::vector<umine::Itemset> parse_result_file(const std::string& path) {
  std::string text = umine::read_file(path);
  std::vector<umine::Itemset> out;
  std::istringstream ss(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::string items_part = line.substr(0, line.find('\t'));
    std::istringstream is(items_part);
    std::vector<umine::ItemId> ids;
    unsigned long v = 0;
    while (is >> v) ids.push_back(static_cast<umine::ItemId>(v));
    if (ids.empty()) {
      throw umine::ParseError("empty itemset in result file", lineno);
    }
    out.emplace_back(std::move(ids));
  }
  return out;
}

struct ThresholdFlags {
  std::optional<double> min_esup, min_sup, pft;
};

struct Thresholds {
  double min_esup = 0.5, min_sup = 0.5, pft = 0.9;
};

Thresholds resolve_thresholds(const ThresholdFlags& f,
                              const std::optional<umine::Scenario>& sc) {
  Thresholds t;
  t.min_esup = f.min_esup.value_or(sc ? sc->min_sup : 0.5);
  t.min_sup = f.min_sup.value_or(sc ? sc->min_sup : 0.5);
  t.pft = f.pft.value_or(sc ? sc->pft : 0.9);
  return t;
}

int cmd_mine(const InputFlags& in, const ThresholdFlags& tf,
             std::size_t runs, double timeout_secs, bool memo,
             const std::string& out_csv, const std::string& result_out,
             const std::string& reference, const std::string& algo) {
  ResolvedInput r = resolve_input(in);
  Thresholds t = resolve_thresholds(tf, r.sc);

  umine::ExperimentConfig cfg;
  cfg.algorithm = algo;
  cfg.min_esup = t.min_esup;
  cfg.min_sup = t.min_sup;
  cfg.pft = t.pft;
  cfg.runs = runs;
  cfg.timeout_secs = timeout_secs;
  cfg.normal_memo = memo;

  umine::ExperimentResult res = umine::run_experiment(*r.db, cfg);
  res.record.dataset = r.dataset_label;
  res.record.scenario = r.scenario_label;
  res.record.mean = r.mean;
  res.record.variance = r.variance;
  res.record.skew = r.skew;
  res.record.seed = r.seed;

  if (!reference.empty()) {
    std::vector<umine::Itemset> ref = parse_result_file(reference);
    umine::PrecisionRecall pr =
        umine::precision_recall(umine::report_itemsets(res.report), ref);
    res.record.precision = pr.precision;
    res.record.recall = pr.recall;
  }

  std::string csv = umine::csv_header();
  csv += '\n';
  csv += umine::csv_row(res.record);
  csv += '\n';
  umine::write_file(out_csv, csv);
  if (!result_out.empty()) {
    umine::write_file(result_out, format_result_file(res.report));
  }
  std::fprintf(stderr, "%s on %s: %zu itemsets, %.3f ms, status %s\n",
               algo.c_str(), r.dataset_label.c_str(),
               res.report.itemsets.size(), res.record.wall_ms,
               res.record.status.c_str());
  return 0;
}

int cmd_gen(const InputFlags& in, std::string format, std::size_t n_txn,
            std::size_t n_items, double avg_len, const std::string& out) {
  std::uint64_t seed = resolve_seed(in.seed_flag);
  umine::SynthSpec spec;
  std::optional<umine::Scenario> sc;
  if (!in.scenario_name.empty()) {
    sc = umine::scenario(in.scenario_name);
    spec = sc->synth;
  } else {
    if (n_txn == 0 || n_items == 0 || avg_len <= 0.0) {
      throw umine::ParamError(
          "need --scenario or all of --n-transactions/--n-items/--avg-len");
    }
    spec.n_transactions = n_txn;
    spec.n_items = n_items;
    spec.avg_len = avg_len;
  }
  umine::DetDatabase det = umine::generate_synthetic(spec, seed);

  bool has_assignment = in.mean || in.variance || in.skew || sc;
  if (format.empty()) format = has_assignment ? "udb" : "fimi";
  if (format == "fimi") {
    if (in.mean || in.variance || in.skew) {
      throw umine::ParamError(
          "probability flags are meaningless with --format fimi");
    }
    umine::write_file(out, umine::write_fimi(det));
    std::fprintf(stderr, "wrote %zu transactions to %s\n", det.size(),
                 out.c_str());
    return 0;
  }
  if (format != "udb") {
    throw umine::ParamError("unknown format: " + format);
  }
  if (in.mean && in.skew) {
    throw umine::ParamError(
        "choose one probability assignment: gaussian or zipf");
  }
  umine::UncertainDatabase db;
  if (in.skew) {
    db = umine::assign_zipf(det, *in.skew, in.zero_cutoff, seed);
  } else if (in.mean || in.variance || sc) {
    double mean = in.mean.value_or(sc ? sc->mean : 0.5);
    double variance = in.variance.value_or(sc ? sc->variance : 0.05);
    db = umine::assign_gaussian(det, mean, variance, seed);
  } else {
    throw umine::ParamError(
        "udb output needs --mean/--variance, --skew, or a --scenario");
  }
  umine::write_file(out, umine::write_udb(db));
  std::fprintf(stderr, "wrote %zu transactions to %s\n", db.n(), out.c_str());
  return 0;
}

int cmd_sweep(const InputFlags& in, const ThresholdFlags& tf,
              const std::string& axis, const std::vector<double>& values,
              std::size_t runs, double timeout_secs, bool memo,
              const std::string& out_csv, const std::string& algo) {
  if (values.empty()) throw umine::ParamError("--values must be non-empty");
  const bool regen_axis =
      axis == "n" || axis == "skew" || axis == "mean" || axis == "variance";

  std::vector<umine::SweepPoint> points;
  if (!regen_axis && axis != "min-esup" && axis != "min-sup" && axis != "pft") {
    throw umine::ParamError("unknown sweep axis: " + axis);
  }

  ResolvedInput base;
  if (!regen_axis) {
    base = resolve_input(in);
  } else if (in.scenario_name.empty() && in.input_path.empty()) {
    throw umine::ParamError("sweep needs --input or --scenario");
  }

  for (double v : values) {
    umine::SweepPoint p;
    InputFlags f = in;
    if (axis == "n") {
      if (in.scenario_name.empty()) {
        throw umine::ParamError("axis n needs --scenario");
      }
      char label[64];
      std::snprintf(label, sizeof label, "%s-%.0f",
                    in.scenario_name.c_str(), v);
      // Rebuild the scenario at the requested transaction count.
      f.scenario_name = in.scenario_name;
      p.make_db = [f, v]() {
        umine::Scenario sc = umine::scenario(f.scenario_name);
        sc.synth.n_transactions = static_cast<std::size_t>(v);
        std::uint64_t seed = resolve_seed(f.seed_flag);
        auto det = umine::generate_synthetic(sc.synth, seed);
        if (f.skew) {
          return std::make_shared<const umine::UncertainDatabase>(
              umine::assign_zipf(det, *f.skew, f.zero_cutoff, seed));
        }
        double mean = f.mean.value_or(sc.mean);
        double variance = f.variance.value_or(sc.variance);
        return std::make_shared<const umine::UncertainDatabase>(
            umine::assign_gaussian(det, mean, variance, seed));
      };
    } else if (regen_axis) {
      if (axis == "skew") {
        f.skew = v;
      } else if (axis == "mean") {
        f.mean = v;
      } else {
        f.variance = v;
      }
      p.make_db = [f]() {
        ResolvedInput r = resolve_input(f);
        return r.db;
      };
    } else {
      auto db = base.db;
      p.make_db = [db]() { return db; };
    }

    std::optional<umine::Scenario> sc;
    if (!in.scenario_name.empty()) sc = umine::scenario(in.scenario_name);
    Thresholds t = resolve_thresholds(tf, sc);
    p.cfg.algorithm = algo;
    p.cfg.min_esup = axis == "min-esup" ? v : t.min_esup;
    p.cfg.min_sup = axis == "min-sup" ? v : t.min_sup;
    p.cfg.pft = axis == "pft" ? v : t.pft;
    p.cfg.runs = runs;
    p.cfg.timeout_secs = timeout_secs;
    p.cfg.normal_memo = memo;

    p.proto.algorithm = algo;
    p.proto.dataset = !in.input_path.empty()
                          ? in.input_path
                          : "synthetic:" + in.scenario_name;
    p.proto.scenario = in.scenario_name;
    p.proto.min_esup = p.cfg.min_esup;
    p.proto.min_sup = p.cfg.min_sup;
    p.proto.pft = p.cfg.pft;
    p.proto.seed = resolve_seed(in.seed_flag);
    p.proto.runs = runs;
    p.proto.mean = axis == "mean" ? v : in.mean.value_or(sc ? sc->mean : 0.0);
    p.proto.variance =
        axis == "variance" ? v : in.variance.value_or(sc ? sc->variance : 0.0);
    p.proto.skew = axis == "skew" ? v : in.skew.value_or(0.0);
    points.push_back(std::move(p));
  }

  std::ofstream out(out_csv, std::ios::trunc);
  if (!out) throw umine::IoError("cannot open for writing: " + out_csv);
  std::vector<umine::BenchRecord> recs = umine::run_sweep(points, out);
  std::size_t errors = 0;
  for (const auto& r : recs) {
    if (r.status == "error") ++errors;
  }
  std::fprintf(stderr, "sweep wrote %zu rows to %s (%zu errors)\n",
               recs.size(), out_csv.c_str(), errors);
  return 0;
}

int cmd_verify(std::size_t cases, std::optional<std::uint64_t> seed_flag,
               std::size_t max_txn, std::size_t max_items) {
  std::uint64_t seed = resolve_seed(seed_flag);
  umine::SeededRng rng(seed);
  const double esup_grid[] = {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  const double pft_grid[] = {0.3, 0.5, 0.7, 0.9};

  for (std::size_t c = 0; c < cases; ++c) {
    std::size_t n = 2 + rng.uniform_below(max_txn - 1);
    std::size_t k = 1 + rng.uniform_below(max_items);
    std::vector<umine::UncertainTransaction> ts;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<umine::Unit> units;
      for (std::size_t j = 0; j < k; ++j) {
        if (rng.uniform01() < 0.55) {
          units.push_back(umine::Unit{static_cast<umine::ItemId>(j + 1),
                                      umine::Probability(
                                          rng.uniform_open_closed())});
        }
      }
      ts.emplace_back(i + 1, std::move(units));
    }
    umine::UncertainDatabase db(std::move(ts));
    double min_esup = esup_grid[rng.uniform_below(7)];
    double min_sup = esup_grid[rng.uniform_below(7)];
    double pft = pft_grid[rng.uniform_below(4)];
    umine::MiningParams params =
        umine::MiningParams::for_db(db.n(), min_esup, min_sup, pft);
    umine::GroundTruth gt = umine::brute_force_mine(db, params);

    auto wrong = [&](const std::string& what) {
      std::fprintf(stderr,
                   "verify FAILED (case %zu, seed %llu): %s\n"
                   "  n=%zu items=%zu min_esup=%.2f min_sup=%.2f pft=%.2f\n",
                   c, static_cast<unsigned long long>(seed), what.c_str(), n,
                   k, min_esup, min_sup, pft);
      return 3;
    };

    auto check_esup = [&](const char* tag) -> std::optional<int> {
      umine::MiningReport rep =
          umine::run_algorithm(tag, db, min_esup, min_sup, pft);
      if (rep.itemsets.size() != gt.esup_frequent.size()) {
        return wrong(std::string(tag) + ": wrong itemset count");
      }
      for (std::size_t i = 0; i < rep.itemsets.size(); ++i) {
        if (rep.itemsets[i].items != gt.esup_frequent[i].items) {
          return wrong(std::string(tag) + ": itemset mismatch");
        }
        if (std::abs(rep.itemsets[i].esup - gt.esup_frequent[i].value) >
            1e-9) {
          return wrong(std::string(tag) + ": esup mismatch");
        }
      }
      return std::nullopt;
    };
    for (const char* tag : {"uapriori", "ufp", "uhmine"}) {
      if (auto rc = check_esup(tag)) return *rc;
    }

    auto check_prob = [&](const char* tag) -> std::optional<int> {
      umine::MiningReport rep =
          umine::run_algorithm(tag, db, min_esup, min_sup, pft);
      if (rep.itemsets.size() != gt.prob_frequent.size()) {
        return wrong(std::string(tag) + ": wrong itemset count");
      }
      for (std::size_t i = 0; i < rep.itemsets.size(); ++i) {
        if (rep.itemsets[i].items != gt.prob_frequent[i].items) {
          return wrong(std::string(tag) + ": itemset mismatch");
        }
        if (!rep.itemsets[i].freq_prob ||
            std::abs(*rep.itemsets[i].freq_prob -
                     gt.prob_frequent[i].value) > 1e-9) {
          return wrong(std::string(tag) + ": probability mismatch");
        }
      }
      return std::nullopt;
    };
    for (const char* tag : {"dp", "dpb", "dc", "dcb"}) {
      if (auto rc = check_prob(tag)) return *rc;
    }
  }
  std::printf("verified %zu cases: OK\n", cases);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frequent-itemset mining over uncertain databases"};
  app.require_subcommand(0, 1);
  bool list_algos = false;
  app.add_flag("--list-algorithms", list_algos,
               "list algorithm tags and exit");

  InputFlags in;
  ThresholdFlags tf;
  std::string algo, out_csv, result_out, reference, format, axis;
  std::vector<double> values;
  std::size_t runs = 10, cases = 200, max_txn = 10, max_items = 5;
  std::size_t n_txn = 0, n_items = 0;
  double avg_len = 0.0, timeout_secs = 3600.0;
  bool memo = false;

  auto add_input_flags = [&](CLI::App* cmd, bool with_thresholds) {
    cmd->add_option("--input", in.input_path, "input database file");
    cmd->add_option("--scenario", in.scenario_name,
                    "named dataset recipe, e.g. accident or accident-50k");
    cmd->add_option("--mean", [&in](const CLI::results_t& r) {
      in.mean = std::stod(r[0]);
      return true;
    }, "gaussian assignment mean");
    cmd->add_option("--variance", [&in](const CLI::results_t& r) {
      in.variance = std::stod(r[0]);
      return true;
    }, "gaussian assignment variance");
    cmd->add_option("--skew", [&in](const CLI::results_t& r) {
      in.skew = std::stod(r[0]);
      return true;
    }, "zipf assignment skew");
    cmd->add_option("--zero-cutoff", in.zero_cutoff,
                    "zipf: drop units with probability at or below this");
    cmd->add_option("--seed", [&in](const CLI::results_t& r) {
      in.seed_flag = std::stoull(r[0]);
      return true;
    }, "RNG seed (falls back to UMINE_SEED, then 1)");
    if (with_thresholds) {
      cmd->add_option("--min-esup", [&tf](const CLI::results_t& r) {
        tf.min_esup = std::stod(r[0]);
        return true;
      }, "relative expected-support threshold in (0,1]");
      cmd->add_option("--min-sup", [&tf](const CLI::results_t& r) {
        tf.min_sup = std::stod(r[0]);
        return true;
      }, "relative support threshold in (0,1]");
      cmd->add_option("--pft", [&tf](const CLI::results_t& r) {
        tf.pft = std::stod(r[0]);
        return true;
      }, "probabilistic-frequent threshold in (0,1)");
      cmd->add_option("--runs", runs, "measured repetitions (default 10)");
      cmd->add_option("--timeout-secs", timeout_secs,
                      "per-run deadline in seconds (default 3600)");
      cmd->add_flag("--memo", memo,
                    "cache normal-approximation Phi lookups");
    }
  };

  CLI::App* mine = app.add_subcommand("mine", "run one mining experiment");
  add_input_flags(mine, true);
  mine->add_option("--algo", algo, "algorithm tag (see --list-algorithms)")
      ->required();
  mine->add_option("--out", out_csv, "metrics CSV path")->required();
  mine->add_option("--result-out", result_out,
                   "write the mined itemsets to this file");
  mine->add_option("--reference", reference,
                   "result file to score precision/recall against");

  CLI::App* gen = app.add_subcommand("gen", "generate a dataset");
  add_input_flags(gen, false);
  gen->add_option("--n-transactions", n_txn, "transaction count");
  gen->add_option("--n-items", n_items, "item universe size");
  gen->add_option("--avg-len", avg_len, "average transaction length");
  gen->add_option("--format", format, "udb (default) or fimi");
  gen->add_option("--out", out_csv, "output path")->required();

  CLI::App* sweep = app.add_subcommand(
      "sweep", "run one experiment per value of a swept axis");
  add_input_flags(sweep, true);
  sweep->add_option("--algo", algo, "algorithm tag")->required();
  sweep->add_option("--axis", axis,
                    "min-esup | min-sup | pft | n | skew | mean | variance")
      ->required();
  sweep->add_option("--values", values, "axis values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--out", out_csv, "metrics CSV path")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check all miners against the brute-force oracle on "
                "random small databases");
  verify->add_option("--cases", cases, "number of random cases");
  verify->add_option("--seed", [&in](const CLI::results_t& r) {
    in.seed_flag = std::stoull(r[0]);
    return true;
  }, "RNG seed");
  verify->add_option("--max-transactions", max_txn, "max transactions");
  verify->add_option("--max-items", max_items, "max distinct items");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }

  try {
    if (list_algos) {
      print_algorithms();
      return 0;
    }
    if (mine->parsed()) {
      bool known = false;
      for (const auto& t : umine::algorithm_tags()) known |= t == algo;
      if (!known) throw umine::ParamError("unknown algorithm tag: " + algo);
      return cmd_mine(in, tf, runs, timeout_secs, memo, out_csv, result_out,
                      reference, algo);
    }
    if (gen->parsed()) {
      return cmd_gen(in, format, n_txn, n_items, avg_len, out_csv);
    }
    if (sweep->parsed()) {
      bool known = false;
      for (const auto& t : umine::algorithm_tags()) known |= t == algo;
      if (!known) throw umine::ParamError("unknown algorithm tag: " + algo);
      return cmd_sweep(in, tf, axis, values, runs, timeout_secs, memo,
                       out_csv, algo);
    }
    if (verify->parsed()) {
      return cmd_verify(cases, in.seed_flag, max_txn, max_items);
    }
    std::fprintf(stderr, "%s", app.help().c_str());
    return 1;
  } catch (const umine::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const umine::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 2;
  } catch (const umine::ParamError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const umine::SizeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const umine::InvariantError& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
}
