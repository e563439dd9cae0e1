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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "testutil.hpp"
#include "umine/approx_prob.hpp"
#include "umine/exact_prob.hpp"
#include "umine/fft.hpp"
#include "umine/oracle.hpp"
#include "umine/rng.hpp"
#include "umine/uapriori.hpp"

namespace umine {
namespace {

TEST(Fft, ConvolveMatchesSchoolbook) {
  SeededRng rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    std::size_t na = 1 + rng.uniform_below(120);
    std::size_t nb = 1 + rng.uniform_below(120);
    std::vector<double> a(na), b(nb);
    for (double& v : a) v = rng.uniform01();
    for (double& v : b) v = rng.uniform01();
    std::vector<double> got = convolve(a, b);
    ASSERT_EQ(got.size(), na + nb - 1);
    for (std::size_t k = 0; k < got.size(); ++k) {
      double want = 0.0;
      for (std::size_t i = 0; i < na; ++i) {
        if (k >= i && k - i < nb) want += a[i] * b[k - i];
      }
      EXPECT_NEAR(got[k], want, 1e-9) << "k=" << k;
    }
  }
  EXPECT_THROW(convolve(std::vector<double>{}, std::vector<double>{1.0}),
               ParamError);
}

TEST(ExactProb, DpExampleValues) {
  // Item 3 of the running example: probabilities .9 .9 .8, threshold 2.
  std::vector<double> c = {0.9, 0.9, 0.8};
  EXPECT_NEAR(freq_prob_dp(c, 2), 0.954, 1e-12);
  EXPECT_NEAR(freq_prob_dc(c, 2), 0.954, 1e-12);
  std::vector<double> a = {0.8, 0.8, 0.5, 0.0};
  EXPECT_NEAR(freq_prob_dp(a, 2), 0.80, 1e-12);
  EXPECT_NEAR(freq_prob_dc(a, 2), 0.80, 1e-12);
}

TEST(ExactProb, EdgeThresholds) {
  std::vector<double> v = {0.5, 0.5};
  EXPECT_DOUBLE_EQ(freq_prob_dp(v, 0), 1.0);
  EXPECT_DOUBLE_EQ(freq_prob_dc(v, 0), 1.0);
  EXPECT_DOUBLE_EQ(freq_prob_dp(v, 3), 0.0);
  EXPECT_DOUBLE_EQ(freq_prob_dc(v, 3), 0.0);
  std::vector<double> z = {0.0, 0.0, 0.7};
  EXPECT_NEAR(freq_prob_dp(z, 1), 0.7, 1e-12);
  EXPECT_NEAR(freq_prob_dc(z, 1), 0.7, 1e-12);
  EXPECT_DOUBLE_EQ(freq_prob_dc(z, 2), 0.0);  // only one nonzero trial
  std::vector<double> ones(5, 1.0);
  EXPECT_NEAR(freq_prob_dp(ones, 5), 1.0, 1e-12);
  EXPECT_NEAR(freq_prob_dc(ones, 5), 1.0, 1e-12);
}

TEST(ExactProb, DpDcAgreeOnRandomVectors) {
  SeededRng rng(77);
  for (int rep = 0; rep < 300; ++rep) {
    std::size_t n = 1 + rng.uniform_below(200);  // crosses the FFT threshold
    std::vector<double> q(n);
    for (double& v : q) {
      v = rng.uniform01() < 0.1 ? 0.0 : rng.uniform_open_closed();
    }
    std::size_t ms = rng.uniform_below(n + 2);
    double dp = freq_prob_dp(q, ms);
    double dc = freq_prob_dc(q, ms);
    EXPECT_NEAR(dp, dc, 1e-9) << "n=" << n << " ms=" << ms;
  }
}

TEST(ExactProb, DpMatchesOracleOnDatabases) {
  SeededRng rng(4);
  for (int rep = 0; rep < 40; ++rep) {
    UncertainDatabase db = test::random_db(rng, 10, 4);
    std::vector<ItemId> u(db.item_universe().begin(),
                          db.item_universe().end());
    if (u.size() < 2) continue;
    Itemset x({u[0], u[1]});
    std::vector<double> qs = containment_vector(db, x.items());
    for (std::size_t ms = 0; ms <= db.n() + 1; ++ms) {
      double want = ms <= db.n() ? frequent_probability(db, x.items(), ms)
                                 : 0.0;
      EXPECT_NEAR(freq_prob_dp(qs, ms), want, 1e-12);
    }
  }
}

TEST(Chernoff, WorkedDecisions) {
  // esup 1.2 against ms 3: delta = 0.8 / 1.2, inside the sub-exponential
  // regime; bound exp(-delta^2 * mu / 4) ~ 0.875 sits below pft 0.9.
  ChernoffDecision d = chernoff_prune(1.2, 3, 0.9);
  EXPECT_TRUE(d.pruned);
  EXPECT_NEAR(d.delta, 0.8 / 1.2, 1e-12);
  // Same candidate against a laxer pft is kept.
  EXPECT_FALSE(chernoff_prune(1.2, 3, 0.5).pruned);
  // esup above ms - 1: delta <= 0, never pruned.
  EXPECT_FALSE(chernoff_prune(2.6, 2, 0.9).pruned);
  EXPECT_FALSE(chernoff_prune(2.0, 3, 0.9).pruned);
  // Zero esup: support is identically zero; always pruned.
  ChernoffDecision z = chernoff_prune(0.0, 1, 0.9);
  EXPECT_TRUE(z.pruned);
  EXPECT_TRUE(std::isinf(z.delta));
}

TEST(Chernoff, LargeDeviationRegime) {
  // delta = (50 - 2 - 1) / 2 = 23.5 > 2e - 1, so the 2^-(delta mu) branch
  // applies: 2^-47 is far below any pft.
  ChernoffDecision d = chernoff_prune(2.0, 50, 0.5);
  EXPECT_TRUE(d.pruned);
  EXPECT_GT(d.delta, 2.0 * std::numbers::e - 1.0);
}

TEST(Chernoff, NeverPrunesTrueFrequent) {
  SeededRng rng(88);
  const double pft_grid[] = {0.3, 0.5, 0.7, 0.9};
  for (int rep = 0; rep < 200; ++rep) {
    std::size_t n = 2 + rng.uniform_below(11);
    std::vector<double> q(n);
    for (double& v : q) v = rng.uniform01();
    std::size_t ms = 1 + rng.uniform_below(n);
    double esup = 0.0;
    for (double v : q) esup += v;
    for (double pft : pft_grid) {
      if (chernoff_prune(esup, ms, pft).pruned) {
        EXPECT_LE(freq_prob_dp(q, ms), pft + 1e-12)
            << "pruned a truly frequent candidate";
      }
    }
  }
}

TEST(ExactMiners, FourVariantsMatchOracle) {
  SeededRng rng(123);
  const double sup_grid[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  for (int rep = 0; rep < 60; ++rep) {
    UncertainDatabase db =
        test::random_db(rng, 2 + rng.uniform_below(9), 1 + rng.uniform_below(5));
    double min_sup = sup_grid[rng.uniform_below(5)];
    double pft = 0.3 + 0.2 * static_cast<double>(rng.uniform_below(4));
    MiningParams params = MiningParams::for_db(db.n(), 0.2, min_sup, pft);
    GroundTruth gt = brute_force_mine(db, params);
    for (ExactMethod m : {ExactMethod::kDP, ExactMethod::kDC}) {
      for (bool bound : {false, true}) {
        MiningReport rep2 = mine_probabilistic(db, params, m, bound);
        ASSERT_EQ(rep2.itemsets.size(), gt.prob_frequent.size())
            << rep2.algorithm << " rep=" << rep;
        for (std::size_t i = 0; i < rep2.itemsets.size(); ++i) {
          EXPECT_EQ(rep2.itemsets[i].items, gt.prob_frequent[i].items);
          ASSERT_TRUE(rep2.itemsets[i].freq_prob.has_value());
          EXPECT_NEAR(*rep2.itemsets[i].freq_prob,
                      gt.prob_frequent[i].value, 1e-9);
        }
      }
    }
  }
}

TEST(ExactMiners, ChernoffVariantsCountPruning) {
  UncertainDatabase db = test::example_db();
  MiningParams params = MiningParams::for_db(4, 0.2, 0.75, 0.9);  // ms = 3
  MiningReport plain = mine_probabilistic(db, params, ExactMethod::kDP, false);
  MiningReport bounded =
      mine_probabilistic(db, params, ExactMethod::kDP, true);
  EXPECT_EQ(plain.metrics.pruned_count, 0u);
  EXPECT_GT(bounded.metrics.pruned_count, 0u);
  ASSERT_EQ(plain.itemsets.size(), bounded.itemsets.size());
}

TEST(Poisson, TailExampleAndMonotonicity) {
  // lambda 2.6, threshold 2: 1 - e^-2.6 (1 + 2.6).
  EXPECT_NEAR(poisson_freq_prob(2.6, 2), 0.732615, 1e-6);
  EXPECT_DOUBLE_EQ(poisson_freq_prob(2.6, 0), 1.0);
  EXPECT_DOUBLE_EQ(poisson_freq_prob(0.0, 2), 0.0);
  double prev = 0.0;
  for (double lam = 0.5; lam <= 8.0; lam += 0.5) {
    double p = poisson_freq_prob(lam, 3);
    EXPECT_GE(p, prev);
    prev = p;
  }
  prev = 1.0;
  for (std::size_t ms = 0; ms <= 12; ++ms) {
    double p = poisson_freq_prob(3.0, ms);
    EXPECT_LE(p, prev + 1e-15);
    prev = p;
  }
  // Large lambda must not overflow the log-space sum.
  EXPECT_NEAR(poisson_freq_prob(1e5, 1), 1.0, 1e-12);
  EXPECT_GT(poisson_freq_prob(1e5, 100000), 0.4);
}

TEST(Poisson, LambdaThresholdBracket) {
  LambdaThreshold t = lambda_threshold(2, 0.9);
  EXPECT_LE(t.hi - t.lo, 1e-6 + 1e-12);
  // Solves e^-lambda (1 + lambda) = 0.1.
  EXPECT_NEAR(t.lo, 3.8897, 2e-4);
  EXPECT_LE(poisson_freq_prob(t.lo, 2), 0.9);
  EXPECT_GT(poisson_freq_prob(t.hi, 2), 0.9);
  for (std::size_t ms : {1u, 5u, 40u, 1000u}) {
    for (double pft : {0.3, 0.7, 0.95}) {
      LambdaThreshold b = lambda_threshold(ms, pft);
      EXPECT_LE(poisson_freq_prob(b.lo, ms), pft);
      EXPECT_GT(poisson_freq_prob(b.hi, ms), pft);
    }
  }
  EXPECT_THROW(lambda_threshold(0, 0.5), ParamError);
}

TEST(Normal, SurvivalExampleAndEdges) {
  // Item 3 of the running example: esup 2.6, var 0.34, threshold 2.
  EXPECT_NEAR(normal_freq_prob(2.6, 0.34, 2), 0.9704, 1e-4);
  // Zero variance degenerates to a step at ms - 0.5.
  EXPECT_DOUBLE_EQ(normal_freq_prob(2.0, 0.0, 2), 1.0);
  EXPECT_DOUBLE_EQ(normal_freq_prob(1.49, 0.0, 2), 0.0);
  EXPECT_DOUBLE_EQ(normal_freq_prob(1.5, 0.0, 2), 1.0);
  // Tiny negative variance from cancellation is forgiven, real ones are not.
  EXPECT_NO_THROW(normal_freq_prob(1.0, -1e-12, 2));
  EXPECT_THROW(normal_freq_prob(1.0, -0.5, 2), ParamError);
  // Monotone in esup.
  double prev = 0.0;
  for (double e = 0.0; e <= 4.0; e += 0.25) {
    double p = normal_freq_prob(e, 0.5, 2);
    EXPECT_GE(p, prev);
    prev = p;
  }
}

TEST(Normal, MemoMatchesDirect) {
  NormalMemo memo;
  for (double esup = 0.0; esup <= 30.0; esup += 0.37) {
    for (double var : {0.2, 1.0, 7.5}) {
      double direct = normal_freq_prob(esup, var, 12);
      double memoed = normal_freq_prob_memo(esup, var, 12, memo);
      // The memo rounds z to 1e-4, so agreement is near-exact.
      EXPECT_NEAR(direct, memoed, 1e-4);
    }
  }
  EXPECT_GT(memo.size(), 0u);
  EXPECT_DOUBLE_EQ(normal_freq_prob_memo(2.0, 0.0, 2, memo), 1.0);
}

TEST(Normal, CltAccuracyOnLargeVectors) {
  SeededRng rng(2718);
  const std::size_t n = 2000;
  std::vector<double> q(n);
  double esup = 0.0, sumsq = 0.0;
  for (double& v : q) {
    v = rng.uniform01();
    esup += v;
    sumsq += v * v;
  }
  double var = esup - sumsq;
  for (double frac : {0.97, 1.0, 1.03}) {
    auto ms = static_cast<std::size_t>(esup * frac);
    double exact = freq_prob_dp(q, ms);
    double approx = normal_freq_prob(esup, var, ms);
    EXPECT_NEAR(approx, exact, 0.01) << "ms=" << ms;
  }
}

TEST(Poisson, AccuracyInSmallProbabilityRegime) {
  // The Poisson surrogate assumes rare events; with every probability below
  // 0.05 the tail should track the exact distribution closely.
  SeededRng rng(999);
  const std::size_t n = 4000;
  std::vector<double> q(n);
  double esup = 0.0;
  for (double& v : q) {
    v = 0.05 * rng.uniform_open_closed();
    esup += v;
  }
  for (double frac : {0.9, 1.0, 1.1}) {
    auto ms = static_cast<std::size_t>(esup * frac);
    double exact = freq_prob_dp(q, ms);
    double approx = poisson_freq_prob(esup, ms);
    EXPECT_NEAR(approx, exact, 0.02) << "ms=" << ms;
  }
}

// Reference implementation of the Poisson predicate set: every subset of the
// universe whose tail clears pft, by direct enumeration.
std::vector<Itemset> poisson_truth(const UncertainDatabase& db,
                                   const MiningParams& params) {
  std::vector<ItemId> u(db.item_universe().begin(), db.item_universe().end());
  std::vector<Itemset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << u.size());
       ++mask) {
    std::vector<ItemId> items;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (mask >> i & 1) items.push_back(u[i]);
    }
    Itemset x(items);
    double esup = exact_esup(db, x.items());
    if (poisson_freq_prob(esup, params.ms) > params.pft) {
      out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Pdu, FastPathPreservesPredicateSet) {
  SeededRng rng(31415);
  for (int rep = 0; rep < 40; ++rep) {
    UncertainDatabase db =
        test::random_db(rng, 3 + rng.uniform_below(8), 1 + rng.uniform_below(5));
    MiningParams params = MiningParams::for_db(
        db.n(), 0.2, 0.3 + 0.1 * static_cast<double>(rng.uniform_below(5)),
        0.5 + 0.1 * static_cast<double>(rng.uniform_below(4)));
    MiningReport rep2 = pdu_apriori(db, params);
    std::vector<Itemset> want = poisson_truth(db, params);
    ASSERT_EQ(rep2.itemsets.size(), want.size()) << "rep=" << rep;
    for (std::size_t i = 0; i < want.size(); ++i) {
      EXPECT_EQ(rep2.itemsets[i].items, want[i]);
      ASSERT_TRUE(rep2.itemsets[i].freq_prob.has_value());
      EXPECT_NEAR(*rep2.itemsets[i].freq_prob,
                  poisson_freq_prob(rep2.itemsets[i].esup, params.ms),
                  1e-15);
    }
  }
}

TEST(Ndu, AprioriAndHyperstructureAgree) {
  SeededRng rng(1618);
  for (int rep = 0; rep < 40; ++rep) {
    UncertainDatabase db =
        test::random_db(rng, 3 + rng.uniform_below(10), 1 + rng.uniform_below(6));
    MiningParams params = MiningParams::for_db(
        db.n(), 0.2, 0.3 + 0.1 * static_cast<double>(rng.uniform_below(5)),
        0.5 + 0.1 * static_cast<double>(rng.uniform_below(4)));
    MiningReport a = ndu_apriori(db, params);
    MiningReport h = nduh_mine(db, params);
    ASSERT_EQ(a.itemsets.size(), h.itemsets.size()) << "rep=" << rep;
    for (std::size_t i = 0; i < a.itemsets.size(); ++i) {
      EXPECT_EQ(a.itemsets[i].items, h.itemsets[i].items);
      EXPECT_NEAR(a.itemsets[i].esup, h.itemsets[i].esup, 1e-9);
      ASSERT_TRUE(a.itemsets[i].freq_prob.has_value());
      ASSERT_TRUE(h.itemsets[i].freq_prob.has_value());
      EXPECT_NEAR(*a.itemsets[i].freq_prob, *h.itemsets[i].freq_prob, 1e-9);
    }
  }
}

TEST(Ndu, MemoOptionDoesNotChangeResults) {
  SeededRng rng(55);
  UncertainDatabase db = test::random_db(rng, 12, 5);
  MiningParams params = MiningParams::for_db(db.n(), 0.2, 0.4, 0.6);
  RunOptions memo_on;
  memo_on.normal_memo = true;
  MiningReport plain = ndu_apriori(db, params);
  MiningReport memoed = ndu_apriori(db, params, memo_on);
  ASSERT_EQ(plain.itemsets.size(), memoed.itemsets.size());
  for (std::size_t i = 0; i < plain.itemsets.size(); ++i) {
    EXPECT_EQ(plain.itemsets[i].items, memoed.itemsets[i].items);
    EXPECT_NEAR(*plain.itemsets[i].freq_prob, *memoed.itemsets[i].freq_prob,
                1e-4);
  }
}

TEST(Deadline, ExpiredDeadlineAbortsMining) {
  SeededRng rng(8);
  UncertainDatabase db = test::random_db(rng, 12, 6);
  MiningParams params = MiningParams::for_db(db.n(), 0.1, 0.3, 0.5);
  RunOptions opt;
  opt.deadline = Deadline::after(std::chrono::duration<double>(-1.0));
  EXPECT_THROW(mine_probabilistic(db, params, ExactMethod::kDP, false, opt),
               TimeoutError);
  EXPECT_THROW(uapriori(db, 0.1, opt), TimeoutError);
}

}  // namespace
}  // namespace umine
