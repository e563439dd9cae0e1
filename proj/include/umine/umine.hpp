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

// Frequent-itemset mining over uncertain transaction databases: exact
// expected-support miners (UApriori, UFP-growth, UH-Mine), exact
// probabilistic-frequent miners (DP/DC with optional Chernoff pruning),
// approximate probabilistic miners (Poisson and Normal), a possible-worlds
// oracle, dataset generators, and a benchmark harness.

#include "umine/apriori.hpp"
#include "umine/approx_prob.hpp"
#include "umine/assign.hpp"
#include "umine/bench.hpp"
#include "umine/datagen.hpp"
#include "umine/deadline.hpp"
#include "umine/error.hpp"
#include "umine/exact_prob.hpp"
#include "umine/fft.hpp"
#include "umine/io.hpp"
#include "umine/mem_meter.hpp"
#include "umine/oracle.hpp"
#include "umine/report.hpp"
#include "umine/rng.hpp"
#include "umine/types.hpp"
#include "umine/uapriori.hpp"
#include "umine/ufp_growth.hpp"
#include "umine/uh_mine.hpp"
