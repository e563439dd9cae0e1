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
#include <random>

#include "umine/error.hpp"

namespace umine {

// Every stochastic routine in the library draws from this wrapper. The
// mappings below are spelled out by hand (instead of std::*_distribution,
// whose algorithms are implementation-defined) so that one seed pins
// byte-identical output on any platform with IEEE doubles.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform on [0,1): top 53 bits scaled by 2^-53.
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0,1]: ((x >> 11) + 1) * 2^-53. Never returns 0, so it is
  /// safe under log().
  double uniform_open_closed() {
    return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
  }

  /// Box-Muller, cosine branch; consumes exactly two uniforms per call.
  double normal(double mean, double stddev) {
    double u1 = uniform_open_closed();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Uniform integer in [0, n) by rejection from the top of the 64-bit range.
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n == 0) throw ParamError("uniform_below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  /// Knuth's product method; adequate for the lambdas the generator uses
  /// (transaction lengths, well under 700 where exp(-lambda) underflows).
  std::size_t poisson(double lambda) {
    if (!(lambda >= 0.0)) throw ParamError("poisson lambda must be >= 0");
    double l = std::exp(-lambda);
    std::size_t k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform_open_closed();
    } while (p > l);
    return k - 1;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace umine
