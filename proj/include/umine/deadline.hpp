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

#include <chrono>

#include "umine/error.hpp"

namespace umine {

// Cooperative timeout: miners call check() at level/candidate/recursion
// boundaries and unwind with TimeoutError past the deadline. No threads or
// signals, so runs stay deterministic up to the moment of expiry.
class Deadline {
 public:
  Deadline() = default;  // disabled: check() never fires

  static Deadline after(std::chrono::duration<double> d) {
    Deadline dl;
    dl.enabled_ = true;
    dl.at_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(d);
    return dl;
  }

  bool enabled() const noexcept { return enabled_; }

  bool expired() const {
    return enabled_ && std::chrono::steady_clock::now() >= at_;
  }

  void check() const {
    if (expired()) throw TimeoutError("deadline exceeded");
  }

 private:
  bool enabled_ = false;
  std::chrono::steady_clock::time_point at_{};
};

/// Options threaded through every miner.
struct RunOptions {
  Deadline deadline;
  bool normal_memo = false;  // cache Phi lookups in the normal approximation
};

}  // namespace umine
