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

#include <atomic>
#include <cstddef>
#include <cstdint>

// Live/peak heap accounting. The counters live here; the replacement
// operator new/delete live in mem_meter_ops.hpp, which exactly one
// translation unit per metered binary must include.

namespace umine::mem {

inline std::atomic<std::int64_t> g_live{0};
inline std::atomic<std::int64_t> g_peak{0};

inline void note_alloc(std::size_t bytes) noexcept {
  auto b = static_cast<std::int64_t>(bytes);
  std::int64_t live = g_live.fetch_add(b, std::memory_order_relaxed) + b;
  std::int64_t peak = g_peak.load(std::memory_order_relaxed);
  while (live > peak &&
         !g_peak.compare_exchange_weak(peak, live,
                                       std::memory_order_relaxed)) {
  }
}

inline void note_free(std::size_t bytes) noexcept {
  g_live.fetch_sub(static_cast<std::int64_t>(bytes),
                   std::memory_order_relaxed);
}

inline std::int64_t live_bytes() noexcept {
  return g_live.load(std::memory_order_relaxed);
}

inline std::int64_t peak_bytes() noexcept {
  return g_peak.load(std::memory_order_relaxed);
}

/// Restarts the peak watermark at the current live footprint, so a
/// subsequent peak_bytes() - live_bytes() measures one region of interest.
inline void reset_peak() noexcept {
  g_peak.store(g_live.load(std::memory_order_relaxed),
               std::memory_order_relaxed);
}

}  // namespace umine::mem
