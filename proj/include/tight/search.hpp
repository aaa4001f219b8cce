// Copyright 2026 The tightdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Integrality search over (s, x, y): all triples with y in [x+s+2, 2x+1]
// such that alpha_{s,1}, ..., alpha_{s,i_max} are integers.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tight/exact_arith.hpp"

namespace tight {

/// Largest s the hot path supports (primes <= s_hi must fit a 64-bit mask).
inline constexpr std::int64_t kMaxSearchS = 311;

struct Hit {
  std::int64_t s = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::vector<BigInt> alphas;  // alpha_{s,1..i_max}
  /// Extra evidence beyond the alpha filter: whether Phi_s for
  /// (v, k) = (y + 2s - 1, x + s) has all roots integral in [0, k-1].
  bool phi_checked = false;
  std::optional<std::vector<std::int64_t>> phi_roots;

  bool operator==(const Hit& o) const { return s == o.s && x == o.x && y == o.y; }
  std::strong_ordering operator<=>(const Hit& o) const {
    if (auto c = s <=> o.s; c != 0) return c;
    if (auto c = x <=> o.x; c != 0) return c;
    return y <=> o.y;
  }
};

enum class ChunkStatus { kPending, kDone };

struct SearchChunk {
  std::int64_t s_lo = 10;
  std::int64_t s_hi = 287;
  std::int64_t x_lo = 1;
  std::int64_t x_hi = 1;
  ChunkStatus status = ChunkStatus::kPending;
  std::vector<Hit> hits;
};

/// Builds a Hit for a triple already known to pass, with exact alphas and
/// the Phi_s root check.
Hit make_hit(std::int64_t s, std::int64_t x, std::int64_t y, std::int64_t i_max);

/// Processes the chunk and marks it done. Hits are ordered by (s, x, y).
/// Requires 1 <= s_lo <= s_hi <= kMaxSearchS, 1 <= x_lo, i_max <= s_lo.
SearchChunk search_chunk(SearchChunk chunk, std::int64_t i_max = 6);

/// All y in [x+s+2, 2x+1] dividing s x (x+1), ascending.
std::vector<std::int64_t> enumerate_candidate_y(std::int64_t s, std::int64_t x);

/// Brute-force oracle: every y in the window, every alpha by direct rational
/// evaluation.
std::vector<Hit> verify_window(std::int64_t s, std::int64_t x_lo, std::int64_t x_hi,
                               std::int64_t i_max);

struct SearchConfig {
  std::int64_t s_lo = 10;
  std::int64_t s_hi = 287;
  std::int64_t x_max = 10'000'000;
  std::int64_t chunk_size = std::int64_t{1} << 24;
  unsigned workers = 1;
  std::int64_t i_max = 6;
  /// Empty: no checkpoint file.
  std::string checkpoint_path;
  bool resume = false;
};

struct SearchResult {
  std::vector<SearchChunk> chunks;  // canonical order
  std::vector<Hit> hits;            // sorted
  std::size_t resumed_chunks = 0;   // taken from the checkpoint, not recomputed
};

/// Splits [1, x_max] into x-chunks of chunk_size covering [s_lo, s_hi].
std::vector<SearchChunk> plan_chunks(const SearchConfig& config);

/// Runs every chunk on `workers` threads. Completed chunks are appended to
/// the checkpoint in canonical order; `on_hit` sees each hit as soon as its
/// chunk finishes (called under the writer lock).
SearchResult run_search(const SearchConfig& config,
                        const std::function<void(const Hit&)>& on_hit = {});

}  // namespace tight
