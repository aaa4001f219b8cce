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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tight/errors.hpp"
#include "tight/search.hpp"

using namespace tight;

namespace {

std::vector<Hit> chunk_hits(std::int64_t s_lo, std::int64_t s_hi, std::int64_t x_lo, std::int64_t x_hi,
                            std::int64_t i_max) {
  SearchChunk c;
  c.s_lo = s_lo;
  c.s_hi = s_hi;
  c.x_lo = x_lo;
  c.x_hi = x_hi;
  const SearchChunk out = search_chunk(c, i_max);
  CHECK(out.status == ChunkStatus::kDone);
  return out.hits;
}

std::vector<Hit> oracle_hits(std::int64_t s_lo, std::int64_t s_hi, std::int64_t x_lo, std::int64_t x_hi,
                             std::int64_t i_max) {
  std::vector<Hit> out;
  for (std::int64_t s = s_lo; s <= s_hi; ++s) {
    auto w = verify_window(s, x_lo, x_hi, i_max);
    out.insert(out.end(), w.begin(), w.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Witt complement is the only s = 2 hit with k = 16") {
  const auto hits = chunk_hits(2, 2, 1, 100, 2);
  const std::vector<std::pair<std::int64_t, std::int64_t>> want{{14, 20}, {20, 35}, {54, 99}, {84, 119}};
  REQUIRE(hits.size() == want.size());
  for (std::size_t i = 0; i < hits.size(); ++i) {
    CHECK(hits[i].x == want[i].first);
    CHECK(hits[i].y == want[i].second);
  }
  // (x, y) = (14, 20) is (v, k) = (23, 16)
  CHECK(hits[0].phi_checked);
  REQUIRE(hits[0].phi_roots.has_value());
  CHECK(*hits[0].phi_roots == std::vector<std::int64_t>{10, 12});
  CHECK(hits[0].alphas.size() == 2);
}

TEST_CASE("oracle equivalence on 20 random windows") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 20; ++t) {
    const std::int64_t s_lo = std::uniform_int_distribution<std::int64_t>(3, 14)(rng);
    const std::int64_t s_hi = s_lo + std::uniform_int_distribution<std::int64_t>(0, 3)(rng);
    const std::int64_t x_lo = std::uniform_int_distribution<std::int64_t>(1, 1500)(rng);
    const std::int64_t x_hi = x_lo + std::uniform_int_distribution<std::int64_t>(0, 60)(rng);
    const std::int64_t i_max = std::uniform_int_distribution<std::int64_t>(2, std::min<std::int64_t>(s_lo, 4))(rng);
    CAPTURE(s_lo);
    CAPTURE(x_lo);
    CAPTURE(i_max);
    CHECK(chunk_hits(s_lo, s_hi, x_lo, x_hi, i_max) == oracle_hits(s_lo, s_hi, x_lo, x_hi, i_max));
  }
}

TEST_CASE("i_max = 1 keeps every candidate") {
  // with only alpha_1 required the hit set is exactly {y | s x (x+1)} in the window
  for (std::int64_t s : {3, 10, 19}) {
    const auto hits = chunk_hits(s, s, 1, 150, 1);
    std::vector<Hit> want;
    for (std::int64_t x = 1; x <= 150; ++x) {
      for (std::int64_t y = x + s + 2; y <= 2 * x + 1; ++y) {
        if ((s * x * (x + 1)) % y == 0) want.push_back(Hit{s, x, y, {}, false, std::nullopt});
      }
    }
    CHECK(hits == want);
  }
}

TEST_CASE("candidate enumeration") {
  for (std::int64_t s : {2, 10, 287}) {
    for (std::int64_t x = 1; x <= 300; x += 7) {
      std::vector<std::int64_t> want;
      for (std::int64_t y = x + s + 2; y <= 2 * x + 1; ++y) {
        if ((s * x * (x + 1)) % y == 0) want.push_back(y);
      }
      CHECK(enumerate_candidate_y(s, x) == want);
    }
  }
}

TEST_CASE("chunk partition does not change the result") {
  SearchConfig a;
  a.s_lo = 3;
  a.s_hi = 6;
  a.x_max = 1200;
  a.i_max = 3;
  a.chunk_size = 1200;
  SearchConfig b = a;
  b.chunk_size = 97;
  b.workers = 3;
  const auto ra = run_search(a);
  const auto rb = run_search(b);
  CHECK(ra.chunks.size() == 1);
  CHECK(rb.chunks.size() == 13);
  CHECK(ra.hits == rb.hits);
  CHECK(ra.hits == oracle_hits(3, 6, 1, 1200, 3));
  CHECK_FALSE(ra.hits.empty());
  for (std::size_t i = 0; i + 1 < rb.chunks.size(); ++i) CHECK(rb.chunks[i].x_hi + 1 == rb.chunks[i + 1].x_lo);
  CHECK(rb.chunks.back().x_hi == 1200);
}

TEST_CASE("desk range sample has no hits") {
  const auto hits = chunk_hits(10, 287, 1, 20000, 6);
  CHECK(hits.empty());
}

TEST_CASE("large x uses the wide path") {
  // windows above 2^31 exercise 128-bit products; the y window is too wide to
  // scan, so the reference walks the trial-division divisor list instead
  const std::int64_t lo = (std::int64_t{1} << 31) - 20;
  std::vector<Hit> want;
  for (std::int64_t x = lo; x <= lo + 40; ++x) {
    for (std::int64_t y : enumerate_candidate_y(10, x)) want.push_back(Hit{10, x, y, {}, false, std::nullopt});
  }
  const auto got = chunk_hits(10, 10, lo, lo + 40, 1);
  CHECK(got == want);
  CHECK_FALSE(got.empty());
}

TEST_CASE("argument checks") {
  SearchChunk c;
  c.s_lo = 10;
  c.s_hi = kMaxSearchS + 1;
  CHECK_THROWS_AS(search_chunk(c), DomainError);
  c.s_hi = 20;
  CHECK_THROWS_AS(search_chunk(c, 11), DomainError);
  c.x_lo = 0;
  CHECK_THROWS_AS(search_chunk(c), DomainError);
  SearchConfig cfg;
  cfg.chunk_size = 0;
  CHECK_THROWS_AS(plan_chunks(cfg), DomainError);
}

TEST_CASE("hit callback sees every hit") {
  SearchConfig cfg;
  cfg.s_lo = 2;
  cfg.s_hi = 2;
  cfg.i_max = 2;
  cfg.x_max = 100;
  cfg.chunk_size = 10;
  std::vector<Hit> seen;
  const auto res = run_search(cfg, [&](const Hit& h) { seen.push_back(h); });
  std::sort(seen.begin(), seen.end());
  CHECK(seen == res.hits);
  CHECK(seen.size() == 4);
}
