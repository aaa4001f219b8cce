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
#include "tight/auxiliary_h.hpp"
#include "tight/errors.hpp"

using namespace tight;

namespace {

ExactRational h_sum_oracle(std::int64_t s, std::int64_t r, std::int64_t v, std::int64_t k) {
  ExactRational acc = 0;
  for (std::int64_t i = 0; i <= r; ++i) {
    ExactRational t = ExactRational(oracle::choose(r, i)) * oracle::h(s, s - r + i, v, k) * oracle::h(s, s - i, v, k);
    acc += i % 2 ? -t : t;
  }
  return acc;
}

}  // namespace

TEST_CASE("Witt point") {
  CHECK(h_sum(2, 2, 23, 7) == ExactRational(1, 2));
  CHECK(2 * g_closed(2, 2, 23, 7) == ExactRational(1, 2));
  CHECK(closed_form_ratio(2) == 2);
}

TEST_CASE("H = r!/(r/2)! G on random window points") {
  std::mt19937_64 rng(1234);
  for (std::int64_t s = 2; s <= 10; ++s) {
    for (std::int64_t r = 0; r <= s; r += 2) {
      const ExactRational ratio(oracle::fact(r) / oracle::fact(r / 2));
      for (int t = 0; t < 100; ++t) {
        const std::int64_t k = std::uniform_int_distribution<std::int64_t>(2 * s + 1, 400)(rng);
        const std::int64_t v = std::uniform_int_distribution<std::int64_t>(k + 2 * s + 1, 2 * k)(rng);
        const ExactRational hs = h_sum(s, r, v, k);
        CHECK(hs == h_sum_oracle(s, r, v, k));
        CHECK(hs == ratio * g_closed(s, r, v, k));
      }
    }
  }
}

TEST_CASE("F clears denominators") {
  for (std::int64_t s = 2; s <= 8; ++s) {
    for (std::int64_t r = 0; r <= s; r += 2) {
      BigInt l1 = 1, l2 = 1;
      for (std::int64_t j = 1; j <= s - 1; ++j) l1 = lcm(l1, BigInt(static_cast<long>(j)));
      for (std::int64_t j = 1; j <= s - 2; ++j) l2 = lcm(l2, BigInt(static_cast<long>(j)));
      const BigInt sf = oracle::fact(s);
      CHECK(f_const(s, r) == sf * sf * l1 * l1 * l2 * l2 * (oracle::fact(r) / oracle::fact(r / 2)));
    }
  }
}

TEST_CASE("auxiliary_value bundles the pieces") {
  const auto a = auxiliary_value(3, 2, 40, 15);
  CHECK(a.h_sum == h_sum(3, 2, 40, 15));
  CHECK(a.g_closed == g_closed(3, 2, 40, 15));
  CHECK(a.f_const == f_const(3, 2));
}

TEST_CASE("odd r is rejected") {
  CHECK_THROWS_AS(h_sum(4, 3, 40, 15), DomainError);
  CHECK_THROWS_AS(g_closed(4, 3, 40, 15), DomainError);
  CHECK_THROWS_AS(closed_form_ratio(3), DomainError);
}
