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
#include "tight/exact_arith.hpp"

using namespace tight;

TEST_CASE("make_rational is canonical") {
  const ExactRational q = make_rational(BigInt(-6), BigInt(-4));
  CHECK(q.get_num() == 3);
  CHECK(q.get_den() == 2);
  CHECK(make_rational(BigInt(4), BigInt(-8)) == ExactRational(-1, 2));
  CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), DomainError);
}

TEST_CASE("factorials and binomials against loops") {
  for (std::int64_t n = 0; n <= 40; ++n) {
    CHECK(factorial(static_cast<std::uint64_t>(n)) == oracle::fact(n));
    for (std::int64_t k = 0; k <= n; ++k) {
      CHECK(binomial(ExactRational(static_cast<long>(n)), static_cast<std::uint64_t>(k)) ==
            ExactRational(oracle::choose(n, k)));
    }
  }
  // generalized: C(-1, k) = (-1)^k, C(1/2, 2) = -1/8
  for (std::uint64_t k = 0; k < 8; ++k) CHECK(binomial(ExactRational(-1), k) == (k % 2 ? -1 : 1));
  CHECK(binomial(ExactRational(1, 2), 2) == ExactRational(-1, 8));
}

TEST_CASE("rising and falling factorials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 9), len(0, 12);
  for (int t = 0; t < 200; ++t) {
    ExactRational x(num(rng), den(rng));
    x.canonicalize();
    const auto n = static_cast<std::uint64_t>(len(rng));
    CHECK(rising_factorial(x, n) == oracle::rising(x, static_cast<std::int64_t>(n)));
    CHECK(falling_factorial(x, n) == oracle::falling(x, static_cast<std::int64_t>(n)));
    // x^{rising n} = (x+n-1)^{falling n}
    if (n > 0) CHECK(rising_factorial(x, n) == falling_factorial(x + static_cast<long>(n) - 1, n));
  }
  CHECK(rising_factorial(ExactRational(5), 0) == 1);
}

TEST_CASE("ell is the lcm of 1..n") {
  BigInt acc = 1;
  for (std::uint64_t n = 1; n <= 60; ++n) {
    acc = lcm(acc, BigInt(static_cast<unsigned long>(n)));
    CHECK(ell(n) == acc);
  }
  CHECK(ell(0) == 1);
  // same number as the lcm of every C(i, j) with i <= n
  for (std::int64_t n = 1; n <= 20; ++n) {
    BigInt l = 1;
    for (std::int64_t i = 0; i <= n; ++i) {
      for (std::int64_t j = 0; j <= i; ++j) l = lcm(l, oracle::choose(i, j));
    }
    CHECK(l == ell(static_cast<std::uint64_t>(n)));
  }
}

TEST_CASE("valuations") {
  for (std::uint64_t n = 0; n <= 300; n += 7) {
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 97u}) {
      std::uint64_t direct = 0;
      for (std::uint64_t m = 2; m <= n; ++m) {
        for (std::uint64_t t = m; t % p == 0; t /= p) ++direct;
      }
      CHECK(val_p_factorial(n, p) == direct);
      CHECK(static_cast<std::uint64_t>(val_p(BigInt(oracle::fact(static_cast<std::int64_t>(n))), p)) == direct);
    }
  }
  CHECK(val_p(ExactRational(12, 50), 5) == -2);
  CHECK(val_p(ExactRational(12, 50), 2) == 1);
  CHECK(val_p(ExactRational(12, 50), 3) == 1);
  CHECK(val_p(BigInt(-48), 2) == 4);
  CHECK_THROWS_AS(val_p(ExactRational(0), 3), DomainError);
  CHECK_THROWS_AS(val_p(BigInt(0), 3), DomainError);
}

TEST_CASE("floor_log") {
  for (std::uint64_t p : {2u, 3u, 10u}) {
    for (std::uint64_t n = 1; n < 5000; n += 13) {
      std::uint64_t e = 0;
      for (std::uint64_t t = p; t <= n; t *= p) ++e;
      CHECK(floor_log(n, p) == e);
    }
  }
  CHECK(floor_log(0, 3) == 0);
}

TEST_CASE("valuation table reconstructs") {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7};
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int t = 0; t < 100; ++t) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    ExactRational x(a, b);
    x.canonicalize();
    const auto table = valuation_table(x, primes);
    CHECK(table.reconstruct() == x);
    for (auto p : primes) {
      CHECK(val_p(table.cofactor, p) == 0);
      const auto it = table.entries.find(p);
      CHECK((it == table.entries.end() ? 0 : it->second) == val_p(x, p));
    }
  }
  CHECK_THROWS_AS(valuation_table(ExactRational(0), primes), DomainError);
}

TEST_CASE("to_string") {
  CHECK(to_string(make_rational(BigInt(-3), BigInt(6))) == "-1/2");
  CHECK(to_string(ExactRational(4)) == "4");
  CHECK(to_string(BigInt("123456789012345678901234567890")) == "123456789012345678901234567890");
}
