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
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "tight/errors.hpp"
#include "tight/prime_engine.hpp"

using namespace tight;

namespace {

// least n >= 2 with (n, n+s-1] prime-free, by scanning a plain sieve
std::uint64_t rho_by_interval(std::uint64_t s, const std::vector<bool>& prime) {
  for (std::uint64_t n = 2; n + s < prime.size(); ++n) {
    bool clean = true;
    for (std::uint64_t m = n + 1; m <= n + s - 1 && clean; ++m) clean = !prime[m];
    if (clean) return n;
  }
  return 0;
}

}  // namespace

TEST_CASE("pi(10^6)") {
  const auto t = SieveTable::build(1'000'000);
  CHECK(t.pi(1'000'000) == 78498);
  CHECK(t.pi(1) == 0);
  CHECK(t.pi(2) == 1);
  CHECK_THROWS_AS(t.pi(1'000'001), DomainError);
}

TEST_CASE("sieve table against a plain sieve") {
  const std::uint64_t n = 300'000;
  const auto ref = oracle::sieve(n);
  const auto t = SieveTable::build(n, SieveOptions{std::uint64_t{1} << 30, 2});
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x <= n; ++x) {
    count += ref[x];
    if (t.is_prime(x) != ref[x] || t.pi(x) != count) {
      FAIL("mismatch at " << x);
    }
  }
  const auto ps = t.primes_in(1000, 1100);
  std::vector<std::uint64_t> want;
  for (std::uint64_t x = 1000; x <= 1100; ++x) {
    if (ref[x]) want.push_back(x);
  }
  CHECK(ps == want);
  const auto small = primes_up_to(100);
  CHECK(small.size() == 25);
  CHECK(small.back() == 97);
}

TEST_CASE("memory budget") {
  CHECK_THROWS_AS(SieveTable::build(1'000'000'000, SieveOptions{1024, 1}), ResourceError);
}

TEST_CASE("Miller-Rabin") {
  std::mt19937_64 rng(17);
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime_u64(n) == oracle::is_prime(n));
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(1'000'000'000, 1'000'100'000)(rng);
    CHECK(is_prime_u64(n) == oracle::is_prime(n));
  }
  CHECK(is_prime_u64(18446744073709551557ull));     // largest 64-bit prime
  CHECK_FALSE(is_prime_u64(3215031751ull));         // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_prime_u64(4294967297ull));         // 641 * 6700417
}

TEST_CASE("segmented enumeration and interval sieve") {
  const auto ref = oracle::sieve(2'000'000);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    std::uint64_t lo = std::uniform_int_distribution<std::uint64_t>(0, 1'900'000)(rng);
    std::uint64_t hi = lo + std::uniform_int_distribution<std::uint64_t>(0, 90'000)(rng);
    std::vector<std::uint64_t> got, want;
    for_each_prime(lo, hi, [&](std::uint64_t p) { got.push_back(p); return true; });
    for (std::uint64_t x = lo; x <= hi; ++x) {
      if (ref[x]) want.push_back(x);
    }
    CHECK(got == want);
    const auto flags = interval_primality(lo, hi);
    REQUIRE(flags.size() == hi - lo + 1);
    bool same = true;
    for (std::uint64_t x = lo; x <= hi; ++x) same = same && flags[x - lo] == ref[x];
    CHECK(same);
  }
  // several workers, early stop
  std::vector<std::uint64_t> first;
  for_each_prime(0, 10'000'000, [&](std::uint64_t p) { first.push_back(p); return first.size() < 5; }, 3);
  CHECK(first == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
}

TEST_CASE("rho: small values") {
  CHECK(rho(5, 1'000'000) == 23);
  CHECK(rho(11, 1'000'000) == 113);
  CHECK(rho(2, 1000) == 3);
  CHECK(v_lower(10, 1'000'000) == BigInt(113 + 20));
  CHECK_THROWS_AS(rho(100, 10'000), NotFoundBelowLimit);
}

TEST_CASE("rho: definition equivalence and monotonicity for s <= 40") {
  const auto ref = oracle::sieve(100'000);
  const auto records = maximal_gaps(100'000);
  std::uint64_t prev = 0;
  for (std::uint64_t s = 2; s <= 40; ++s) {
    const std::uint64_t r = rho(s, 100'000);
    CHECK(r == rho_by_interval(s, ref));
    CHECK(rho_from_records(records, s) == r);
    CHECK(oracle::is_prime(r));
    CHECK(r >= prev);
    prev = r;
  }
}

TEST_CASE("maximal gaps agree with the published table") {
  const std::uint64_t limit = 50'000'000;
  const auto got = maximal_gaps(limit, 2);
  std::vector<GapRecord> want;
  for (const auto& g : known_maximal_gaps()) {
    if (g.first_prime + g.gap <= limit) want.push_back(g);
  }
  CHECK(got == want);
  REQUIRE(got.size() > 10);
  for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i].gap > got[i - 1].gap);
}

TEST_CASE("gap table output") {
  std::ostringstream out;
  const std::vector<GapRecord> rs{{1, 2}, {2, 3}, {4, 7}};
  write_gap_table(out, rs);
  CHECK(out.str() == "1\t2\n2\t3\n4\t7\n");
}

TEST_CASE("shared sieve grows, never shrinks") {
  const auto a = shared_sieve(1000);
  CHECK(a->limit() >= 1000);
  const auto b = shared_sieve(500'000);
  CHECK(b->limit() >= 500'000);
  CHECK(shared_sieve(10)->limit() >= b->limit());
  CHECK(b->pi(500'000) == 41538);
}

TEST_CASE("Dusart gap lower bound at 288") {
  const Real g = dusart_gap_lower(288);
  CHECK(mpfr_cmp_ui(g.get(), 2'000'000ul * 288ul) > 0);
  CHECK_THROWS_AS(dusart_gap_lower(100), DomainError);
}
