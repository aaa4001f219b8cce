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

// Segmented prime sieve, exact prime counting, and first-occurrence prime
// gaps (the rho_s lower-bound machinery).

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "tight/exact_arith.hpp"
#include "tight/real.hpp"

namespace tight {

/// Plain sieve of Eratosthenes; used for base primes and small tables.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

struct SieveOptions {
  /// Upper bound on the bitset size in bytes.
  std::uint64_t memory_budget_bytes = std::uint64_t{1} << 30;
  unsigned workers = 1;
};

/// Odd-only primality bitset up to `limit` with running prime counts every
/// 2^20 odd entries.
class SieveTable {
 public:
  /// Throws ResourceError when the bitset would exceed the memory budget.
  static SieveTable build(std::uint64_t limit, const SieveOptions& options = {});

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t n) const;
  /// Number of primes <= x. Throws DomainError when x > limit.
  std::uint64_t pi(std::uint64_t x) const;
  std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) const;

 private:
  static constexpr std::uint64_t kCheckpointShift = 20;  // odd entries per checkpoint
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> bits_;         // bit j <=> 2j+1 is prime
  std::vector<std::uint64_t> checkpoints_;  // odd primes below block start
};

/// Process-wide immutable table covering at least [0, at_least]. Rebuilt
/// (never mutated in place) when a larger range is requested.
std::shared_ptr<const SieveTable> shared_sieve(std::uint64_t at_least);

/// Calls `visit(p)` for every prime in [lo, hi] in increasing order, using a
/// segmented sieve (segments of 2^22 odd entries).
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<bool(std::uint64_t)>& visit, unsigned workers = 1);

/// Exact primality of every integer in [lo, hi] by an interval sieve.
std::vector<bool> interval_primality(std::uint64_t lo, std::uint64_t hi);

struct GapRecord {
  std::uint64_t gap = 0;          // p_{n+1} - p_n
  std::uint64_t first_prime = 0;  // p_n
  auto operator<=>(const GapRecord&) const = default;
};

/// Maximal (record) prime gaps whose upper prime is <= limit. rho_s is the
/// first_prime of the first record with gap >= s.
std::vector<GapRecord> maximal_gaps(std::uint64_t limit, unsigned workers = 1);

/// Looks rho_s up in a record table; nullopt when no record reaches s.
std::optional<std::uint64_t> rho_from_records(std::span<const GapRecord> records, std::uint64_t s);

/// min{p_n : p_{n+1} - p_n >= s}, scanning primes up to `limit`. Throws
/// NotFoundBelowLimit when no such gap closes below the limit. The returned
/// value is checked prime and (rho, rho+s-1] is checked prime-free by an
/// independent interval sieve.
std::uint64_t rho(std::uint64_t s, std::uint64_t limit, unsigned workers = 1);

/// rho_{s+1} + 2s.
BigInt v_lower(std::uint64_t s, std::uint64_t limit, unsigned workers = 1);

/// 5000 s (14.6 + ln s)^2, rounded toward -infinity. Requires s >= 288.
Real dusart_gap_lower(std::uint64_t s, mpfr_prec_t precision = 128);

/// Published first-occurrence record gaps (cross-check only; never used as a
/// source of values).
std::span<const GapRecord> known_maximal_gaps();

/// Writes "gap<TAB>first_prime" lines.
void write_gap_table(std::ostream& out, std::span<const GapRecord> records);

}  // namespace tight
