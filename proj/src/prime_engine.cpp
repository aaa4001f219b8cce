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

#include "tight/prime_engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include "tight/errors.hpp"

namespace tight {

namespace {

constexpr std::uint64_t kSegmentEntries = std::uint64_t{1} << 22;  // odd numbers per segment

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Sieves the odd numbers 2j+1, j in [j_lo, j_lo + len), into `words` (bit set
// means prime). `odd_primes` must cover sqrt of the segment end.
void sieve_odd_segment(std::uint64_t j_lo, std::uint64_t len,
                       std::span<const std::uint64_t> odd_primes, std::uint64_t* words) {
  const std::uint64_t nwords = (len + 63) / 64;
  std::fill(words, words + nwords, ~std::uint64_t{0});
  if (len % 64 != 0) words[nwords - 1] = (std::uint64_t{1} << (len % 64)) - 1;
  const std::uint64_t lo = 2 * j_lo + 1;
  const std::uint64_t hi = 2 * (j_lo + len - 1) + 1;
  for (std::uint64_t p : odd_primes) {
    if (p * p > hi) break;
    std::uint64_t m = std::max(p * p, (lo + p - 1) / p * p);
    if (m % 2 == 0) m += p;
    for (std::uint64_t j = (m - 1) / 2 - j_lo; j < len; j += p) {
      words[j >> 6] &= ~(std::uint64_t{1} << (j & 63));
    }
  }
  if (j_lo == 0) words[0] &= ~std::uint64_t{1};  // 1 is not prime
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> odd_base_primes(std::uint64_t hi) {
  auto base = primes_up_to(isqrt(hi) + 1);
  if (!base.empty() && base.front() == 2) base.erase(base.begin());
  return base;
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t m = p * p; m <= n; m += p) composite[m] = true;
  }
  return out;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

SieveTable SieveTable::build(std::uint64_t limit, const SieveOptions& options) {
  if (limit < 2) throw DomainError("build_sieve: limit must be >= 2");
  const std::uint64_t entries = limit / 2 + 1;  // odd numbers 1, 3, ..., <= limit (+1 slack)
  const std::uint64_t nwords = (entries + 63) / 64;
  if (nwords * 8 > options.memory_budget_bytes) {
    throw ResourceError("build_sieve: limit " + std::to_string(limit) + " needs " +
                        std::to_string(nwords * 8) + " bytes, budget is " +
                        std::to_string(options.memory_budget_bytes));
  }
  SieveTable t;
  t.limit_ = limit;
  t.bits_.assign(nwords, 0);
  const auto base = odd_base_primes(limit);

  const std::uint64_t nsegments = (entries + kSegmentEntries - 1) / kSegmentEntries;
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t seg = next++; seg < nsegments; seg = next++) {
      const std::uint64_t j_lo = seg * kSegmentEntries;
      const std::uint64_t len = std::min(kSegmentEntries, entries - j_lo);
      sieve_odd_segment(j_lo, len, base, t.bits_.data() + j_lo / 64);
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  // Drop odd numbers above the limit.
  for (std::uint64_t j = (limit - 1) / 2 + 1; j < nwords * 64; ++j) {
    t.bits_[j >> 6] &= ~(std::uint64_t{1} << (j & 63));
  }

  const std::uint64_t words_per_block = (std::uint64_t{1} << kCheckpointShift) / 64;
  t.checkpoints_.reserve(nwords / words_per_block + 1);
  std::uint64_t running = 0;
  for (std::uint64_t w = 0; w < nwords; ++w) {
    if (w % words_per_block == 0) t.checkpoints_.push_back(running);
    running += static_cast<std::uint64_t>(std::popcount(t.bits_[w]));
  }
  return t;
}

bool SieveTable::is_prime(std::uint64_t n) const {
  if (n > limit_) throw DomainError("is_prime: " + std::to_string(n) + " exceeds sieve limit");
  if (n == 2) return true;
  if (n < 2 || n % 2 == 0) return false;
  const std::uint64_t j = (n - 1) / 2;
  return (bits_[j >> 6] >> (j & 63)) & 1;
}

std::uint64_t SieveTable::pi(std::uint64_t x) const {
  if (x > limit_) throw DomainError("pi: " + std::to_string(x) + " exceeds sieve limit " + std::to_string(limit_));
  if (x < 2) return 0;
  const std::uint64_t j = (x - 1) / 2;  // last odd index <= x
  const std::uint64_t block = j >> kCheckpointShift;
  std::uint64_t count = checkpoints_[block];
  const std::uint64_t first_word = (block << kCheckpointShift) / 64;
  const std::uint64_t last_word = j >> 6;
  for (std::uint64_t w = first_word; w < last_word; ++w) count += std::popcount(bits_[w]);
  const unsigned bit = static_cast<unsigned>(j & 63);
  const std::uint64_t mask = bit == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (bit + 1)) - 1);
  count += std::popcount(bits_[last_word] & mask);
  return count + 1;  // the prime 2
}

std::vector<std::uint64_t> SieveTable::primes_in(std::uint64_t lo, std::uint64_t hi) const {
  std::vector<std::uint64_t> out;
  hi = std::min(hi, limit_);
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
    if (n > 2 && n % 2 == 0) continue;
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

std::shared_ptr<const SieveTable> shared_sieve(std::uint64_t at_least) {
  static std::mutex mu;
  static std::shared_ptr<const SieveTable> table;
  std::lock_guard lock(mu);
  if (!table || table->limit() < at_least) {
    std::uint64_t limit = std::uint64_t{1} << 16;
    while (limit < at_least) limit *= 2;
    table = std::make_shared<const SieveTable>(SieveTable::build(limit));
  }
  return table;
}

void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<bool(std::uint64_t)>& visit, unsigned workers) {
  if (hi < lo || hi < 2) return;
  if (lo <= 2 && !visit(2)) return;
  if (hi < 3) return;
  const auto base = odd_base_primes(hi);
  const std::uint64_t j_first = std::max<std::uint64_t>(lo, 3) / 2;  // index of first odd >= max(lo,3)
  const std::uint64_t j_end = (hi - 1) / 2 + 1;
  workers = std::max(1u, workers);
  std::vector<std::vector<std::uint64_t>> buffers(workers,
                                                  std::vector<std::uint64_t>(kSegmentEntries / 64));
  for (std::uint64_t batch_lo = j_first; batch_lo < j_end;) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> segs;
    for (unsigned w = 0; w < workers && batch_lo < j_end; ++w) {
      const std::uint64_t len = std::min(kSegmentEntries, j_end - batch_lo);
      segs.emplace_back(batch_lo, len);
      batch_lo += len;
    }
    if (segs.size() == 1) {
      sieve_odd_segment(segs[0].first, segs[0].second, base, buffers[0].data());
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < segs.size(); ++w) {
        pool.emplace_back([&, w] {
          sieve_odd_segment(segs[w].first, segs[w].second, base, buffers[w].data());
        });
      }
      for (auto& th : pool) th.join();
    }
    for (std::size_t w = 0; w < segs.size(); ++w) {
      const auto [j_lo, len] = segs[w];
      const std::uint64_t* words = buffers[w].data();
      for (std::uint64_t wi = 0; wi < (len + 63) / 64; ++wi) {
        std::uint64_t bits = words[wi];
        while (bits != 0) {
          const auto b = static_cast<std::uint64_t>(std::countr_zero(bits));
          bits &= bits - 1;
          const std::uint64_t n = 2 * (j_lo + wi * 64 + b) + 1;
          if (!visit(n)) return;
        }
      }
    }
  }
}

std::vector<bool> interval_primality(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) return {};
  std::vector<bool> prime(hi - lo + 1, true);
  for (std::uint64_t n = lo; n <= std::min<std::uint64_t>(hi, 1); ++n) prime[n - lo] = false;
  for (std::uint64_t p : primes_up_to(isqrt(hi))) {
    std::uint64_t m = std::max(p * p, (lo + p - 1) / p * p);
    for (; m <= hi; m += p) prime[m - lo] = false;
  }
  return prime;
}

std::vector<GapRecord> maximal_gaps(std::uint64_t limit, unsigned workers) {
  std::vector<GapRecord> out;
  std::uint64_t prev = 0;
  std::uint64_t best = 0;
  for_each_prime(2, limit, [&](std::uint64_t p) {
    if (prev != 0 && p - prev > best) {
      best = p - prev;
      out.push_back(GapRecord{best, prev});
    }
    prev = p;
    return true;
  }, workers);
  return out;
}

std::optional<std::uint64_t> rho_from_records(std::span<const GapRecord> records, std::uint64_t s) {
  for (const auto& r : records) {
    if (r.gap >= s) return r.first_prime;
  }
  return std::nullopt;
}

std::uint64_t rho(std::uint64_t s, std::uint64_t limit, unsigned workers) {
  if (s < 2) throw DomainError("rho: requires s >= 2");
  std::uint64_t prev = 0;
  std::optional<std::uint64_t> found;
  for_each_prime(2, limit, [&](std::uint64_t p) {
    if (prev != 0 && p - prev >= s) {
      found = prev;
      return false;
    }
    prev = p;
    return true;
  }, workers);
  if (!found) {
    throw NotFoundBelowLimit("rho(" + std::to_string(s) + "): no prime gap >= " + std::to_string(s) +
                             " closes below " + std::to_string(limit));
  }
  const std::uint64_t r = *found;
  if (!is_prime_u64(r)) throw std::logic_error("rho: sieve returned a composite");
  const auto interval = interval_primality(r + 1, r + s - 1);
  if (std::find(interval.begin(), interval.end(), true) != interval.end()) {
    throw std::logic_error("rho: (rho, rho+s-1] is not prime-free");
  }
  return r;
}

BigInt v_lower(std::uint64_t s, std::uint64_t limit, unsigned workers) {
  return BigInt(static_cast<unsigned long>(rho(s + 1, limit, workers))) +
         BigInt(static_cast<unsigned long>(2 * s));
}

Real dusart_gap_lower(std::uint64_t s, mpfr_prec_t precision) {
  if (s < 288) throw DomainError("dusart_gap_lower: requires s >= 288");
  Real out(precision), t(precision);
  mpfr_set_ui(t.get(), static_cast<unsigned long>(s), MPFR_RNDD);
  mpfr_log(t.get(), t.get(), MPFR_RNDD);
  Real c(precision);
  mpfr_set_str(c.get(), "14.6", 10, MPFR_RNDD);
  mpfr_add(t.get(), t.get(), c.get(), MPFR_RNDD);
  mpfr_sqr(t.get(), t.get(), MPFR_RNDD);
  mpfr_mul_ui(t.get(), t.get(), 5000, MPFR_RNDD);
  mpfr_mul_ui(out.get(), t.get(), static_cast<unsigned long>(s), MPFR_RNDD);
  return out;
}

std::span<const GapRecord> known_maximal_gaps() {
  static const GapRecord kTable[] = {
      {1, 2},          {2, 3},          {4, 7},          {6, 23},         {8, 89},
      {14, 113},       {18, 523},       {20, 887},       {22, 1129},      {34, 1327},
      {36, 9551},      {44, 15683},     {52, 19609},     {72, 31397},     {86, 155921},
      {96, 360653},    {112, 370261},   {114, 492113},   {118, 1349533},  {132, 1357201},
      {148, 2010733},  {154, 4652353},  {180, 17051707}, {210, 20831323}, {220, 47326693},
      {222, 122164747}, {234, 189695659}, {248, 191912783}, {250, 387096133}, {282, 436273009},
      {288, 1294268491},
  };
  return kTable;
}

void write_gap_table(std::ostream& out, std::span<const GapRecord> records) {
  for (const auto& r : records) out << r.gap << '\t' << r.first_prime << '\n';
}

}  // namespace tight
