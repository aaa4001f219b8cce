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

#include "tight/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

#include "tight/checkpoint.hpp"
#include "tight/design_functions.hpp"
#include "tight/errors.hpp"
#include "tight/prime_engine.hpp"

namespace tight {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::size_t kBlock = std::size_t{1} << 16;  // numbers factored per pass
constexpr int kMaxFactors = 15;                        // distinct primes of n < 2^50

struct Factored {
  std::array<u64, kMaxFactors> p;
  std::array<std::uint8_t, kMaxFactors> e;
  int count = 0;
};

// Factors every n in [a, a + len) with the given base primes (which must
// reach sqrt(a + len - 1)); a leftover cofactor > 1 is prime.
void factor_block(u64 a, std::size_t len, const std::vector<u64>& base, std::vector<Factored>& out,
                  std::vector<u64>& rem) {
  out.assign(len, Factored{});
  rem.resize(len);
  for (std::size_t i = 0; i < len; ++i) rem[i] = a + i;
  const u64 last = a + len - 1;
  for (u64 p : base) {
    if (p * p > last) break;
    for (u64 m = (a + p - 1) / p * p; m <= last; m += p) {
      const std::size_t i = m - a;
      std::uint8_t e = 0;
      do {
        rem[i] /= p;
        ++e;
      } while (rem[i] % p == 0);
      auto& f = out[i];
      f.p[f.count] = p;
      f.e[f.count] = e;
      ++f.count;
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (rem[i] > 1) {
      auto& f = out[i];
      f.p[f.count] = rem[i];
      f.e[f.count] = 1;
      ++f.count;
    }
  }
}

struct Divisor {
  u64 d;
  u64 d1;    // part of d dividing x
  u64 rest;  // mask of small primes still present in N/d
};

class SmallPrimes {
 public:
  SmallPrimes(std::int64_t s_lo, std::int64_t s_hi) {
    first_.assign(static_cast<std::size_t>(s_hi) + 1, 0);
    for (std::int64_t q = 1; q <= s_hi; ++q) {
      first_[q] = std::max<std::int64_t>(s_lo + (q - s_lo % q) % q, q);
    }
    const auto primes = primes_up_to(static_cast<u64>(std::max<std::int64_t>(s_hi, 2)));
    index_.assign(static_cast<std::size_t>(kMaxSearchS) + 1, -1);
    for (std::size_t j = 0; j < primes.size(); ++j) index_[primes[j]] = static_cast<int>(j);
    qmask_.assign(static_cast<std::size_t>(s_hi) + 1, 0);
    for (std::int64_t q = 1; q <= s_hi; ++q) {
      for (std::size_t j = 0; j < primes.size(); ++j) {
        if (q % static_cast<std::int64_t>(primes[j]) == 0) qmask_[q] |= u64{1} << j;
      }
    }
  }
  u64 bit(u64 p) const {
    if (p > static_cast<u64>(kMaxSearchS) || index_[p] < 0) return 0;
    return u64{1} << index_[p];
  }
  u64 qmask(std::int64_t q) const { return qmask_[q]; }
  /// Smallest multiple of q that is >= max(s_lo, q).
  std::int64_t first_multiple(std::int64_t q) const { return first_[q]; }

 private:
  std::vector<std::int64_t> first_;
  std::vector<int> index_;
  std::vector<u64> qmask_;
};

// Divisors d of N = x(x+1) with d <= bound; x-side primes come first.
void divisors_of(const Factored& fx, const Factored& fx1, u64 bound, const SmallPrimes& sp,
                 std::vector<Divisor>& out) {
  std::array<u64, 2 * kMaxFactors> p{};
  std::array<int, 2 * kMaxFactors> e{};
  int n = 0;
  for (int i = 0; i < fx.count; ++i, ++n) {
    p[n] = fx.p[i];
    e[n] = fx.e[i];
  }
  const int split = n;
  for (int i = 0; i < fx1.count; ++i, ++n) {
    p[n] = fx1.p[i];
    e[n] = fx1.e[i];
  }
  u64 full_mask = 0;
  for (int i = 0; i < n; ++i) full_mask |= sp.bit(p[i]);

  out.clear();
  out.push_back(Divisor{1, 1, full_mask});
  for (int i = 0; i < n; ++i) {
    const std::size_t existing = out.size();
    const u64 b = sp.bit(p[i]);
    for (std::size_t k = 0; k < existing; ++k) {
      const Divisor base = out[k];
      u64 d = base.d;
      for (int j = 1; j <= e[i]; ++j) {
        if (d > bound / p[i]) break;
        d *= p[i];
        Divisor next{d, i < split ? base.d1 * (d / base.d) : base.d1, base.rest};
        if (j == e[i]) next.rest &= ~b;
        out.push_back(next);
      }
    }
  }
}

template <typename Word>
u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<Word>(a) * b % m);
}

// Hot path for one x. Appends passing triples (all s in range) to hits.
template <typename Word>
void scan_x(std::int64_t x, const Factored& fx, const Factored& fx1, std::int64_t s_lo,
            std::int64_t s_hi, std::int64_t i_max, const SmallPrimes& sp, std::vector<Divisor>& divs,
            std::vector<Hit>& hits) {
  const u64 ux = static_cast<u64>(x);
  const u64 y_lo = ux + static_cast<u64>(s_lo) + 2;
  const u64 y_hi = 2 * ux + 1;
  if (y_lo > y_hi) return;
  divisors_of(fx, fx1, y_hi, sp, divs);
  const u64 d_lo = (y_lo + static_cast<u64>(s_hi) - 1) / static_cast<u64>(s_hi);
  // (x+1)(x+2)/2 is the same for every candidate
  const u64 half_a = (ux % 2 == 1) ? (ux + 1) / 2 : ux + 1;
  const u64 half_b = (ux % 2 == 1) ? ux + 2 : (ux + 2) / 2;
  const u64 c_max = static_cast<u64>(s_hi) * static_cast<u64>(s_hi - 1);

  for (const Divisor& dv : divs) {
    const u64 d = dv.d;
    if (d < d_lo) continue;
    const u64 q_lo = std::max<u64>(1, (y_lo + d - 1) / d);
    const u64 q_hi = std::min<u64>(static_cast<u64>(s_hi), y_hi / d);
    if (q_lo > q_hi) continue;
    for (u64 q = q_lo; q <= q_hi; ++q) {
      if (sp.qmask(static_cast<std::int64_t>(q)) & dv.rest) continue;  // gcd(y, N) != d
      const u64 y = d * q;
      const u64 t = y - ux;
      const auto iq = static_cast<std::int64_t>(q);
      const std::int64_t s_first = sp.first_multiple(iq);
      const std::int64_t s_last = std::min<std::int64_t>(s_hi, static_cast<std::int64_t>(t) - 2);
      if (s_first > s_last) continue;
      // alpha_2 = (s/q)(s-1) K / (y+1) with K = (N/d)(x+1)(x+2)/2. Modulo
      // u = y+1: 1/d = -q, x = -(t+1), x+1 = -t, so K = -q t (t+1) (x+1)(x+2)/2,
      // and t, t+1, (x+1)/2-ish factors are all already below u.
      const u64 u = y + 1;
      u64 k = mulmod<Word>(t, t + 1, u);
      k = mulmod<Word>(k, half_a, u);
      k = mulmod<Word>(k, half_b, u);
      k = mulmod<Word>(k, q, u);
      const std::int64_t n_s = (s_last - s_first) / iq + 1;
      u64 m = 0;  // 0: test each s directly
      if (i_max < 2) {
        m = 1;
      } else if (n_s > 6) {
        m = u / std::gcd(u, k);
        if (m > c_max / q) continue;
      }
      for (std::int64_t s = s_first; s <= s_last; s += iq) {
        u64 c = static_cast<u64>(s / iq) * static_cast<u64>(s - 1);  // < 2^17
        if (m == 0) {
          if (c >= u) c %= u;
          if (c * k % u != 0) continue;
        } else if (c % m != 0) {
          continue;
        }
        if (i_max <= 2 || alpha_all_integral(s, x, static_cast<std::int64_t>(y), i_max)) {
          hits.push_back(make_hit(s, x, static_cast<std::int64_t>(y), i_max));
        }
      }
    }
  }
}

std::vector<std::pair<u64, int>> trial_factor(u64 n) {
  std::vector<std::pair<u64, int>> f;
  for (u64 p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

}  // namespace

Hit make_hit(std::int64_t s, std::int64_t x, std::int64_t y, std::int64_t i_max) {
  Hit h;
  h.s = s;
  h.x = x;
  h.y = y;
  for (std::int64_t i = 1; i <= i_max; ++i) {
    const ExactRational a = alpha_xy(s, x, y, i);
    if (a.get_den() != 1) throw std::logic_error("make_hit: non-integral alpha");
    h.alphas.push_back(a.get_num());
  }
  try {
    const auto c = DesignCandidate::nontrivial(s, y + 2 * s - 1, x + s);
    h.phi_roots = intersection_numbers(c);
    h.phi_checked = true;
  } catch (const DomainError&) {
    h.phi_checked = false;
  }
  return h;
}

SearchChunk search_chunk(SearchChunk chunk, std::int64_t i_max) {
  if (chunk.s_lo < 1 || chunk.s_hi < chunk.s_lo || chunk.s_hi > kMaxSearchS) {
    throw DomainError("search_chunk: s range must satisfy 1 <= s_lo <= s_hi <= " +
                      std::to_string(kMaxSearchS));
  }
  if (chunk.x_lo < 1) throw DomainError("search_chunk: x_lo must be >= 1");
  if (i_max < 1 || i_max > chunk.s_lo) throw DomainError("search_chunk: need 1 <= i_max <= s_lo");
  chunk.hits.clear();
  if (chunk.x_hi >= chunk.x_lo) {
    const SmallPrimes sp(chunk.s_lo, chunk.s_hi);
    const auto top = static_cast<u64>(chunk.x_hi) + 1;
    const auto base = primes_up_to(static_cast<u64>(std::sqrt(static_cast<long double>(top))) + 2);
    std::vector<Factored> fac;
    std::vector<u64> rem;
    std::vector<Divisor> divs;
    const bool narrow = static_cast<u64>(chunk.x_hi) < (u64{1} << 31);
    for (std::int64_t a = chunk.x_lo; a <= chunk.x_hi; a += static_cast<std::int64_t>(kBlock)) {
      const std::int64_t b = std::min<std::int64_t>(chunk.x_hi, a + static_cast<std::int64_t>(kBlock) - 1);
      // factors of a .. b+1
      factor_block(static_cast<u64>(a), static_cast<std::size_t>(b - a + 2), base, fac, rem);
      for (std::int64_t x = a; x <= b; ++x) {
        const auto i = static_cast<std::size_t>(x - a);
        if (narrow) {
          scan_x<u64>(x, fac[i], fac[i + 1], chunk.s_lo, chunk.s_hi, i_max, sp, divs, chunk.hits);
        } else {
          scan_x<u128>(x, fac[i], fac[i + 1], chunk.s_lo, chunk.s_hi, i_max, sp, divs, chunk.hits);
        }
      }
    }
  }
  std::sort(chunk.hits.begin(), chunk.hits.end());
  chunk.status = ChunkStatus::kDone;
  return chunk;
}

std::vector<std::int64_t> enumerate_candidate_y(std::int64_t s, std::int64_t x) {
  if (x < 1) throw DomainError("enumerate_candidate_y: x must be >= 1");
  if (s < 0) throw DomainError("enumerate_candidate_y: s must be >= 0");
  std::vector<std::int64_t> out;
  const std::int64_t lo = x + s + 2;
  const std::int64_t hi = 2 * x + 1;
  if (lo > hi || s == 0) return out;
  std::map<u64, int> f;
  for (u64 n : {static_cast<u64>(s), static_cast<u64>(x), static_cast<u64>(x + 1)}) {
    for (auto [p, e] : trial_factor(n)) f[p] += e;
  }
  std::vector<u64> divs{1};
  for (auto [p, e] : f) {
    const std::size_t existing = divs.size();
    for (std::size_t k = 0; k < existing; ++k) {
      u64 d = divs[k];
      for (int j = 0; j < e && d <= static_cast<u64>(hi) / p; ++j) {
        d *= p;
        divs.push_back(d);
      }
    }
  }
  for (u64 d : divs) {
    if (d >= static_cast<u64>(lo) && d <= static_cast<u64>(hi)) out.push_back(static_cast<std::int64_t>(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Hit> verify_window(std::int64_t s, std::int64_t x_lo, std::int64_t x_hi,
                               std::int64_t i_max) {
  std::vector<Hit> out;
  for (std::int64_t x = std::max<std::int64_t>(x_lo, 1); x <= x_hi; ++x) {
    for (std::int64_t y = x + s + 2; y <= 2 * x + 1; ++y) {
      bool all = true;
      for (std::int64_t i = 1; i <= i_max && all; ++i) {
        all = alpha_xy(s, x, y, i).get_den() == 1;
      }
      if (all) out.push_back(make_hit(s, x, y, i_max));
    }
  }
  return out;
}

std::vector<SearchChunk> plan_chunks(const SearchConfig& config) {
  if (config.chunk_size < 1) throw DomainError("chunk size must be positive");
  if (config.x_max < 1) throw DomainError("x_max must be positive");
  std::vector<SearchChunk> chunks;
  for (std::int64_t lo = 1; lo <= config.x_max; lo += config.chunk_size) {
    SearchChunk c;
    c.s_lo = config.s_lo;
    c.s_hi = config.s_hi;
    c.x_lo = lo;
    c.x_hi = std::min(config.x_max, lo + config.chunk_size - 1);
    chunks.push_back(std::move(c));
  }
  return chunks;
}

SearchResult run_search(const SearchConfig& config, const std::function<void(const Hit&)>& on_hit) {
  SearchResult result;
  result.chunks = plan_chunks(config);
  const std::size_t n = result.chunks.size();

  std::vector<bool> done(n, false);
  std::unique_ptr<CheckpointWriter> writer;
  if (!config.checkpoint_path.empty()) {
    std::vector<SearchChunk> records;
    if (config.resume) {
      records = read_checkpoint_file(config.checkpoint_path);
      for (std::size_t i = 0; i < n; ++i) {
        if (auto rec = find_done(records, result.chunks[i])) {
          result.chunks[i] = *rec;
          done[i] = true;
          ++result.resumed_chunks;
        }
      }
    }
    // Rewrite from the parsed records so a torn tail never gets appended to.
    writer = std::make_unique<CheckpointWriter>(config.checkpoint_path, false);
    for (const auto& r : records) writer->append(r);
  }

  // Ordered commit: chunk i is written once chunks 0..i-1 are written.
  std::mutex mu;
  std::size_t next_commit = 0;
  std::vector<bool> finished = done;
  auto commit_ready = [&] {
    while (next_commit < n && finished[next_commit]) {
      if (writer && !done[next_commit]) writer->append(result.chunks[next_commit]);
      ++next_commit;
    }
  };
  {
    std::lock_guard lock(mu);
    commit_ready();
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      if (done[i]) continue;
      try {
        SearchChunk c = search_chunk(result.chunks[i], config.i_max);
        std::lock_guard lock(mu);
        if (on_hit) {
          for (const auto& h : c.hits) on_hit(h);
        }
        result.chunks[i] = std::move(c);
        finished[i] = true;
        commit_ready();
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::max(1u, config.workers); ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  for (const auto& c : result.chunks) {
    result.hits.insert(result.hits.end(), c.hits.begin(), c.hits.end());
  }
  std::sort(result.hits.begin(), result.hits.end());
  return result;
}

}  // namespace tight
