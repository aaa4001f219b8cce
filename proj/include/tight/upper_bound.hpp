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

// Rigorous evaluation of psi, kappa and the resulting upper bound
// v <= exp(kappa/psi) + 2s - 1. Every rounding goes in the direction that
// keeps the final number an over-estimate.

#include <cstdint>
#include <string>
#include <utility>

#include "tight/exact_arith.hpp"
#include "tight/real.hpp"

namespace tight {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

/// A real cutoff b = num/den with den > 0. Only pi(b) = pi(floor(b)) and the
/// set of primes above b matter, so an exact fraction is enough.
struct Cutoff {
  std::int64_t num = 0;
  std::int64_t den = 1;
  static Cutoff integer(std::int64_t b) { return Cutoff{b, 1}; }
  static Cutoff ratio(std::int64_t num, std::int64_t den);
  std::int64_t floor() const;
  /// p > b, exactly.
  bool below(std::uint64_t p) const;
  std::string to_string() const;
};

/// Upper estimate carried with the precision it was computed at.
struct RigorousUpper {
  Real value{kDefaultPrecision};
  mpfr_prec_t precision_bits = kDefaultPrecision;
  /// Relative change when recomputed with 64 more bits was < 2^-32.
  bool stable = false;
};

struct BoundReport {
  std::int64_t s = 0;
  std::int64_t r = 0;
  Cutoff b;
  std::int64_t psi = 0;
  RigorousUpper kappa_upper;
  bool feasible = false;
  /// exp(kappa/psi), rounded up. Meaningful only when feasible.
  Real exp_upper{kDefaultPrecision};
  /// ceil(exp_upper) + 2s - 1. Meaningful only when feasible.
  BigInt v_bound;
  /// "s=.. r=.. b=.. psi=.. ..." record line.
  std::string record() const;
};

/// r - 4 - 4 pi(b). Requires 6 <= r <= s, r even, 0 <= b <= s.
std::int64_t psi(std::int64_t s, std::int64_t r, const Cutoff& b);

/// Exponent of p in s! r! l_{s-1}^2 l_{s-2}^2 (s-r+1)! (s-r/2+1).
std::uint64_t val_p_f_tilde(std::int64_t s, std::int64_t r, std::uint64_t p);

/// kappa at a fixed working precision, every step rounded upward.
Real kappa_at(std::int64_t s, std::int64_t r, const Cutoff& b, mpfr_prec_t precision);

/// kappa with the stability check (retry at 256 bits when 128 is unstable).
RigorousUpper kappa(std::int64_t s, std::int64_t r, const Cutoff& b,
                    mpfr_prec_t precision = kDefaultPrecision);

/// Full report for one (s, r, b). Infeasible (psi <= 0) is a normal result.
BoundReport v_upper(std::int64_t s, std::int64_t r, const Cutoff& b,
                    mpfr_prec_t precision = kDefaultPrecision);

/// 2 floor(s/2), the default r.
inline std::int64_t default_r(std::int64_t s) { return 2 * (s / 2); }

/// Minimizes v_bound over integer b in [1, s] with psi > 0; ties go to the
/// smallest b. Returns an infeasible report (b = s) when nothing is feasible.
BoundReport best_bound(std::int64_t s, std::int64_t r, unsigned workers = 1,
                       mpfr_prec_t precision = kDefaultPrecision);

/// x/ln x (1 + 1.2762/ln x), rounded up. Requires x > 1.
Real dusart_pi_upper(const Real& x, mpfr_prec_t precision = kDefaultPrecision);
Real dusart_pi_upper(std::uint64_t x, mpfr_prec_t precision = kDefaultPrecision);

/// (f(n), f(n) + 1) with f(n) = n ln n - n + ln(n)/2, rounded outward.
/// Defined for real n >= 1.
std::pair<Real, Real> stirling_bounds(const Real& n, mpfr_prec_t precision = kDefaultPrecision);
std::pair<Real, Real> stirling_bounds(std::uint64_t n, mpfr_prec_t precision = kDefaultPrecision);

struct PremeditationReport {
  std::int64_t s = 0;
  /// Direct evaluation with exact pi(s); skipped above kDirectLimit.
  bool direct_evaluated = false;
  bool direct_ok = false;
  BoundReport direct;
  /// Analytic chain: Dusart for pi(s), Stirling for the factorials.
  Real chain_psi_lower{kDefaultPrecision};
  Real chain_kappa_upper{kDefaultPrecision};
  /// (ln s - 5/4) s / psi_lower - ln s, rounded up.
  Real chain_gap_upper{kDefaultPrecision};
  bool chain_kappa_ok = false;  // chain kappa < (ln s - 5/4) s
  bool chain_ok = false;        // gap < ln 2,000,000 and psi_lower > 0
  bool ok() const { return chain_ok && (!direct_evaluated || direct_ok); }
};

inline constexpr std::int64_t kDirectLimit = 100'000'000;

/// b = s, r = 2 floor(s/2). Requires s >= 627.
PremeditationReport premeditation_report(std::int64_t s, mpfr_prec_t precision = kDefaultPrecision);
bool check_premeditation(std::int64_t s);

}  // namespace tight
