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

#include "tight/upper_bound.hpp"

#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>
#include <vector>

#include "tight/errors.hpp"
#include "tight/prime_engine.hpp"

namespace tight {

namespace {

void check_srb(std::int64_t s, std::int64_t r, const Cutoff& b) {
  if (r % 2 != 0 || r < 6 || r > s) {
    throw DomainError("need r even with 6 <= r <= s (s=" + std::to_string(s) +
                      ", r=" + std::to_string(r) + ")");
  }
  if (b.den <= 0 || b.num < 0 || b.num > s * b.den) {
    throw DomainError("need 0 <= b <= s, got b=" + b.to_string());
  }
}

// ln(n!) = lngamma(n+1); MPFR rounds it correctly in the given direction.
void ln_factorial(mpfr_ptr out, std::uint64_t n, mpfr_rnd_t rnd) {
  Real arg(64);
  mpfr_set_ui(arg.get(), static_cast<unsigned long>(n + 1), MPFR_RNDN);  // exact
  mpfr_lngamma(out, arg.get(), rnd);
}

void ln_ui(mpfr_ptr out, std::uint64_t n, mpfr_rnd_t rnd) {
  mpfr_set_ui(out, static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_log(out, out, rnd);
}

// ln(3/2); 3/2 is exact in binary.
void ln_three_halves(mpfr_ptr out, mpfr_rnd_t rnd) {
  mpfr_set_ui(out, 3, MPFR_RNDN);
  mpfr_div_2ui(out, out, 1, MPFR_RNDN);
  mpfr_log(out, out, rnd);
}

bool relatively_close(const Real& a, const Real& b) {
  Real diff(a.precision() + 64);
  mpfr_sub(diff.get(), a.get(), b.get(), MPFR_RNDU);
  mpfr_abs(diff.get(), diff.get(), MPFR_RNDU);
  if (mpfr_zero_p(diff.get())) return true;
  Real scale(b.precision());
  mpfr_abs(scale.get(), b.get(), MPFR_RNDD);
  mpfr_mul_2si(scale.get(), scale.get(), -32, MPFR_RNDD);
  return mpfr_less_p(diff.get(), scale.get());
}

}  // namespace

Cutoff Cutoff::ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("cutoff with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g > 1 ? Cutoff{num / g, den / g} : Cutoff{num, den};
}

std::int64_t Cutoff::floor() const {
  return num >= 0 ? num / den : -((-num + den - 1) / den);
}

bool Cutoff::below(std::uint64_t p) const {
  return static_cast<__int128>(p) * den > num;
}

std::string Cutoff::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string BoundReport::record() const {
  std::ostringstream out;
  out << "s=" << s << " r=" << r << " b=" << b.to_string() << " psi=" << psi
      << " feasible=" << (feasible ? 1 : 0);
  if (feasible) {
    BigInt e;
    mpfr_get_z(e.get_mpz_t(), exp_upper.get(), MPFR_RNDU);
    out << " kappa_upper=" << kappa_upper.value.to_string(12, MPFR_RNDU)
        << " precision=" << kappa_upper.precision_bits
        << " exp_upper=" << e.get_str() << " v_bound=" << v_bound.get_str();
  }
  return out.str();
}

std::int64_t psi(std::int64_t s, std::int64_t r, const Cutoff& b) {
  check_srb(s, r, b);
  const std::int64_t fb = b.floor();
  const auto pi_b = fb < 2 ? 0 : static_cast<std::int64_t>(shared_sieve(fb)->pi(fb));
  return r - 4 - 4 * pi_b;
}

std::uint64_t val_p_f_tilde(std::int64_t s, std::int64_t r, std::uint64_t p) {
  const auto us = static_cast<std::uint64_t>(s);
  const auto ur = static_cast<std::uint64_t>(r);
  std::uint64_t v = val_p_factorial(us, p) + val_p_factorial(ur, p);
  v += 2 * floor_log(us - 1, p) + 2 * floor_log(us - 2, p);
  v += val_p_factorial(us - ur + 1, p);
  v += static_cast<std::uint64_t>(val_p(BigInt(static_cast<unsigned long>(us - ur / 2 + 1)), p));
  return v;
}

Real kappa_at(std::int64_t s, std::int64_t r, const Cutoff& b, mpfr_prec_t precision) {
  check_srb(s, r, b);
  const auto us = static_cast<std::uint64_t>(s);
  const auto ur = static_cast<std::uint64_t>(r);
  Real acc(precision), t(precision);

  // ln of (2s - 3r/2 + 2)! s! / ((2s - r + 2)! (s - r + 1)! (s - r/2 + 1))
  ln_factorial(acc.get(), 2 * us - 3 * ur / 2 + 2, MPFR_RNDU);
  ln_factorial(t.get(), us, MPFR_RNDU);
  mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDU);
  ln_factorial(t.get(), 2 * us - ur + 2, MPFR_RNDD);
  mpfr_sub(acc.get(), acc.get(), t.get(), MPFR_RNDU);
  ln_factorial(t.get(), us - ur + 1, MPFR_RNDD);
  mpfr_sub(acc.get(), acc.get(), t.get(), MPFR_RNDU);
  ln_ui(t.get(), us - ur / 2 + 1, MPFR_RNDD);
  mpfr_sub(acc.get(), acc.get(), t.get(), MPFR_RNDU);
  // + (s - r) ln 2
  mpfr_const_log2(t.get(), MPFR_RNDU);
  mpfr_mul_ui(t.get(), t.get(), static_cast<unsigned long>(us - ur), MPFR_RNDU);
  mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDU);
  mpfr_mul_2ui(acc.get(), acc.get(), 1, MPFR_RNDU);

  const std::int64_t fb = b.floor();
  auto sieve = shared_sieve(us);
  Real primes_part(precision);
  for (std::uint64_t p : sieve->primes_in(static_cast<std::uint64_t>(std::max<std::int64_t>(fb, 0)) + 1, us)) {
    if (!b.below(p)) continue;
    ln_ui(t.get(), p, MPFR_RNDU);
    mpfr_mul_ui(t.get(), t.get(), static_cast<unsigned long>(val_p_f_tilde(s, r, p)), MPFR_RNDU);
    mpfr_add(primes_part.get(), primes_part.get(), t.get(), MPFR_RNDU);
  }
  mpfr_mul_2ui(primes_part.get(), primes_part.get(), 1, MPFR_RNDU);
  mpfr_add(acc.get(), acc.get(), primes_part.get(), MPFR_RNDU);

  // + 4 ln(3/2) pi(b)
  const std::uint64_t pi_b = fb < 2 ? 0 : sieve->pi(static_cast<std::uint64_t>(fb));
  ln_three_halves(t.get(), MPFR_RNDU);
  mpfr_mul_ui(t.get(), t.get(), static_cast<unsigned long>(4 * pi_b), MPFR_RNDU);
  mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDU);
  return acc;
}

RigorousUpper kappa(std::int64_t s, std::int64_t r, const Cutoff& b, mpfr_prec_t precision) {
  RigorousUpper out;
  for (mpfr_prec_t p : {precision, std::max<mpfr_prec_t>(precision, 256)}) {
    Real lo = kappa_at(s, r, b, p);
    Real hi = kappa_at(s, r, b, p + 64);
    out.value = lo;
    out.precision_bits = p;
    out.stable = relatively_close(lo, hi);
    if (out.stable) break;
  }
  return out;
}

BoundReport v_upper(std::int64_t s, std::int64_t r, const Cutoff& b, mpfr_prec_t precision) {
  BoundReport rep;
  rep.s = s;
  rep.r = r;
  rep.b = b;
  rep.psi = psi(s, r, b);
  rep.feasible = rep.psi > 0;
  if (!rep.feasible) return rep;
  rep.kappa_upper = kappa(s, r, b, precision);
  const mpfr_prec_t p = rep.kappa_upper.precision_bits;
  Real q(p);
  mpfr_div_si(q.get(), rep.kappa_upper.value.get(), static_cast<long>(rep.psi), MPFR_RNDU);
  rep.exp_upper = Real(p);
  mpfr_exp(rep.exp_upper.get(), q.get(), MPFR_RNDU);
  mpfr_get_z(rep.v_bound.get_mpz_t(), rep.exp_upper.get(), MPFR_RNDU);
  rep.v_bound += 2 * s - 1;
  return rep;
}

BoundReport best_bound(std::int64_t s, std::int64_t r, unsigned workers, mpfr_prec_t precision) {
  if (s < 1) throw DomainError("best_bound: s must be positive");
  // Reports only change when b crosses a prime, so b = 1 and the primes up to
  // s are the smallest representatives of every distinct report.
  std::vector<std::int64_t> candidates{1};
  for (std::uint64_t p : shared_sieve(static_cast<std::uint64_t>(s))->primes_in(2, static_cast<std::uint64_t>(s))) {
    candidates.push_back(static_cast<std::int64_t>(p));
  }
  std::vector<BoundReport> reports(candidates.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      reports[i] = v_upper(s, r, Cutoff::integer(candidates[i]), precision);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::max(1u, workers); ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  const BoundReport* best = nullptr;
  for (const auto& rep : reports) {
    if (rep.feasible && (best == nullptr || rep.v_bound < best->v_bound)) best = &rep;
  }
  if (best == nullptr) return v_upper(s, r, Cutoff::integer(s), precision);
  return *best;
}

Real dusart_pi_upper(const Real& x, mpfr_prec_t precision) {
  if (mpfr_cmp_ui(x.get(), 1) <= 0) throw DomainError("dusart_pi_upper: need x > 1");
  Real lnx(precision), t(precision), out(precision);
  mpfr_log(lnx.get(), x.get(), MPFR_RNDD);
  if (mpfr_sgn(lnx.get()) <= 0) throw DomainError("dusart_pi_upper: x too close to 1");
  mpfr_set_str(t.get(), "1.2762", 10, MPFR_RNDU);
  mpfr_div(t.get(), t.get(), lnx.get(), MPFR_RNDU);
  mpfr_add_ui(t.get(), t.get(), 1, MPFR_RNDU);
  mpfr_div(out.get(), x.get(), lnx.get(), MPFR_RNDU);
  mpfr_mul(out.get(), out.get(), t.get(), MPFR_RNDU);
  return out;
}

Real dusart_pi_upper(std::uint64_t x, mpfr_prec_t precision) {
  Real rx(64);
  mpfr_set_ui(rx.get(), static_cast<unsigned long>(x), MPFR_RNDN);
  return dusart_pi_upper(rx, precision);
}

std::pair<Real, Real> stirling_bounds(const Real& n, mpfr_prec_t precision) {
  if (mpfr_cmp_ui(n.get(), 1) < 0) throw DomainError("stirling_bounds: need n >= 1");
  auto f = [&](mpfr_rnd_t rnd) {
    Real ln(precision), out(precision), half(precision);
    mpfr_log(ln.get(), n.get(), rnd);
    mpfr_mul(out.get(), n.get(), ln.get(), rnd);
    mpfr_sub(out.get(), out.get(), n.get(), rnd);
    mpfr_div_2ui(half.get(), ln.get(), 1, rnd);
    mpfr_add(out.get(), out.get(), half.get(), rnd);
    return out;
  };
  Real lower = f(MPFR_RNDD);
  Real upper = f(MPFR_RNDU);
  mpfr_add_ui(upper.get(), upper.get(), 1, MPFR_RNDU);
  return {std::move(lower), std::move(upper)};
}

std::pair<Real, Real> stirling_bounds(std::uint64_t n, mpfr_prec_t precision) {
  Real rn(64);
  mpfr_set_ui(rn.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  return stirling_bounds(rn, precision);
}

PremeditationReport premeditation_report(std::int64_t s, mpfr_prec_t precision) {
  if (s < 627) throw DomainError("premeditation: requires s >= 627");
  PremeditationReport rep;
  rep.s = s;
  const auto us = static_cast<std::uint64_t>(s);
  Real limit(precision);
  mpfr_set_ui(limit.get(), 2'000'000, MPFR_RNDN);
  mpfr_mul_ui(limit.get(), limit.get(), static_cast<unsigned long>(us), MPFR_RNDN);  // exact

  if (s <= kDirectLimit) {
    rep.direct_evaluated = true;
    rep.direct = v_upper(s, default_r(s), Cutoff::integer(s), precision);
    rep.direct_ok = rep.direct.feasible && mpfr_less_p(rep.direct.exp_upper.get(), limit.get());
  }

  Real rs(64);
  mpfr_set_ui(rs.get(), static_cast<unsigned long>(us), MPFR_RNDN);
  const Real dusart = dusart_pi_upper(rs, precision);
  Real t(precision), u(precision);

  // psi >= s - 5 - 4 pi(s)
  mpfr_mul_ui(t.get(), dusart.get(), 4, MPFR_RNDU);
  mpfr_set_ui(rep.chain_psi_lower.get(), static_cast<unsigned long>(us - 5), MPFR_RNDD);
  mpfr_sub(rep.chain_psi_lower.get(), rep.chain_psi_lower.get(), t.get(), MPFR_RNDD);

  // kappa <= 2 f(s/2+7/2) + 2 f(s) - 2 f(s+2) + 4 - 2 ln(s/2+1) + 4 ln(3/2) pi(s)
  Real a(64);
  mpfr_set_ui(a.get(), static_cast<unsigned long>(us + 7), MPFR_RNDN);
  mpfr_div_2ui(a.get(), a.get(), 1, MPFR_RNDN);  // exact
  Real& k = rep.chain_kappa_upper;
  k = Real(precision);
  mpfr_add(k.get(), stirling_bounds(a, precision).second.get(), stirling_bounds(us, precision).second.get(), MPFR_RNDU);
  mpfr_sub(k.get(), k.get(), stirling_bounds(us + 2, precision).first.get(), MPFR_RNDU);
  mpfr_mul_2ui(k.get(), k.get(), 1, MPFR_RNDU);
  mpfr_set_ui(t.get(), static_cast<unsigned long>(us + 2), MPFR_RNDN);
  mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
  mpfr_log(t.get(), t.get(), MPFR_RNDD);
  mpfr_mul_2ui(t.get(), t.get(), 1, MPFR_RNDD);
  mpfr_sub(k.get(), k.get(), t.get(), MPFR_RNDU);
  ln_three_halves(t.get(), MPFR_RNDU);
  mpfr_mul(t.get(), t.get(), dusart.get(), MPFR_RNDU);
  mpfr_mul_ui(t.get(), t.get(), 4, MPFR_RNDU);
  mpfr_add(k.get(), k.get(), t.get(), MPFR_RNDU);

  // (ln s - 5/4) s, lower and upper
  auto ln_s_term = [&](mpfr_rnd_t rnd) {
    Real v(precision), q(precision);
    mpfr_log(v.get(), rs.get(), rnd);
    mpfr_set_ui(q.get(), 5, MPFR_RNDN);
    mpfr_div_2ui(q.get(), q.get(), 2, MPFR_RNDN);
    mpfr_sub(v.get(), v.get(), q.get(), rnd);
    mpfr_mul_ui(v.get(), v.get(), static_cast<unsigned long>(us), rnd);
    return v;
  };
  rep.chain_kappa_ok = mpfr_less_p(k.get(), ln_s_term(MPFR_RNDD).get());

  const bool psi_positive = mpfr_sgn(rep.chain_psi_lower.get()) > 0;
  if (psi_positive) {
    Real& g = rep.chain_gap_upper;
    g = Real(precision);
    mpfr_div(g.get(), ln_s_term(MPFR_RNDU).get(), rep.chain_psi_lower.get(), MPFR_RNDU);
    mpfr_log(t.get(), rs.get(), MPFR_RNDD);
    mpfr_sub(g.get(), g.get(), t.get(), MPFR_RNDU);
    mpfr_set_ui(u.get(), 2'000'000, MPFR_RNDN);
    mpfr_log(u.get(), u.get(), MPFR_RNDD);
    rep.chain_ok = rep.chain_kappa_ok && mpfr_less_p(g.get(), u.get());
  }
  return rep;
}

bool check_premeditation(std::int64_t s) { return premeditation_report(s).ok(); }

}  // namespace tight
