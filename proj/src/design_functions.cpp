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

#include "tight/design_functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tight/errors.hpp"
#include "tight/real.hpp"

namespace tight {

namespace {

void require_index(const char* what, std::int64_t s, std::int64_t i) {
  if (i < 0 || i > s) {
    throw DomainError(std::string(what) + ": index i=" + std::to_string(i) +
                      " outside [0, s=" + std::to_string(s) + "]");
  }
}

ExactRational checked_ratio(const char* what, const ExactRational& num,
                            const ExactRational& den) {
  if (den == 0) throw DomainError(std::string(what) + ": zero denominator");
  return num / den;
}

ExactRational q(std::int64_t n) { return ExactRational(static_cast<long>(n)); }

}  // namespace

DesignCandidate DesignCandidate::nontrivial(std::int64_t s, std::int64_t v, std::int64_t k) {
  DesignCandidate c{s, v, k};
  if (s < 1 || !c.in_window()) {
    throw WindowError("candidate (s=" + std::to_string(s) + ", v=" + std::to_string(v) +
                      ", k=" + std::to_string(k) +
                      ") violates the nontriviality window k >= 2s+1, v-k >= 2s+1");
  }
  return c;
}

bool DesignCandidate::in_window() const { return k >= 2 * s + 1 && v - k >= 2 * s + 1; }

ExactRational lambda_si(const DesignCandidate& c, std::int64_t i) {
  require_index("lambda_si", c.s, i);
  ExactRational num = falling_factorial(q(c.k), static_cast<std::uint64_t>(c.s + i));
  ExactRational den = falling_factorial(q(c.v - c.s), static_cast<std::uint64_t>(i));
  den *= ExactRational(factorial(static_cast<std::uint64_t>(c.s)));
  return checked_ratio("lambda_si", num, den);
}

ExactRational alpha_xy(std::int64_t s, std::int64_t x, std::int64_t y, std::int64_t i) {
  require_index("alpha_xy", s, i);
  const auto n = static_cast<std::uint64_t>(i);
  ExactRational num = binomial(q(s), n) * rising_factorial(q(x), n) * rising_factorial(q(x + 1), n);
  return checked_ratio("alpha_xy", num, rising_factorial(q(y), n));
}

ExactRational alpha_si(const DesignCandidate& c, std::int64_t i) {
  return alpha_xy(c.s, c.x(), c.y(), i);
}

ExactRational h_si(const DesignCandidate& c, std::int64_t i) {
  require_index("h_si", c.s, i);
  const auto n = static_cast<std::uint64_t>(i);
  return checked_ratio("h_si", rising_factorial(q(c.k - c.s), n + 1),
                       rising_factorial(q(c.y()), n));
}

ExactRational WilsonPolynomial::operator()(const ExactRational& z) const {
  ExactRational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

WilsonPolynomial WilsonPolynomial::monic() const {
  WilsonPolynomial out = *this;
  while (!out.coefficients.empty() && out.coefficients.back() == 0) out.coefficients.pop_back();
  if (out.coefficients.empty()) throw DomainError("monic: zero polynomial");
  const ExactRational lead = out.coefficients.back();
  for (auto& a : out.coefficients) a /= lead;
  return out;
}

std::vector<BigInt> falling_factorial_coefficients(std::uint64_t n) {
  std::vector<BigInt> c{1};
  for (std::uint64_t m = 0; m < n; ++m) {
    // multiply by (z - m)
    std::vector<BigInt> next(c.size() + 1, 0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= c[j] * BigInt(static_cast<unsigned long>(m));
    }
    c = std::move(next);
  }
  return c;
}

WilsonPolynomial wilson_polynomial(const DesignCandidate& c) {
  if (!c.in_window()) {
    throw WindowError("wilson_polynomial: candidate outside the nontriviality window");
  }
  const std::int64_t s = c.s;
  WilsonPolynomial p{s, std::vector<ExactRational>(static_cast<std::size_t>(s + 1), 0)};
  for (std::int64_t i = 0; i <= s; ++i) {
    const auto si = static_cast<std::uint64_t>(s - i);
    ExactRational w = binomial(q(c.v - s), static_cast<std::uint64_t>(i)) *
                      binomial(q(c.k - i), si) * binomial(q(c.k - i - 1), si) /
                      binomial(q(s), static_cast<std::uint64_t>(i));
    if ((s - i) % 2 != 0) w = -w;
    w /= ExactRational(factorial(static_cast<std::uint64_t>(i)));
    const auto ff = falling_factorial_coefficients(static_cast<std::uint64_t>(i));
    for (std::size_t j = 0; j < ff.size(); ++j) p.coefficients[j] += w * ExactRational(ff[j]);
  }
  return p;
}

WilsonPolynomial wilson_polynomial_alpha_form(const DesignCandidate& c) {
  if (!c.in_window()) {
    throw WindowError("wilson_polynomial_alpha_form: candidate outside the nontriviality window");
  }
  const std::int64_t s = c.s;
  const ExactRational scale =
      binomial(q(c.v - s), static_cast<std::uint64_t>(s)) /
      ExactRational(factorial(static_cast<std::uint64_t>(s)));
  WilsonPolynomial p{s, std::vector<ExactRational>(static_cast<std::size_t>(s + 1), 0)};
  for (std::int64_t i = 0; i <= s; ++i) {
    ExactRational w = scale * alpha_si(c, i);
    if (i % 2 != 0) w = -w;
    const auto ff = falling_factorial_coefficients(static_cast<std::uint64_t>(s - i));
    for (std::size_t j = 0; j < ff.size(); ++j) p.coefficients[j] += w * ExactRational(ff[j]);
  }
  return p;
}

std::optional<std::vector<std::int64_t>> integer_roots(const WilsonPolynomial& p,
                                                       std::int64_t lo, std::int64_t hi) {
  constexpr mpfr_prec_t kPrec = 256;
  constexpr int kMaxIterations = 20000;

  std::vector<ExactRational> coeffs = p.coefficients;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) return std::nullopt;

  std::vector<std::int64_t> roots;
  while (coeffs.size() > 1) {
    const std::size_t deg = coeffs.size() - 1;
    std::vector<Real> a;
    a.reserve(coeffs.size());
    for (const auto& ci : coeffs) {
      Real r(kPrec);
      mpfr_set_q(r.get(), ci.get_mpq_t(), MPFR_RNDN);
      a.push_back(std::move(r));
    }

    // Newton from the right of every real root converges monotonically to
    // the largest root when the polynomial is real-rooted.
    Real bound(kPrec), tmp(kPrec);
    mpfr_set_ui(bound.get(), 0, MPFR_RNDN);
    for (std::size_t j = 0; j < deg; ++j) {
      mpfr_div(tmp.get(), a[j].get(), a[deg].get(), MPFR_RNDU);
      mpfr_abs(tmp.get(), tmp.get(), MPFR_RNDU);
      mpfr_max(bound.get(), bound.get(), tmp.get(), MPFR_RNDU);
    }
    mpfr_add_ui(bound.get(), bound.get(), 1, MPFR_RNDU);
    mpfr_set_si(tmp.get(), hi, MPFR_RNDU);
    mpfr_add_ui(tmp.get(), tmp.get(), 1, MPFR_RNDU);
    mpfr_max(bound.get(), bound.get(), tmp.get(), MPFR_RNDU);

    Real z = bound, f(kPrec), df(kPrec), step(kPrec);
    bool converged = false;
    for (int it = 0; it < kMaxIterations; ++it) {
      mpfr_set(f.get(), a[deg].get(), MPFR_RNDN);
      mpfr_set_ui(df.get(), 0, MPFR_RNDN);
      for (std::size_t j = deg; j-- > 0;) {
        mpfr_mul(df.get(), df.get(), z.get(), MPFR_RNDN);
        mpfr_add(df.get(), df.get(), f.get(), MPFR_RNDN);
        mpfr_mul(f.get(), f.get(), z.get(), MPFR_RNDN);
        mpfr_add(f.get(), f.get(), a[j].get(), MPFR_RNDN);
      }
      if (mpfr_zero_p(f.get())) {
        converged = true;
        break;
      }
      if (mpfr_zero_p(df.get())) break;
      mpfr_div(step.get(), f.get(), df.get(), MPFR_RNDN);
      mpfr_sub(z.get(), z.get(), step.get(), MPFR_RNDN);
      mpfr_abs(step.get(), step.get(), MPFR_RNDN);
      if (mpfr_cmp_d(step.get(), 1e-12) < 0) {
        converged = true;
        break;
      }
    }
    if (!converged || !mpfr_number_p(z.get())) return std::nullopt;

    mpfr_round(z.get(), z.get());
    if (!mpfr_fits_slong_p(z.get(), MPFR_RNDN)) return std::nullopt;
    const std::int64_t candidate = mpfr_get_si(z.get(), MPFR_RNDN);
    if (candidate < lo || candidate > hi) return std::nullopt;

    // Exact confirmation, then exact deflation by (z - candidate).
    const ExactRational root(static_cast<long>(candidate));
    std::vector<ExactRational> quotient(deg);
    ExactRational carry = coeffs[deg];
    for (std::size_t j = deg; j-- > 0;) {
      quotient[j] = carry;
      carry = coeffs[j] + carry * root;
    }
    if (carry != 0) return std::nullopt;
    roots.push_back(candidate);
    coeffs = std::move(quotient);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<std::vector<std::int64_t>> intersection_numbers(const DesignCandidate& c) {
  return integer_roots(wilson_polynomial(c), 0, c.k - 1);
}

bool alpha_all_integral(std::int64_t s, std::int64_t x, std::int64_t y, std::int64_t i_max) {
  if (y < 1) throw DomainError("alpha_all_integral: y must be >= 1");
  if (i_max < 0 || i_max > s) throw DomainError("alpha_all_integral: i_max outside [0, s]");
  if (i_max == 0) return true;
  // i = 1: y | s x (x+1)
  const BigInt n1 = BigInt(static_cast<long>(s)) * BigInt(static_cast<long>(x)) *
                    BigInt(static_cast<long>(x + 1));
  if (!mpz_divisible_p(n1.get_mpz_t(), BigInt(static_cast<long>(y)).get_mpz_t())) return false;
  ExactRational alpha = make_rational(n1, BigInt(static_cast<long>(y)));
  for (std::int64_t i = 2; i <= i_max; ++i) {
    // alpha_i / alpha_{i-1} = (s-i+1)/i * (x+i-1)(x+i) / (y+i-1)
    alpha *= make_rational(BigInt(static_cast<long>(s - i + 1)) * BigInt(static_cast<long>(x + i - 1)) *
                               BigInt(static_cast<long>(x + i)),
                           BigInt(static_cast<long>(i)) * BigInt(static_cast<long>(y + i - 1)));
    if (alpha.get_den() != 1) return false;
  }
  return true;
}

}  // namespace tight
