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

#include "tight/exact_arith.hpp"

#include "tight/errors.hpp"

namespace tight {

ExactRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactRational rising_factorial(const ExactRational& x, std::uint64_t n) {
  ExactRational acc = 1;
  ExactRational term = x;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (term == 0) return 0;
    acc *= term;
    term += 1;
  }
  return acc;
}

ExactRational falling_factorial(const ExactRational& x, std::uint64_t n) {
  ExactRational acc = 1;
  ExactRational term = x;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (term == 0) return 0;
    acc *= term;
    term -= 1;
  }
  return acc;
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ExactRational binomial(const ExactRational& n, std::uint64_t k) {
  if (n.get_den() == 1 && n >= 0 && mpz_fits_ulong_p(n.get_num_mpz_t())) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n.get_num().get_ui(), k);
    return ExactRational(r);
  }
  ExactRational r = falling_factorial(n, k);
  r /= ExactRational(factorial(k));
  return r;
}

BigInt ell(std::uint64_t n) {
  BigInt acc = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
  }
  return acc;
}

std::uint64_t val_p_factorial(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw DomainError("val_p_factorial: p must be prime");
  std::uint64_t total = 0;
  while (n > 0) {
    n /= p;
    total += n;
  }
  return total;
}

std::int64_t val_p(const BigInt& x, std::uint64_t p) {
  if (x == 0) throw DomainError("val_p of zero is +infinity");
  if (p < 2) throw DomainError("val_p: p must be prime");
  BigInt pz(static_cast<unsigned long>(p));
  BigInt rest;
  return static_cast<std::int64_t>(
      mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

std::int64_t val_p(const ExactRational& x, std::uint64_t p) {
  if (x == 0) throw DomainError("val_p of zero is +infinity");
  return val_p(BigInt(x.get_num()), p) - val_p(BigInt(x.get_den()), p);
}

std::uint64_t floor_log(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw DomainError("floor_log: base must be >= 2");
  std::uint64_t e = 0;
  while (n >= p) {
    n /= p;
    ++e;
  }
  return e;
}

ExactRational ValuationTable::reconstruct() const {
  ExactRational acc = cofactor;
  for (const auto& [p, e] : entries) {
    BigInt pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) {
      acc *= ExactRational(pe);
    } else {
      acc /= ExactRational(pe);
    }
  }
  return acc;
}

ValuationTable valuation_table(const ExactRational& x,
                               std::span<const std::uint64_t> primes) {
  if (x == 0) throw DomainError("valuation_table of zero");
  ValuationTable t;
  BigInt num = x.get_num();
  BigInt den = x.get_den();
  for (std::uint64_t p : primes) {
    BigInt pz(static_cast<unsigned long>(p));
    auto up = mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
    auto down = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    auto e = static_cast<std::int64_t>(up) - static_cast<std::int64_t>(down);
    if (e != 0) t.entries[p] = e;
  }
  t.cofactor = make_rational(num, den);
  return t;
}

std::string to_string(const ExactRational& x) { return x.get_str(10); }
std::string to_string(const BigInt& x) { return x.get_str(10); }

}  // namespace tight
