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

// Exact integer / rational kernel. Every value downstream of this header is
// an mpq_class in canonical form (lowest terms, positive denominator).

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace tight {

using BigInt = mpz_class;
using ExactRational = mpq_class;

/// Builds num/den in lowest terms. Throws DomainError when den == 0.
ExactRational make_rational(const BigInt& num, const BigInt& den);

/// x (x+1) ... (x+n-1); empty product is 1.
ExactRational rising_factorial(const ExactRational& x, std::uint64_t n);
/// x (x-1) ... (x-n+1); empty product is 1.
ExactRational falling_factorial(const ExactRational& x, std::uint64_t n);

BigInt factorial(std::uint64_t n);

/// Generalized binomial coefficient falling(n, k) / k!.
ExactRational binomial(const ExactRational& n, std::uint64_t k);

/// lcm{1, ..., n}; ell(0) = ell(1) = 1.
BigInt ell(std::uint64_t n);

/// Legendre's formula: exponent of p in n!.
std::uint64_t val_p_factorial(std::uint64_t n, std::uint64_t p);

/// Exponent of p in a nonzero integer.
std::int64_t val_p(const BigInt& x, std::uint64_t p);

/// Exponent of p in a nonzero rational; negative when p divides the
/// denominator. Throws DomainError for x == 0.
std::int64_t val_p(const ExactRational& x, std::uint64_t p);

/// floor(log_p n) for n >= 1, and 0 for n == 0.
std::uint64_t floor_log(std::uint64_t n, std::uint64_t p);

/// Prime factorization restricted to a prime list, plus the p-free cofactor.
struct ValuationTable {
  std::map<std::uint64_t, std::int64_t> entries;
  ExactRational cofactor;

  /// cofactor * prod p^e, exactly.
  ExactRational reconstruct() const;
};

/// Splits a nonzero x over the given primes. Throws DomainError for x == 0.
ValuationTable valuation_table(const ExactRational& x,
                               std::span<const std::uint64_t> primes);

/// Decimal string of a rational ("n" or "n/d").
std::string to_string(const ExactRational& x);
std::string to_string(const BigInt& x);

}  // namespace tight
