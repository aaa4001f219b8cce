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

// Rational functions in (v, k) that factor completely into linear forms.
// Every identity checked by the identity suite has this shape, which lets the
// suite read off rigorous degree bounds for the cleared polynomial identity
// instead of expanding anything symbolically.

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "tight/exact_arith.hpp"

namespace tight {

/// cv*v + ck*k + c0, stored primitive with a positive leading coefficient.
struct LinearForm {
  std::int64_t cv = 0;
  std::int64_t ck = 0;
  std::int64_t c0 = 0;

  BigInt operator()(std::int64_t v, std::int64_t k) const;
  bool is_constant() const { return cv == 0 && ck == 0; }
  auto operator<=>(const LinearForm&) const = default;
};

/// coefficient * prod form^exponent (negative exponents are denominators).
class Term {
 public:
  Term() = default;
  explicit Term(ExactRational coefficient) : coefficient_(std::move(coefficient)) {}

  /// Multiplies by (cv v + ck k + c0)^exponent.
  Term& times(std::int64_t cv, std::int64_t ck, std::int64_t c0, int exponent = 1);
  Term& times(const Term& other);
  Term& scale(const ExactRational& factor);

  /// (base + j) for j in [0, n).
  Term& rising(std::int64_t cv, std::int64_t ck, std::int64_t c0, std::int64_t n, int sign = 1);
  /// (base - j) for j in [0, n).
  Term& falling(std::int64_t cv, std::int64_t ck, std::int64_t c0, std::int64_t n, int sign = 1);
  /// C(base, n) = falling(base, n) / n!.
  Term& binomial(std::int64_t cv, std::int64_t ck, std::int64_t c0, std::int64_t n);

  Term inverse() const;

  bool is_zero() const { return coefficient_ == 0; }
  const ExactRational& coefficient() const { return coefficient_; }
  const std::map<LinearForm, int>& factors() const { return factors_; }

  /// Throws DomainError if a denominator factor vanishes at (v, k).
  ExactRational operator()(std::int64_t v, std::int64_t k) const;
  /// True if some denominator factor vanishes at (v, k).
  bool singular_at(std::int64_t v, std::int64_t k) const;

  std::int64_t numerator_degree_v() const;
  std::int64_t numerator_degree_k() const;

 private:
  ExactRational coefficient_ = 1;
  std::map<LinearForm, int> factors_;
};

/// A finite sum of terms.
struct Expr {
  std::vector<Term> terms;

  Expr& operator+=(Term t);
  ExactRational operator()(std::int64_t v, std::int64_t k) const;
  bool singular_at(std::int64_t v, std::int64_t k) const;
};

/// Degree bounds of D * (lhs - rhs), where D is the least common multiple of
/// all denominators appearing in either side.
struct ClearedDegree {
  std::int64_t in_v = 0;
  std::int64_t in_k = 0;
};

ClearedDegree cleared_degree(const Expr& lhs, const Expr& rhs);

/// Every denominator form appearing on either side (canonical, deduplicated).
std::vector<LinearForm> denominator_forms(const Expr& lhs, const Expr& rhs);

}  // namespace tight
