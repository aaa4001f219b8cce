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

// Exact evaluation of the design-parameter families lambda_{s,i},
// alpha_{s,i}, h_{s,i} and of the Wilson polynomial Phi_s.

#include <cstdint>
#include <optional>
#include <vector>

#include "tight/exact_arith.hpp"

namespace tight {

/// Parameters (s, v, k) of a hypothetical tight 2s-design.
struct DesignCandidate {
  std::int64_t s = 0;
  std::int64_t v = 0;
  std::int64_t k = 0;

  /// Validates the nontriviality window; throws WindowError otherwise.
  static DesignCandidate nontrivial(std::int64_t s, std::int64_t v, std::int64_t k);

  std::int64_t x() const { return k - s; }
  std::int64_t y() const { return v - 2 * s + 1; }

  /// k >= 2s+1 and v-k >= 2s+1.
  bool in_window() const;
};

ExactRational lambda_si(const DesignCandidate& c, std::int64_t i);
ExactRational alpha_si(const DesignCandidate& c, std::int64_t i);
ExactRational alpha_xy(std::int64_t s, std::int64_t x, std::int64_t y, std::int64_t i);
ExactRational h_si(const DesignCandidate& c, std::int64_t i);

/// Coefficients of a polynomial in z, lowest degree first.
struct WilsonPolynomial {
  std::int64_t s = 0;
  std::vector<ExactRational> coefficients;

  ExactRational operator()(const ExactRational& z) const;
  /// Same polynomial divided by its leading coefficient.
  WilsonPolynomial monic() const;
};

/// Binomial-sum definition of Phi_s. Requires the nontriviality window.
WilsonPolynomial wilson_polynomial(const DesignCandidate& c);

/// The alpha expansion C(v-s,s)/s! * sum (-1)^i alpha_{s,i} z^{falling s-i}.
WilsonPolynomial wilson_polynomial_alpha_form(const DesignCandidate& c);

/// Coefficients of z^{falling n} in the monomial basis (signed Stirling
/// numbers of the first kind).
std::vector<BigInt> falling_factorial_coefficients(std::uint64_t n);

/// The s roots of Phi_s in ascending order when all of them are integers in
/// [0, k-1] (verified exactly); std::nullopt otherwise.
std::optional<std::vector<std::int64_t>> intersection_numbers(const DesignCandidate& c);

/// Integer roots of an arbitrary exact polynomial whose real roots all lie
/// in [lo, hi]: returns all deg roots (with multiplicity) when every root is
/// an integer in range, std::nullopt otherwise.
std::optional<std::vector<std::int64_t>> integer_roots(const WilsonPolynomial& p,
                                                       std::int64_t lo, std::int64_t hi);

/// True iff alpha_xy(s, x, y, i) is an integer for every i in [1, i_max].
/// Stops at the first failure, cheapest index first.
bool alpha_all_integral(std::int64_t s, std::int64_t x, std::int64_t y, std::int64_t i_max);

}  // namespace tight
