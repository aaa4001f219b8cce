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

#include "tight/auxiliary_h.hpp"

#include <string>

#include "tight/design_functions.hpp"
#include "tight/errors.hpp"

namespace tight {

namespace {

void require_even_r(const char* what, std::int64_t s, std::int64_t r) {
  if (r < 0 || r % 2 != 0 || r > s) {
    throw DomainError(std::string(what) + ": r must be even with 0 <= r <= s (got s=" +
                      std::to_string(s) + ", r=" + std::to_string(r) + ")");
  }
}

ExactRational q(std::int64_t n) { return ExactRational(static_cast<long>(n)); }

}  // namespace

BigInt closed_form_ratio(std::int64_t r) {
  if (r < 0 || r % 2 != 0) throw DomainError("closed_form_ratio: r must be even and >= 0");
  return factorial(static_cast<std::uint64_t>(r)) / factorial(static_cast<std::uint64_t>(r / 2));
}

ExactRational h_sum(std::int64_t s, std::int64_t r, std::int64_t v, std::int64_t k) {
  require_even_r("h_sum", s, r);
  const DesignCandidate c{s, v, k};
  if (c.y() < 1) throw DomainError("h_sum: requires v - 2s + 1 >= 1");
  ExactRational acc = 0;
  for (std::int64_t i = 0; i <= r; ++i) {
    ExactRational term = binomial(q(r), static_cast<std::uint64_t>(i)) * h_si(c, s - r + i) * h_si(c, s - i);
    if (i % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

ExactRational g_closed(std::int64_t s, std::int64_t r, std::int64_t v, std::int64_t k) {
  require_even_r("g_closed", s, r);
  const std::int64_t half = r / 2;
  ExactRational num = rising_factorial(q(v - k - s), static_cast<std::uint64_t>(half)) *
                      rising_factorial(q(k - s), static_cast<std::uint64_t>(s - half + 1)) *
                      rising_factorial(q(k - s), static_cast<std::uint64_t>(s - r + 1));
  ExactRational den = rising_factorial(q(v - 2 * s + 1), static_cast<std::uint64_t>(s)) *
                      rising_factorial(q(v - 2 * s + 1), static_cast<std::uint64_t>(s - half));
  if (den == 0) throw DomainError("g_closed: zero denominator");
  return num / den;
}

BigInt f_const(std::int64_t s, std::int64_t r) {
  if (s < 2) throw DomainError("f_const: requires s >= 2");
  require_even_r("f_const", s, r);
  const BigInt sf = factorial(static_cast<std::uint64_t>(s));
  const BigInt l1 = ell(static_cast<std::uint64_t>(s - 1));
  const BigInt l2 = ell(static_cast<std::uint64_t>(s - 2));
  return sf * sf * l1 * l1 * l2 * l2 * closed_form_ratio(r);
}

AuxiliaryValue auxiliary_value(std::int64_t s, std::int64_t r, std::int64_t v, std::int64_t k) {
  return AuxiliaryValue{s, r, v, k, h_sum(s, r, v, k), g_closed(s, r, v, k),
                        s >= 2 ? f_const(s, r) : BigInt(0)};
}

}  // namespace tight
