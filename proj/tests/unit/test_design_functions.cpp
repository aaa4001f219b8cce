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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tight/design_functions.hpp"
#include "tight/errors.hpp"

using namespace tight;

namespace {

// Phi_s(z) straight from the binomial-sum definition, z an integer.
ExactRational phi_direct(std::int64_t s, std::int64_t v, std::int64_t k, std::int64_t z) {
  ExactRational acc = 0;
  for (std::int64_t i = 0; i <= s; ++i) {
    ExactRational w = ExactRational(oracle::choose(v - s, i) * oracle::choose(k - i, s - i) *
                                    oracle::choose(k - i - 1, s - i)) /
                      ExactRational(oracle::choose(s, i));
    w *= oracle::falling(z, i) / ExactRational(oracle::fact(i));
    acc += (s - i) % 2 ? -w : w;
  }
  return acc;
}

}  // namespace

TEST_CASE("Witt design parameters") {
  const auto w7 = DesignCandidate::nontrivial(2, 23, 7);
  const auto w16 = DesignCandidate::nontrivial(2, 23, 16);
  CHECK(lambda_si(w7, 2) == 1);
  CHECK(lambda_si(w16, 2) == 52);
  CHECK(intersection_numbers(w7) == std::vector<std::int64_t>{1, 3});
  CHECK(intersection_numbers(w16) == std::vector<std::int64_t>{10, 12});
  for (std::int64_t i = 0; i <= 2; ++i) {
    CHECK(alpha_si(w7, i).get_den() == 1);
    CHECK(alpha_si(w16, i).get_den() == 1);
  }
}

TEST_CASE("design functions against direct formulas") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    const std::int64_t s = std::uniform_int_distribution<std::int64_t>(1, 8)(rng);
    const std::int64_t k = std::uniform_int_distribution<std::int64_t>(2 * s + 1, 120)(rng);
    const std::int64_t v = std::uniform_int_distribution<std::int64_t>(k + 2 * s + 1, 2 * k + 40)(rng);
    const auto c = DesignCandidate::nontrivial(s, v, k);
    for (std::int64_t i = 0; i <= s; ++i) {
      CHECK(lambda_si(c, i) == oracle::lambda(s, i, v, k));
      CHECK(h_si(c, i) == oracle::h(s, i, v, k));
      CHECK(alpha_si(c, i) == oracle::alpha(s, i, c.x(), c.y()));
      CHECK(alpha_xy(s, c.x(), c.y(), i) == alpha_si(c, i));
    }
  }
}

TEST_CASE("Wilson polynomial: definition, alpha form, evaluation") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const std::int64_t s = std::uniform_int_distribution<std::int64_t>(1, 6)(rng);
    const std::int64_t k = std::uniform_int_distribution<std::int64_t>(2 * s + 1, 60)(rng);
    const std::int64_t v = std::uniform_int_distribution<std::int64_t>(k + 2 * s + 1, 2 * k)(rng);
    const auto c = DesignCandidate::nontrivial(s, v, k);
    const auto p = wilson_polynomial(c);
    const auto pa = wilson_polynomial_alpha_form(c);
    CHECK(p.coefficients.size() == static_cast<std::size_t>(s + 1));
    for (std::int64_t z = -3; z <= k + 3; ++z) {
      CHECK(p(ExactRational(static_cast<long>(z))) == phi_direct(s, v, k, z));
      CHECK(pa(ExactRational(static_cast<long>(z))) == p(ExactRational(static_cast<long>(z))));
    }
    const auto m = p.monic();
    CHECK(m.coefficients.back() == 1);
  }
}

TEST_CASE("falling factorial coefficients") {
  for (std::uint64_t n = 0; n <= 12; ++n) {
    const auto c = falling_factorial_coefficients(n);
    REQUIRE(c.size() == n + 1);
    for (long z = -5; z <= 15; ++z) {
      ExactRational acc = 0;
      for (std::size_t j = c.size(); j-- > 0;) acc = acc * z + ExactRational(c[j]);
      CHECK(acc == oracle::falling(ExactRational(z), static_cast<std::int64_t>(n)));
    }
  }
}

TEST_CASE("integer roots") {
  // (z-2)(z-5)(z-5)
  WilsonPolynomial p{3, {ExactRational(-50), ExactRational(45), ExactRational(-12), ExactRational(1)}};
  CHECK(integer_roots(p, 0, 10) == std::vector<std::int64_t>{2, 5, 5});
  CHECK_FALSE(integer_roots(p, 3, 10).has_value());
  // z^2 - 2 has irrational roots
  WilsonPolynomial q{2, {ExactRational(-2), ExactRational(0), ExactRational(1)}};
  CHECK_FALSE(integer_roots(q, -5, 5).has_value());
}

TEST_CASE("non-design candidates have no integral intersection numbers") {
  // (v, k) = (24, 8), s = 2 is in the window but is not a tight design
  CHECK_FALSE(intersection_numbers(DesignCandidate::nontrivial(2, 24, 8)).has_value());
}

TEST_CASE("alpha_all_integral matches the per-index check") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 400; ++t) {
    const std::int64_t s = std::uniform_int_distribution<std::int64_t>(2, 8)(rng);
    const std::int64_t x = std::uniform_int_distribution<std::int64_t>(s + 1, 200)(rng);
    const std::int64_t y = std::uniform_int_distribution<std::int64_t>(x + s + 2, 2 * x + 1)(rng);
    bool direct = true;
    for (std::int64_t i = 1; i <= s; ++i) direct = direct && oracle::alpha(s, i, x, y).get_den() == 1;
    CHECK(alpha_all_integral(s, x, y, s) == direct);
  }
  CHECK(alpha_all_integral(2, 14, 20, 2));
}

TEST_CASE("window errors") {
  CHECK_THROWS_AS(DesignCandidate::nontrivial(2, 23, 4), WindowError);
  CHECK_THROWS_AS(DesignCandidate::nontrivial(2, 10, 6), WindowError);
  CHECK_THROWS_AS(wilson_polynomial(DesignCandidate{3, 10, 5}), WindowError);
  CHECK_FALSE(DesignCandidate{2, 23, 4}.in_window());
  CHECK(DesignCandidate{2, 23, 7}.in_window());
}
