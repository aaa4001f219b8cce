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

// Machine verification of the polynomial / rational-function identities that
// the upper bound rests on. Each identity is checked by exact evaluation on
// a tensor grid whose side lengths exceed the degree bounds of the cleared
// polynomial identity, which makes a pass a proof rather than a spot check.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tight/linear_forms.hpp"

namespace tight {

enum class IdentityFamily {
  kLogopedia,            // 1 as a double sum in Q[v, k]
  kCetology,             // 1 as a sum in Q[k]
  kMangeriteUnfarrowed,  // lambda/h and alpha/h quotients
  kSpanglyPolytonalism,  // alpha_i/h_i and h_s/h_i quotients
  kDixonSpecialization,  // terminating 3F2 at a = -r
  kAdministration,       // H_{s,r} = r!/(r/2)! G_{s,r}
};

std::string to_string(IdentityFamily family);

struct GridPoint {
  std::int64_t v = 0;
  std::int64_t k = 0;
};

struct IdentityReport {
  IdentityFamily family{};
  std::int64_t s = 0;
  std::optional<std::int64_t> param;  // i or r
  int part = 0;                       // sub-identity index within the family
  ClearedDegree degree;
  std::int64_t grid_v = 0;
  std::int64_t grid_k = 0;
  std::int64_t skipped = 0;  // grid coordinates rejected for a vanishing denominator
  bool pass = false;
  std::optional<GridPoint> counterexample;

  /// One space-separated key=value record.
  std::string record() const;
};

/// Perturbs the right side (adds 1 to its first coefficient) so that the
/// check must fail; guards against vacuous passes.
struct Mutation {
  bool enabled = false;
};

/// One identity lhs == rhs over a grid starting at (v0, k0).
struct IdentityCase {
  IdentityFamily family{};
  std::int64_t s = 0;
  std::optional<std::int64_t> param;
  int part = 0;
  Expr lhs;
  Expr rhs;
  std::int64_t min_grid_v = 1;
  std::int64_t min_grid_k = 1;
  std::int64_t v0 = 0;
  std::int64_t k0 = 0;
  // Optional independent evaluators; when set they replace the symbolic
  // evaluation and the symbolic form is cross-checked against them.
  std::function<ExactRational(std::int64_t, std::int64_t)> lhs_eval;
  std::function<ExactRational(std::int64_t, std::int64_t)> rhs_eval;
};

IdentityReport verify_identity(const IdentityCase& c);

// Symbolic versions of the design functions, used to build identity sides.
Term lambda_term(std::int64_t s, std::int64_t i);
Term alpha_term(std::int64_t s, std::int64_t i);
Term h_term(std::int64_t s, std::int64_t i);

IdentityCase logopedia_case(std::int64_t s, Mutation m = {});
IdentityCase cetology_case(std::int64_t s, std::int64_t i, Mutation m = {});
std::vector<IdentityCase> mangerite_unfarrowed_cases(std::int64_t s, std::int64_t i, Mutation m = {});
std::vector<IdentityCase> spangly_polytonalism_cases(std::int64_t s, std::int64_t i, Mutation m = {});
IdentityCase dixon_case(std::int64_t s, std::int64_t r, Mutation m = {});
IdentityCase closed_form_case(std::int64_t s, std::int64_t r, Mutation m = {});

IdentityReport verify_two_var_identity(std::int64_t s, Mutation m = {});
IdentityReport verify_one_var_identity(std::int64_t s, std::int64_t i, Mutation m = {});
std::vector<IdentityReport> verify_quotient_identities_lambda_alpha(std::int64_t s, std::int64_t i,
                                                                    Mutation m = {});
std::vector<IdentityReport> verify_quotient_identities_h(std::int64_t s, std::int64_t i,
                                                         Mutation m = {});
IdentityReport verify_dixon_specialization(std::int64_t s, std::int64_t r, Mutation m = {});
IdentityReport verify_closed_form(std::int64_t s, std::int64_t r, Mutation m = {});

/// Every family for every valid parameter with s <= s_max, run on `workers`
/// threads and returned in a canonical order.
std::vector<IdentityReport> verify_all(std::int64_t s_max, unsigned workers = 1, Mutation m = {});

}  // namespace tight
