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

// The quadratic combination H_{s,r} of the h_{s,i}, its closed form G_{s,r}
// and the denominator-clearing constant F_{s,r}.

#include <cstdint>

#include "tight/exact_arith.hpp"

namespace tight {

/// sum_{i=0}^{r} (-1)^i C(r,i) h_{s,s-r+i} h_{s,s-i}, evaluated through
/// design_functions::h_si.
ExactRational h_sum(std::int64_t s, std::int64_t r, std::int64_t v, std::int64_t k);

/// Closed-form product G_{s,r}; computed independently of h_sum.
ExactRational g_closed(std::int64_t s, std::int64_t r, std::int64_t v, std::int64_t k);

/// s!^2 l_{s-1}^2 l_{s-2}^2 r!/(r/2)!.
BigInt f_const(std::int64_t s, std::int64_t r);

/// r!/(r/2)!, the ratio between H and G.
BigInt closed_form_ratio(std::int64_t r);

struct AuxiliaryValue {
  std::int64_t s = 0;
  std::int64_t r = 0;
  std::int64_t v = 0;
  std::int64_t k = 0;
  ExactRational h_sum;
  ExactRational g_closed;
  BigInt f_const;
};

AuxiliaryValue auxiliary_value(std::int64_t s, std::int64_t r, std::int64_t v, std::int64_t k);

}  // namespace tight
