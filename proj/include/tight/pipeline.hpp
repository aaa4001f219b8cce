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

// Per-s nonexistence certificates: the three-case argument driven end to
// end, plus the Witt regression report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tight/exact_arith.hpp"
#include "tight/prime_engine.hpp"
#include "tight/upper_bound.hpp"

namespace tight {

enum class CaseTag { kCase1Analytic, kCase2, kCase3 };

std::string to_string(CaseTag tag);

/// Case boundaries: s >= 627 analytic, [288, 626] with b = s/3, [10, 287]
/// with a searched b plus the integrality search.
CaseTag case_for(std::int64_t s);

struct Certificate {
  std::int64_t s = 0;
  CaseTag tag = CaseTag::kCase3;
  std::int64_t r = 0;
  Cutoff b;
  std::optional<std::int64_t> psi;
  std::optional<BigInt> exp_upper;  // ceil(exp(kappa/psi))
  BigInt upper_v;
  std::string upper_src;
  std::optional<BigInt> lower_v;
  std::string lower_src;
  std::optional<std::int64_t> coverage_x;       // attested hit-free x range [1, coverage_x]
  std::optional<std::int64_t> coverage_needed;  // x range a design could live in
  bool contradiction = false;
  std::string note;

  /// "certificate s=... case=... ..." on one line, decimal ASCII only.
  std::string record() const;
};

struct PipelineConfig {
  std::int64_t s_lo = 10;
  std::int64_t s_hi = 700;
  std::uint64_t sieve_limit = 1'300'000'000;
  mpfr_prec_t precision = kDefaultPrecision;
  unsigned workers = 1;
  /// Search checkpoint used as the Case 3 coverage attestation; may be empty.
  std::string checkpoint_path;
};

/// One certificate per s in [s_lo, s_hi]. Throws DomainError for s_lo < 10.
std::vector<Certificate> run_pipeline(const PipelineConfig& config);

/// rho_s from a record table, re-checked: rho prime and (rho, rho+s-1]
/// prime-free. nullopt when the table does not reach a gap of s.
std::optional<std::uint64_t> checked_rho(const std::vector<GapRecord>& records, std::uint64_t s);

struct WittReport {
  std::vector<std::string> lines;
  bool ok = false;
};

/// lambda, alpha integrality, intersection numbers and block counts of the
/// 4-(23,7,1) design and its complement.
WittReport run_witt();

}  // namespace tight
