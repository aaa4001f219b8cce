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

#include "tight/identity_suite.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "tight/auxiliary_h.hpp"
#include "tight/errors.hpp"

namespace tight {

namespace {

ExactRational fact(std::int64_t n) { return ExactRational(factorial(static_cast<std::uint64_t>(n))); }

ExactRational sign(std::int64_t e) { return ExactRational(e % 2 == 0 ? 1 : -1); }

// Variables as linear forms: v = (1, 0, c), k = (0, 1, c).
constexpr std::int64_t V = 1;
constexpr std::int64_t K = 1;

void mutate(Expr& rhs) {
  if (rhs.terms.empty()) {
    rhs += Term(ExactRational(1));
    return;
  }
  Term& t = rhs.terms.front();
  const ExactRational c = t.coefficient();
  t.scale((c + 1) / c);
}

Expr single(Term t) {
  Expr e;
  e += std::move(t);
  return e;
}

std::int64_t default_v0(std::int64_t s) { return 4 * s + 2; }
std::int64_t default_k0(std::int64_t s) { return 2 * s + 2; }

}  // namespace

std::string to_string(IdentityFamily family) {
  switch (family) {
    case IdentityFamily::kLogopedia: return "LOGOPEDIA";
    case IdentityFamily::kCetology: return "CETOLOGY";
    case IdentityFamily::kMangeriteUnfarrowed: return "MANGERITE_UNFARROWED";
    case IdentityFamily::kSpanglyPolytonalism: return "SPANGLY_POLYTONALISM";
    case IdentityFamily::kDixonSpecialization: return "DIXON_SPECIALIZATION";
    case IdentityFamily::kAdministration: return "ADMINISTRATION";
  }
  return "UNKNOWN";
}

std::string IdentityReport::record() const {
  std::ostringstream out;
  out << "identity=" << to_string(family) << " s=" << s;
  if (param) {
    const bool is_r = family == IdentityFamily::kDixonSpecialization ||
                      family == IdentityFamily::kAdministration;
    out << (is_r ? " r=" : " i=") << *param;
  }
  out << " part=" << part << " deg_v=" << degree.in_v << " deg_k=" << degree.in_k
      << " grid=" << grid_v << "x" << grid_k << " skipped=" << skipped
      << " verdict=" << (pass ? "pass" : "fail");
  if (counterexample) out << " counterexample_v=" << counterexample->v << " counterexample_k=" << counterexample->k;
  return out.str();
}

IdentityReport verify_identity(const IdentityCase& c) {
  IdentityReport report;
  report.family = c.family;
  report.s = c.s;
  report.param = c.param;
  report.part = c.part;
  report.degree = cleared_degree(c.lhs, c.rhs);

  const std::int64_t nv = std::max(c.min_grid_v, report.degree.in_v + 1);
  const std::int64_t nk = std::max(c.min_grid_k, report.degree.in_k + 1);
  const auto forms = denominator_forms(c.lhs, c.rhs);

  std::vector<std::int64_t> vs;
  for (std::int64_t v = c.v0; static_cast<std::int64_t>(vs.size()) < nv; ++v) {
    const bool bad = std::any_of(forms.begin(), forms.end(), [&](const LinearForm& f) {
      return f.ck == 0 && f(v, 0) == 0;
    });
    if (bad) {
      ++report.skipped;
    } else {
      vs.push_back(v);
    }
  }
  std::vector<std::int64_t> ks;
  for (std::int64_t k = c.k0; static_cast<std::int64_t>(ks.size()) < nk; ++k) {
    const bool bad = std::any_of(forms.begin(), forms.end(), [&](const LinearForm& f) {
      if (f.ck == 0) return false;
      return std::any_of(vs.begin(), vs.end(), [&](std::int64_t v) { return f(v, k) == 0; });
    });
    if (bad) {
      ++report.skipped;
    } else {
      ks.push_back(k);
    }
  }
  report.grid_v = static_cast<std::int64_t>(vs.size());
  report.grid_k = static_cast<std::int64_t>(ks.size());
  if (report.grid_v <= report.degree.in_v || report.grid_k <= report.degree.in_k) {
    throw std::logic_error("identity grid does not exceed the degree bound");
  }

  report.pass = true;
  for (std::int64_t v : vs) {
    for (std::int64_t k : ks) {
      const ExactRational symbolic_l = c.lhs(v, k);
      const ExactRational symbolic_r = c.rhs(v, k);
      bool ok = symbolic_l == symbolic_r;
      if (c.lhs_eval && c.lhs_eval(v, k) != symbolic_l) ok = false;
      if (c.rhs_eval && c.rhs_eval(v, k) != symbolic_r) ok = false;
      if (!ok) {
        report.pass = false;
        report.counterexample = GridPoint{v, k};
        return report;
      }
    }
  }
  return report;
}

Term lambda_term(std::int64_t s, std::int64_t i) {
  Term t(ExactRational(1) / fact(s));
  t.falling(0, K, 0, s + i);
  t.falling(V, 0, -s, i, -1);
  return t;
}

Term alpha_term(std::int64_t s, std::int64_t i) {
  Term t(ExactRational(binomial(ExactRational(static_cast<long>(s)), static_cast<std::uint64_t>(i))));
  t.rising(0, K, -s, i);
  t.rising(0, K, -s + 1, i);
  t.rising(V, 0, -2 * s + 1, i, -1);
  return t;
}

Term h_term(std::int64_t s, std::int64_t i) {
  Term t;
  t.rising(0, K, -s, i + 1);
  t.rising(V, 0, -2 * s + 1, i, -1);
  return t;
}

IdentityCase logopedia_case(std::int64_t s, Mutation m) {
  if (s < 2) throw DomainError("two-variable identity requires s >= 2");
  IdentityCase c;
  c.family = IdentityFamily::kLogopedia;
  c.s = s;
  c.lhs = single(Term(ExactRational(1)));
  for (std::int64_t i = 0; i <= s - 1; ++i) {
    for (std::int64_t j = i + 1; j <= s - 1; ++j) {
      Term t(sign(i + j) * fact(j - i - 1) / (fact(s - i - 1) * fact(j - 1)));
      t.binomial(0, K, -j - 1, s - j - 1);
      t.binomial(0, K, -i - 1, j - i - 1);
      t.binomial(V, 0, -s, i);
      t.rising(V, 0, -2 * s + 1, s - i - 1);
      t.falling(0, K, -1, i);
      c.rhs += std::move(t);
    }
  }
  for (std::int64_t i = 0; i <= s - 1; ++i) {
    for (std::int64_t j = 1; j <= i; ++j) {
      Term t(sign(i + j) * fact(i - j) / (fact(i) * fact(s - j - 1)));
      t.binomial(0, K, -j - 1, i - j);
      t.binomial(0, K, -1, j - 1);
      t.binomial(V, 0, -s - i - 1, s - i - 1);
      t.falling(V, 0, -s, i);
      t.rising(0, K, -s + 1, s - i - 1);
      c.rhs += std::move(t);
    }
  }
  if (m.enabled) mutate(c.rhs);
  c.min_grid_v = s + 1;
  c.min_grid_k = s;
  c.v0 = default_v0(s);
  c.k0 = default_k0(s);
  return c;
}

IdentityCase cetology_case(std::int64_t s, std::int64_t i, Mutation m) {
  if (s < 2 || i < 1 || i > s) throw DomainError("one-variable identity requires s >= 2, 1 <= i <= s");
  IdentityCase c;
  c.family = IdentityFamily::kCetology;
  c.s = s;
  c.param = i;
  c.lhs = single(Term(ExactRational(1)));
  for (std::int64_t j = 0; j <= s - i - 1; ++j) {
    Term t(sign(s - j) * fact(s - i - j) / fact(s - j - 1));
    t.binomial(0, K, 0, j);
    t.binomial(0, K, -j - 1, s - i - j - 1);
    t.rising(0, K, -s + 1, i - 1);
    c.rhs += std::move(t);
  }
  for (std::int64_t j = s - i + 1; j <= s - 1; ++j) {
    Term t(sign(s - j - 1) * fact(i + j - s) / fact(j));
    t.binomial(0, K, -j - 1, s - j - 1);
    t.binomial(0, K, -s + i - 1, i + j - s - 1);
    t.falling(0, K, 0, s - i);
    c.rhs += std::move(t);
  }
  if (m.enabled) mutate(c.rhs);
  c.min_grid_v = 1;
  c.min_grid_k = s - i + 2;
  c.v0 = default_v0(s);
  c.k0 = default_k0(s);
  return c;
}

std::vector<IdentityCase> mangerite_unfarrowed_cases(std::int64_t s, std::int64_t i, Mutation m) {
  if (s < 1 || i < 0 || i > s - 1) throw DomainError("lambda/alpha quotient identities require 0 <= i <= s-1");
  std::vector<IdentityCase> out(2);
  for (int part = 0; part < 2; ++part) {
    IdentityCase& c = out[static_cast<std::size_t>(part)];
    c.family = IdentityFamily::kMangeriteUnfarrowed;
    c.s = s;
    c.param = i;
    c.part = part;
    c.v0 = default_v0(s);
    c.k0 = default_k0(s);
  }
  {
    Term lhs = lambda_term(s, i + 1);
    lhs.times(h_term(s, s).inverse()).scale(fact(s));
    Term rhs;
    rhs.rising(V, 0, -2 * s + 1, s - i - 1);
    rhs.falling(0, K, -s - 1, i);
    out[0].lhs = single(std::move(lhs));
    out[0].rhs = single(std::move(rhs));
  }
  {
    Term lhs = alpha_term(s, s - i);
    lhs.times(h_term(s, s).inverse());
    lhs.binomial(0, K, 0, i);
    lhs.scale(fact(i) * fact(i) * fact(s - i) / fact(s));
    Term rhs;
    rhs.falling(V, 0, -s, i);
    rhs.rising(0, K, -s + 1, s - i - 1);
    out[1].lhs = single(std::move(lhs));
    out[1].rhs = single(std::move(rhs));
  }
  if (m.enabled) {
    for (auto& c : out) mutate(c.rhs);
  }
  return out;
}

std::vector<IdentityCase> spangly_polytonalism_cases(std::int64_t s, std::int64_t i, Mutation m) {
  if (s < 1 || i < 1 || i > s) throw DomainError("h quotient identities require 1 <= i <= s");
  std::vector<IdentityCase> out(2);
  for (int part = 0; part < 2; ++part) {
    IdentityCase& c = out[static_cast<std::size_t>(part)];
    c.family = IdentityFamily::kSpanglyPolytonalism;
    c.s = s;
    c.param = i;
    c.part = part;
    c.v0 = default_v0(s);
    c.k0 = default_k0(s);
  }
  {
    Term lhs = alpha_term(s, i);
    lhs.times(h_term(s, i).inverse());
    lhs.scale(fact(i) * fact(s - i) / fact(s));
    Term rhs;
    rhs.rising(0, K, -s + 1, i - 1);
    out[0].lhs = single(std::move(lhs));
    out[0].rhs = single(std::move(rhs));
  }
  {
    Term lhs = h_term(s, s);
    lhs.times(h_term(s, i).inverse());
    lhs.binomial(V, 0, -s, s - i);
    lhs.scale(fact(s - i));
    Term rhs;
    rhs.falling(0, K, 0, s - i);
    out[1].lhs = single(std::move(lhs));
    out[1].rhs = single(std::move(rhs));
  }
  if (m.enabled) {
    for (auto& c : out) mutate(c.rhs);
  }
  return out;
}

IdentityCase dixon_case(std::int64_t s, std::int64_t r, Mutation m) {
  if (r < 0 || r % 2 != 0 || r > s) throw DomainError("Dixon specialization requires even r <= s");
  IdentityCase c;
  c.family = IdentityFamily::kDixonSpecialization;
  c.s = s;
  c.param = r;
  for (std::int64_t i = 0; i <= r; ++i) {
    Term t(sign(i) * ExactRational(binomial(ExactRational(static_cast<long>(r)), static_cast<std::uint64_t>(i))));
    t.rising(0, K, -r + 1, i);       // (k-r+1)^{rising i}
    t.rising(-V, 0, s, i);           // (-v+s)^{rising i}
    t.rising(0, -K, 0, i, -1);       // (-k)^{rising i}
    t.rising(V, 0, -s - r + 1, i, -1);  // (v-s-r+1)^{rising i}
    c.lhs += std::move(t);
  }
  const std::int64_t half = r / 2;
  Term rhs(falling_factorial(ExactRational(static_cast<long>(r)), static_cast<std::uint64_t>(half)));
  rhs.rising(V, -K, -s, half);
  rhs.falling(0, K, 0, half, -1);
  rhs.rising(V, 0, -s - r + 1, half, -1);
  c.rhs = single(std::move(rhs));
  if (m.enabled) mutate(c.rhs);
  c.min_grid_v = 2 * r + 2;
  c.min_grid_k = 2 * r + 2;
  c.v0 = default_v0(s);
  c.k0 = default_k0(s);
  return c;
}

IdentityCase closed_form_case(std::int64_t s, std::int64_t r, Mutation m) {
  if (r < 0 || r % 2 != 0 || r > s) throw DomainError("closed form requires even r <= s");
  IdentityCase c;
  c.family = IdentityFamily::kAdministration;
  c.s = s;
  c.param = r;
  for (std::int64_t i = 0; i <= r; ++i) {
    Term t(sign(i) * ExactRational(binomial(ExactRational(static_cast<long>(r)), static_cast<std::uint64_t>(i))));
    t.times(h_term(s, s - r + i));
    t.times(h_term(s, s - i));
    c.lhs += std::move(t);
  }
  ExactRational ratio(closed_form_ratio(r));
  if (m.enabled) ratio += 1;
  const std::int64_t half = r / 2;
  Term g(ratio);
  g.rising(V, -K, -s, half);
  g.rising(0, K, -s, s - half + 1);
  g.rising(0, K, -s, s - r + 1);
  g.rising(V, 0, -2 * s + 1, s, -1);
  g.rising(V, 0, -2 * s + 1, s - half, -1);
  c.rhs = single(std::move(g));
  c.lhs_eval = [s, r](std::int64_t v, std::int64_t k) { return h_sum(s, r, v, k); };
  c.rhs_eval = [s, r, ratio](std::int64_t v, std::int64_t k) -> ExactRational { return ratio * g_closed(s, r, v, k); };
  c.min_grid_v = 4 * s + 2;
  c.min_grid_k = 4 * s + 2;
  c.v0 = default_v0(s);
  c.k0 = default_k0(s);
  return c;
}

IdentityReport verify_two_var_identity(std::int64_t s, Mutation m) {
  return verify_identity(logopedia_case(s, m));
}

IdentityReport verify_one_var_identity(std::int64_t s, std::int64_t i, Mutation m) {
  return verify_identity(cetology_case(s, i, m));
}

std::vector<IdentityReport> verify_quotient_identities_lambda_alpha(std::int64_t s, std::int64_t i,
                                                                    Mutation m) {
  std::vector<IdentityReport> out;
  for (const auto& c : mangerite_unfarrowed_cases(s, i, m)) out.push_back(verify_identity(c));
  return out;
}

std::vector<IdentityReport> verify_quotient_identities_h(std::int64_t s, std::int64_t i, Mutation m) {
  std::vector<IdentityReport> out;
  for (const auto& c : spangly_polytonalism_cases(s, i, m)) out.push_back(verify_identity(c));
  return out;
}

IdentityReport verify_dixon_specialization(std::int64_t s, std::int64_t r, Mutation m) {
  return verify_identity(dixon_case(s, r, m));
}

IdentityReport verify_closed_form(std::int64_t s, std::int64_t r, Mutation m) {
  return verify_identity(closed_form_case(s, r, m));
}

std::vector<IdentityReport> verify_all(std::int64_t s_max, unsigned workers, Mutation m) {
  std::vector<IdentityCase> cases;
  for (std::int64_t s = 0; s <= s_max; ++s) {
    if (s >= 2) {
      cases.push_back(logopedia_case(s, m));
      for (std::int64_t i = 1; i <= s; ++i) cases.push_back(cetology_case(s, i, m));
    }
    if (s >= 1) {
      for (std::int64_t i = 0; i <= s - 1; ++i) {
        for (auto& c : mangerite_unfarrowed_cases(s, i, m)) cases.push_back(std::move(c));
      }
      for (std::int64_t i = 1; i <= s; ++i) {
        for (auto& c : spangly_polytonalism_cases(s, i, m)) cases.push_back(std::move(c));
      }
    }
    for (std::int64_t r = 0; r <= s; r += 2) {
      cases.push_back(dixon_case(s, r, m));
      cases.push_back(closed_form_case(s, r, m));
    }
  }

  std::vector<IdentityReport> reports(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t idx = next++; idx < cases.size(); idx = next++) {
      reports[idx] = verify_identity(cases[idx]);
    }
  };
  workers = std::max(1u, workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return reports;
}

}  // namespace tight
