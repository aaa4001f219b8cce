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

#include "tight/linear_forms.hpp"

#include <algorithm>
#include <numeric>

#include "tight/errors.hpp"

namespace tight {

namespace {

BigInt big(std::int64_t n) { return BigInt(static_cast<long>(n)); }

// Splits cv v + ck k + c0 into scalar * primitive form with positive lead.
std::pair<std::int64_t, LinearForm> normalize(std::int64_t cv, std::int64_t ck, std::int64_t c0) {
  std::int64_t g = std::gcd(std::gcd(cv, ck), c0);
  if (g == 0) return {0, LinearForm{}};
  const std::int64_t lead = cv != 0 ? cv : (ck != 0 ? ck : c0);
  if (lead < 0) g = -g;
  return {g, LinearForm{cv / g, ck / g, c0 / g}};
}

}  // namespace

BigInt LinearForm::operator()(std::int64_t v, std::int64_t k) const {
  return big(cv) * big(v) + big(ck) * big(k) + big(c0);
}

Term& Term::times(std::int64_t cv, std::int64_t ck, std::int64_t c0, int exponent) {
  if (exponent == 0) return *this;
  auto [scalar, form] = normalize(cv, ck, c0);
  if (scalar == 0) {
    if (exponent < 0) throw DomainError("Term: division by the zero form");
    coefficient_ = 0;
    factors_.clear();
    return *this;
  }
  ExactRational sc(big(scalar));
  for (int e = 0; e < std::abs(exponent); ++e) {
    if (exponent > 0) {
      coefficient_ *= sc;
    } else {
      coefficient_ /= sc;
    }
  }
  if (form.is_constant()) return *this;  // form == 1
  int& slot = factors_[form];
  slot += exponent;
  if (slot == 0) factors_.erase(form);
  return *this;
}

Term& Term::times(const Term& other) {
  coefficient_ *= other.coefficient_;
  if (coefficient_ == 0) {
    factors_.clear();
    return *this;
  }
  for (const auto& [form, e] : other.factors_) {
    int& slot = factors_[form];
    slot += e;
    if (slot == 0) factors_.erase(form);
  }
  return *this;
}

Term& Term::scale(const ExactRational& factor) {
  coefficient_ *= factor;
  if (coefficient_ == 0) factors_.clear();
  return *this;
}

Term& Term::rising(std::int64_t cv, std::int64_t ck, std::int64_t c0, std::int64_t n, int sign) {
  for (std::int64_t j = 0; j < n; ++j) times(cv, ck, c0 + j, sign);
  return *this;
}

Term& Term::falling(std::int64_t cv, std::int64_t ck, std::int64_t c0, std::int64_t n, int sign) {
  for (std::int64_t j = 0; j < n; ++j) times(cv, ck, c0 - j, sign);
  return *this;
}

Term& Term::binomial(std::int64_t cv, std::int64_t ck, std::int64_t c0, std::int64_t n) {
  if (n < 0) {
    coefficient_ = 0;
    factors_.clear();
    return *this;
  }
  falling(cv, ck, c0, n);
  return scale(ExactRational(1) / ExactRational(factorial(static_cast<std::uint64_t>(n))));
}

Term Term::inverse() const {
  if (coefficient_ == 0) throw DomainError("Term: inverse of zero");
  Term t(ExactRational(1) / coefficient_);
  for (const auto& [form, e] : factors_) t.factors_[form] = -e;
  return t;
}

ExactRational Term::operator()(std::int64_t v, std::int64_t k) const {
  BigInt num = coefficient_.get_num();
  BigInt den = coefficient_.get_den();
  for (const auto& [form, e] : factors_) {
    const BigInt value = form(v, k);
    if (e < 0 && value == 0) throw DomainError("Term: denominator vanishes at grid point");
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    if (e > 0) {
      num *= power;
    } else {
      den *= power;
    }
  }
  return make_rational(num, den);
}

bool Term::singular_at(std::int64_t v, std::int64_t k) const {
  return std::any_of(factors_.begin(), factors_.end(), [&](const auto& f) {
    return f.second < 0 && f.first(v, k) == 0;
  });
}

std::int64_t Term::numerator_degree_v() const {
  std::int64_t d = 0;
  for (const auto& [form, e] : factors_) {
    if (e > 0 && form.cv != 0) d += e;
  }
  return d;
}

std::int64_t Term::numerator_degree_k() const {
  std::int64_t d = 0;
  for (const auto& [form, e] : factors_) {
    if (e > 0 && form.ck != 0) d += e;
  }
  return d;
}

Expr& Expr::operator+=(Term t) {
  if (!t.is_zero()) terms.push_back(std::move(t));
  return *this;
}

ExactRational Expr::operator()(std::int64_t v, std::int64_t k) const {
  ExactRational acc = 0;
  for (const auto& t : terms) acc += t(v, k);
  return acc;
}

bool Expr::singular_at(std::int64_t v, std::int64_t k) const {
  return std::any_of(terms.begin(), terms.end(),
                     [&](const Term& t) { return t.singular_at(v, k); });
}

ClearedDegree cleared_degree(const Expr& lhs, const Expr& rhs) {
  // lcm of denominators: per canonical form, the largest denominator power.
  std::map<LinearForm, int> lcm;
  auto collect = [&](const Expr& e) {
    for (const auto& t : e.terms) {
      for (const auto& [form, exp] : t.factors()) {
        if (exp < 0) lcm[form] = std::max(lcm[form], -exp);
      }
    }
  };
  collect(lhs);
  collect(rhs);

  ClearedDegree out;
  auto visit = [&](const Expr& e) {
    for (const auto& t : e.terms) {
      std::int64_t dv = 0;
      std::int64_t dk = 0;
      for (const auto& [form, mult] : lcm) {
        auto it = t.factors().find(form);
        const int own = (it != t.factors().end() && it->second < 0) ? -it->second : 0;
        const int remaining = mult - own;
        if (form.cv != 0) dv += remaining;
        if (form.ck != 0) dk += remaining;
      }
      out.in_v = std::max(out.in_v, dv + t.numerator_degree_v());
      out.in_k = std::max(out.in_k, dk + t.numerator_degree_k());
    }
  };
  visit(lhs);
  visit(rhs);
  return out;
}

std::vector<LinearForm> denominator_forms(const Expr& lhs, const Expr& rhs) {
  std::vector<LinearForm> out;
  for (const Expr* e : {&lhs, &rhs}) {
    for (const auto& t : e->terms) {
      for (const auto& [form, exp] : t.factors()) {
        if (exp < 0) out.push_back(form);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tight
