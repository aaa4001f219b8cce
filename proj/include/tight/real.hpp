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

// Minimal RAII handle over an MPFR value. Rounding is always explicit at the
// call site; nothing here picks a default direction.

#include <mpfr.h>

#include <string>

namespace tight {

class Real {
 public:
  explicit Real(mpfr_prec_t precision) { mpfr_init2(value_, precision); mpfr_set_zero(value_, 1); }
  Real(const Real& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~Real() { mpfr_clear(value_); }

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(value_, rnd); }

  /// Fixed-point decimal rendering with the given number of fractional
  /// digits, rounded in direction rnd.
  std::string to_string(int digits, mpfr_rnd_t rnd) const {
    char* buf = nullptr;
    const char fmt_up[] = "%.*RUf";
    const char fmt_down[] = "%.*RDf";
    const char fmt_near[] = "%.*RNf";
    const char* fmt = rnd == MPFR_RNDU ? fmt_up : rnd == MPFR_RNDD ? fmt_down : fmt_near;
    mpfr_asprintf(&buf, fmt, digits, value_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

 private:
  mpfr_t value_;
};

}  // namespace tight
