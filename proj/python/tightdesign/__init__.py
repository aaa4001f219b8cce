# Copyright 2026 The tightdesign Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python front end for the tightdesign C++ core.

Exact values come back as ``fractions.Fraction``; everything else is a plain
Python object. Long-running calls release the GIL.
"""

from fractions import Fraction

from . import _core
from ._core import (
    DomainError,
    FormatError,
    NotFoundBelowLimit,
    ResourceError,
    WindowError,
    best_bound,
    check_premeditation,
    intersection_numbers,
    is_prime,
    maximal_gaps,
    prime_pi,
    rho,
    run_pipeline,
    run_witt,
    search,
    v_upper,
    verify_identities,
    verify_window,
)

__all__ = [
    "DomainError",
    "FormatError",
    "NotFoundBelowLimit",
    "ResourceError",
    "WindowError",
    "alpha_si",
    "alpha_xy",
    "best_bound",
    "check_premeditation",
    "g_closed",
    "h_si",
    "h_sum",
    "intersection_numbers",
    "is_prime",
    "lambda_si",
    "maximal_gaps",
    "prime_pi",
    "rho",
    "run_pipeline",
    "run_witt",
    "search",
    "v_upper",
    "verify_identities",
    "verify_window",
]


def _frac(pair):
    num, den = pair
    return Fraction(int(num), int(den))


def lambda_si(s, v, k, i):
    return _frac(_core.lambda_si(s, v, k, i))


def alpha_si(s, v, k, i):
    return _frac(_core.alpha_si(s, v, k, i))


def h_si(s, v, k, i):
    return _frac(_core.h_si(s, v, k, i))


def alpha_xy(s, x, y, i):
    return _frac(_core.alpha_xy(s, x, y, i))


def h_sum(s, r, v, k):
    return _frac(_core.h_sum(s, r, v, k))


def g_closed(s, r, v, k):
    return _frac(_core.g_closed(s, r, v, k))
