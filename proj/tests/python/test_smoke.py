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

from fractions import Fraction
from math import comb, factorial

import pytest

td = pytest.importorskip("tightdesign")


def rising(x, n):
    out = 1
    for j in range(n):
        out *= x + j
    return out


def test_witt_lambda_and_roots():
    assert td.lambda_si(2, 23, 7, 2) == 1
    assert td.lambda_si(2, 23, 16, 2) == 52
    assert td.intersection_numbers(2, 23, 7) == [1, 3]
    assert td.intersection_numbers(2, 24, 8) is None
    ok, lines = td.run_witt()
    assert ok and len(lines) == 8


def test_alpha_matches_python_fractions():
    s, x, y = 4, 30, 40
    for i in range(1, s + 1):
        want = Fraction(comb(s, i) * rising(x, i) * rising(x + 1, i), rising(y, i))
        assert td.alpha_xy(s, x, y, i) == want


def test_closed_form_point():
    assert td.h_sum(2, 2, 23, 7) == Fraction(1, 2)
    assert 2 * td.g_closed(2, 2, 23, 7) == Fraction(1, 2)
    for s, r, v, k in [(4, 2, 60, 25), (6, 4, 90, 40)]:
        assert td.h_sum(s, r, v, k) == Fraction(factorial(r), factorial(r // 2)) * td.g_closed(s, r, v, k)


def test_identities_and_mutation():
    reports = td.verify_identities(4)
    assert reports and all(ok for ok, _ in reports)
    assert not any(ok for ok, _ in td.verify_identities(3, mutate=True))


def test_primes():
    assert td.prime_pi(10**6) == 78498
    assert td.rho(5, 10**6) == 23
    assert td.rho(11, 10**6) == 113
    assert td.is_prime(1_294_268_491)
    gaps = td.maximal_gaps(1000)
    assert gaps[:4] == [(1, 2), (2, 3), (4, 7), (6, 23)]
    with pytest.raises(LookupError):
        td.rho(100, 1000)


def test_bounds():
    rep = td.v_upper(288, 288, 288, 3)
    assert rep["feasible"] and rep["psi"] > 0
    assert float(rep["exp_upper"]) < 1e9
    best = td.best_bound(10, 10)
    assert best["b"] == "1" and int(best["v_bound"]) > 10**9
    assert td.check_premeditation(627)
    with pytest.raises(ValueError):
        td.v_upper(10, 5, 1)


def test_search_agrees_with_window_oracle():
    hits = td.search(2, 2, 100, chunk_size=17, i_max=2)
    assert hits == td.verify_window(2, 1, 100, 2)
    assert (2, 14, 20) in hits
    assert td.search(10, 287, 5000) == []


def test_pipeline_records(tmp_path):
    certs = td.run_pipeline(627, 630)
    assert all(ok for ok, _ in certs)
    assert certs[0][1].startswith("certificate s=627 case=CASE1_ANALYTIC")
    with pytest.raises(ValueError):
        td.run_pipeline(5, 20)


def test_window_errors():
    with pytest.raises(ValueError):
        td.lambda_si(2, 23, 4, 1)
