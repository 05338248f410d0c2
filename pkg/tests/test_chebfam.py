"""Both polynomial families against frozen tables and each other."""
from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from refdata import F_TABLE, TCHEB_TABLE
from torusideals.chebfam import (
    ChebCache,
    fpoly,
    fpoly_closed,
    fpoly_constant_term,
    fpoly_value,
    tcheb,
    tcheb_closed,
    tcheb_trace,
)
from torusideals.intpoly import TWO, X, monomial


@pytest.mark.parametrize("k,coeffs", sorted(TCHEB_TABLE.items()))
def test_tcheb_reference_rows(k, coeffs):
    assert tcheb(k).coeffs == coeffs


@pytest.mark.parametrize("k,coeffs", sorted(F_TABLE.items()))
def test_fpoly_reference_rows(k, coeffs):
    assert fpoly(k).coeffs == coeffs


def test_monic_of_degree_k():
    for k in range(1, 40):
        assert tcheb(k).is_monic() and tcheb(k).degree == k
        assert fpoly(k).is_monic() and fpoly(k).degree == k
    assert fpoly(0).is_monic() and fpoly(0).degree == 0


def test_three_route_agreement():
    for k in range(66):
        t = tcheb(k)
        assert tcheb_trace(k) == t
        if k >= 1:
            assert tcheb_closed(k) == t
            assert fpoly_closed(k) == fpoly(k)


def test_trace_base_cases():
    assert tcheb_trace(0) == TWO
    assert tcheb_trace(1) == X
    assert tcheb_trace(10).coeffs == TCHEB_TABLE[10]


def test_closed_forms_reject_zero():
    with pytest.raises(ValueError):
        tcheb_closed(0)
    with pytest.raises(ValueError):
        fpoly_closed(0)
    with pytest.raises(ValueError):
        tcheb(-1)


def test_substitution_identity():
    for k in range(40):
        expected = monomial(k) + monomial(-k) if k else monomial(0, 2)
        assert tcheb(k).eval_q_plus_qinv() == expected


def test_f_recurrence():
    for k in range(1, 66):
        assert fpoly(k + 1) == X * fpoly(k) - fpoly(k - 1)


def test_difference_identity():
    for r in range(66):
        assert tcheb(r + 1) - tcheb(r) == (X - TWO) * fpoly(r)


def test_constant_term():
    assert fpoly_constant_term(0) == 1
    assert fpoly_constant_term(2) == -1
    assert fpoly_constant_term(11) == -1
    for k in range(50):
        assert fpoly_constant_term(k) == (-1) ** (k // 2)


def test_leading_coefficients():
    for k in range(5, 50):
        f = fpoly(k)
        assert f.coeff(k) == 1
        assert f.coeff(k - 1) == 1
        assert f.coeff(k - 2) == -(k - 1)
        assert f.coeff(k - 3) == -(k - 2)
        assert f.coeff(k - 4) == (k - 2) * (k - 3) // 2
        assert f.coeff(k - 5) == (k - 3) * (k - 4) // 2


@given(st.integers(0, 120), st.integers(-8, 8))
def test_value_recurrence_matches_polynomial(k, x):
    assert fpoly_value(k, x) == fpoly(k).eval_int(x)


def test_fresh_cache_is_consistent():
    cache = ChebCache()
    assert cache.tcheb(7).coeffs == TCHEB_TABLE[7]
    assert cache.fpoly(9).coeffs == F_TABLE[9]
    assert cache.fpoly_value(14, 3) == 1149851


def test_cache_concurrent_extension():
    # many threads growing one fresh cache must agree with a serial build
    import threading

    cache = ChebCache()
    results: dict[int, object] = {}

    def worker(k0):
        for k in range(k0, 120, 8):
            results[k] = (cache.tcheb(k), cache.fpoly(k),
                          cache.fpoly_value(k, 3))

    threads = [threading.Thread(target=worker, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for k in range(120):
        assert results[k] == (tcheb(k), fpoly(k), fpoly_value(k, 3)), k
