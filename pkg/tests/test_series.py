"""Truncated series arithmetic and the generating-function expansions."""
from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from torusideals.chebfam import fpoly, tcheb
from torusideals.hilbert import pg_via_interval
from torusideals.intpoly import IntPoly, ONE, TWO, X, ZERO
from torusideals.series import (
    TruncatedSeries,
    expand_f_gf,
    expand_pg_product,
    expand_tcheb_gf,
    pg_from_series,
    series_from_terms,
    series_inverse,
    series_mul,
    series_one,
)


def poly(*cs: int) -> IntPoly:
    return IntPoly(tuple(cs))


class TestSeriesArithmetic:
    def test_mul_examples(self):
        one_plus_t = series_from_terms(2, {0: ONE, 1: ONE})
        one_minus_t = series_from_terms(2, {0: ONE, 1: -ONE})
        assert series_mul(one_plus_t, one_minus_t) == \
            series_from_terms(2, {0: ONE, 2: -ONE})
        a = series_from_terms(3, {0: poly(5), 2: X, 3: poly(-1, 2)})
        assert series_mul(a, series_one(3)) == a
        b = series_from_terms(3, {0: ONE, 1: -X})
        c = series_from_terms(3, {0: ONE, 1: X})
        assert series_mul(b, c) == series_from_terms(3, {0: ONE, 2: -(X * X)})

    def test_mul_truncates(self):
        t = series_from_terms(2, {1: ONE})
        sq = series_mul(t, t)
        assert sq.coeffs == (ZERO, ZERO, ONE)
        assert series_mul(sq, t).coeffs == (ZERO, ZERO, ZERO)

    def test_order_mismatch(self):
        with pytest.raises(ValueError, match="order"):
            series_mul(series_one(3), series_one(4))

    def test_inverse_geometric(self):
        inv = series_inverse(series_from_terms(3, {0: ONE, 1: -ONE}))
        assert inv == series_from_terms(3, {0: ONE, 1: ONE, 2: ONE, 3: ONE})

    def test_inverse_quadratic_denominator(self):
        inv = series_inverse(series_from_terms(2, {0: ONE, 1: -X, 2: ONE}))
        assert inv.coeffs == (ONE, X, X * X - ONE)

    def test_inverse_requires_unit_constant(self):
        with pytest.raises(ValueError, match="constant"):
            series_inverse(series_from_terms(2, {0: TWO}))
        with pytest.raises(ValueError, match="constant"):
            series_inverse(series_from_terms(2, {1: ONE}))

    @given(st.lists(st.lists(st.integers(-9, 9), max_size=3),
                    min_size=1, max_size=5))
    @settings(max_examples=80)
    def test_inverse_property(self, tail):
        coeffs = (ONE,) + tuple(IntPoly(tuple(c)) for c in tail)
        a = TruncatedSeries(len(coeffs) - 1, coeffs)
        assert series_mul(a, series_inverse(a)) == series_one(a.order)

    def test_truncate(self):
        s = series_from_terms(5, {0: ONE, 4: X})
        assert s.truncate(3) == series_from_terms(3, {0: ONE})
        with pytest.raises(ValueError):
            s.truncate(6)


class TestProductExpansion:
    def test_low_order_coefficients(self):
        s = expand_pg_product(6)
        assert s.coeffs[0] == ONE
        assert s.coeffs[1] == X - TWO
        assert s.coeffs[2] == (X - TWO) * (X + ONE)

    def test_pg_extraction(self):
        pgs = pg_from_series(12)
        assert pgs[0] == ONE
        assert pgs[6] == poly(0, 2, 5, -4, -5, 1, 1)
        for n in range(1, 13):
            assert pgs[n - 1] == pg_via_interval(n)

    def test_truncation_stability(self):
        deep = expand_pg_product(24)
        assert deep.truncate(12) == expand_pg_product(12)

    def test_extraction_sweep(self):
        for n, p in enumerate(pg_from_series(50), start=1):
            assert p == pg_via_interval(n)


class TestFamilyGeneratingFunctions:
    def test_f_rows(self):
        s = expand_f_gf(8)
        assert s.coeffs[0] == ONE
        assert s.coeffs[3] == poly(-1, -2, 1, 1)
        for k in range(9):
            assert s.coeffs[k] == fpoly(k)

    def test_tcheb_rows(self):
        s = expand_tcheb_gf(8)
        assert s.coeffs[0] == TWO
        assert s.coeffs[5] == poly(0, 5, 0, -5, 0, 1)
        for k in range(9):
            assert s.coeffs[k] == tcheb(k)

    def test_sweep_to_64(self):
        sf = expand_f_gf(64)
        st_ = expand_tcheb_gf(64)
        for k in range(65):
            assert sf.coeffs[k] == fpoly(k)
            assert st_.coeffs[k] == tcheb(k)

    def test_numerator_identity(self):
        # (1 - t^2)/(1 - Xt + t^2) == (1 - t) * expansion of the f-family
        order = 40
        den = series_from_terms(order, {0: ONE, 1: -X, 2: ONE})
        lhs = series_mul(series_from_terms(order, {0: ONE, 2: -ONE}),
                         series_inverse(den))
        rhs = series_mul(series_from_terms(order, {0: ONE, 1: -ONE}),
                         expand_f_gf(order))
        assert lhs == rhs
