"""Symbolic zeta factorizations."""
from __future__ import annotations

from torusideals.divisors import odd_divisors
from torusideals.zeta import (
    ZetaFactorization,
    check_functional_equation,
    format_hasse_weil,
    format_local_zeta,
    hasse_weil_factors,
    local_zeta_factors,
    zeta_consistency_with_cn,
    zeta_from_json,
)


def test_reference_factorizations():
    z = local_zeta_factors(4)
    assert z.numerator == (1, 7) and z.denominator == (0, 8)
    z = local_zeta_factors(3)
    assert z.numerator == (1, 2, 4, 5) and z.denominator == (0, 3, 3, 6)
    z = local_zeta_factors(1)
    assert z.numerator == (1, 1) and z.denominator == (0, 2)
    z = local_zeta_factors(2)
    assert z.numerator == (1, 3) and z.denominator == (0, 4)


def test_double_factor_for_three():
    assert local_zeta_factors(3).denominator.count(3) == 2


def test_hasse_weil_shifts():
    hw = hasse_weil_factors(4)
    assert hw.numerator_shifts == (1, 7)
    assert hw.denominator_shifts == (0, 8)
    hw = hasse_weil_factors(2)
    assert (hw.numerator_shifts, hw.denominator_shifts) == ((1, 3), (0, 4))


def test_factor_count_law():
    for n in range(1, 200):
        z = local_zeta_factors(n)
        count = 2 * len(odd_divisors(n))
        assert len(z.numerator) == len(z.denominator) == count
        assert all(0 <= e <= 2 * n for e in z.numerator + z.denominator)


def test_functional_equation():
    assert check_functional_equation(4).ok
    assert check_functional_equation(3).ok
    assert check_functional_equation(12).ok
    for n in range(1, 300):
        assert check_functional_equation(n).ok


def test_consistency_with_coefficients():
    assert zeta_consistency_with_cn(3).ok
    assert zeta_consistency_with_cn(4).ok
    for n in range(1, 200):
        assert zeta_consistency_with_cn(n).ok


def test_cancellation():
    z = ZetaFactorization(1, (5, 3, 3), (3, 2))
    c = z.cancelled()
    assert c.numerator == (3, 5) and c.denominator == (2,)


def test_json_round_trip():
    z = local_zeta_factors(6)
    assert zeta_from_json(z.to_json()) == z


def test_rendering():
    assert format_local_zeta(local_zeta_factors(4)) == \
        "(1-q*t)(1-q^7*t) / (1-t)(1-q^8*t)"
    assert format_local_zeta(local_zeta_factors(3)) == \
        "(1-q*t)(1-q^2*t)(1-q^4*t)(1-q^5*t) / (1-t)(1-q^3*t)^2(1-q^6*t)"
    assert format_hasse_weil(hasse_weil_factors(4)) == \
        "zeta(s-1)zeta(s-7) / zeta(s)zeta(s-8)"
