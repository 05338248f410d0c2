"""Symbolic factorizations of the point-count zeta functions.

The local zeta function of the n-point counting problem is a ratio of
degree-one factors (1 - q^e t); the Hasse-Weil function is the matching
product of shifted Riemann zeta values.  Both are represented purely as
exponent multisets (sorted tuples) -- nothing is evaluated numerically,
because the verifiable content is exactly the factor structure:

  per odd divisor d of n, with r = n/d - (d+1)/2,
    numerator exponents   {n + r, n - r}
    denominator exponents {n + r + 1, n - r - 1}

Each multiset has 2 * (number of odd divisors) elements, all in [0, 2n],
symmetric about n; the symmetry is the functional equation s -> 2n - s.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .divisors import odd_divisors, r_nd
from .hilbert import cn_via_coeff_formula


@dataclass(frozen=True)
class ZetaFactorization:
    """Local zeta function as exponent multisets: e in ``numerator`` stands
    for a factor (1 - q^e t), likewise for ``denominator``."""

    n: int
    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def cancelled(self) -> ZetaFactorization:
        """Remove factors common to numerator and denominator."""
        num, den = Counter(self.numerator), Counter(self.denominator)
        common = num & den
        return ZetaFactorization(
            self.n,
            tuple(sorted((num - common).elements())),
            tuple(sorted((den - common).elements())),
        )

    def to_json(self) -> dict:
        return {"n": self.n, "num": list(self.numerator),
                "den": list(self.denominator)}


def zeta_from_json(obj: dict) -> ZetaFactorization:
    return ZetaFactorization(int(obj["n"]), tuple(obj["num"]), tuple(obj["den"]))


@dataclass(frozen=True)
class HasseWeilFactorization:
    """Hasse-Weil zeta function of the same count: shift s0 in
    ``numerator_shifts`` stands for a factor zeta(s - s0)."""

    n: int
    numerator_shifts: tuple[int, ...]
    denominator_shifts: tuple[int, ...]


def local_zeta_factors(n: int) -> ZetaFactorization:
    """Exponent multisets of the local zeta function, sorted ascending.

    >>> z = local_zeta_factors(4)
    >>> z.numerator, z.denominator
    ((1, 7), (0, 8))
    """
    if n < 1:
        raise ValueError("n must be positive")
    num: list[int] = []
    den: list[int] = []
    for d in odd_divisors(n):
        r = r_nd(n, d)
        num += [n + r, n - r]
        den += [n + r + 1, n - r - 1]
    return ZetaFactorization(n, tuple(sorted(num)), tuple(sorted(den)))


def hasse_weil_factors(n: int) -> HasseWeilFactorization:
    """Shift multisets of the Hasse-Weil product; by construction the same
    integers as the local exponents."""
    z = local_zeta_factors(n)
    return HasseWeilFactorization(n, z.numerator, z.denominator)


@dataclass(frozen=True)
class ZetaVerdict:
    n: int
    ok: bool
    detail: str = ""


def check_functional_equation(n: int) -> ZetaVerdict:
    """The map s0 -> 2n - s0 must send each shift multiset to itself; this
    is the symbolic form of the functional equation."""
    hw = hasse_weil_factors(n)
    num_ok = sorted(2 * n - s for s in hw.numerator_shifts) == list(hw.numerator_shifts)
    den_ok = sorted(2 * n - s for s in hw.denominator_shifts) == list(hw.denominator_shifts)
    ok = num_ok and den_ok
    return ZetaVerdict(n, ok, "" if ok else
                       f"num_ok={num_ok} den_ok={den_ok}")


def zeta_consistency_with_cn(n: int) -> ZetaVerdict:
    """Rebuild the exponent multisets from the coefficient formula for the
    full count and compare with the divisor-built factorization.

    A coefficient c at q^i of the centered count contributes the exponent
    n + i with multiplicity |c|, to the denominator when c > 0 and to the
    numerator when c < 0; comparison is after cancellation on both sides.
    """
    cn = cn_via_coeff_formula(n)
    num: list[int] = []
    den: list[int] = []
    for i, c in cn.centered.support():
        target, mult = (den, c) if c > 0 else (num, -c)
        target += [n + i] * mult
    rebuilt = ZetaFactorization(n, tuple(sorted(num)), tuple(sorted(den)))
    direct = local_zeta_factors(n).cancelled()
    ok = rebuilt.cancelled() == direct
    return ZetaVerdict(n, ok, "" if ok else
                       f"rebuilt={rebuilt.cancelled()} direct={direct}")


# -- rendering ------------------------------------------------------------------

def _factor_str(e: int, mult: int) -> str:
    base = "(1-t)" if e == 0 else "(1-q*t)" if e == 1 else f"(1-q^{e}*t)"
    return base if mult == 1 else f"{base}^{mult}"


def format_local_zeta(z: ZetaFactorization) -> str:
    """Product string in the usual display style, e.g. for n = 4:
    (1-q*t)(1-q^7*t) / (1-t)(1-q^8*t)."""
    num = "".join(_factor_str(e, m) for e, m in sorted(Counter(z.numerator).items()))
    den = "".join(_factor_str(e, m) for e, m in sorted(Counter(z.denominator).items()))
    return f"{num} / {den}"


def _zeta_shift_str(s: int, mult: int) -> str:
    base = "zeta(s)" if s == 0 else f"zeta(s-{s})"
    return base if mult == 1 else f"{base}^{mult}"


def format_hasse_weil(hw: HasseWeilFactorization) -> str:
    """Shifted-zeta product string, e.g. zeta(s-1)zeta(s-7) / zeta(s)zeta(s-8)."""
    num = "".join(_zeta_shift_str(s, m)
                  for s, m in sorted(Counter(hw.numerator_shifts).items()))
    den = "".join(_zeta_shift_str(s, m)
                  for s, m in sorted(Counter(hw.denominator_shifts).items()))
    return f"{num} / {den}"
