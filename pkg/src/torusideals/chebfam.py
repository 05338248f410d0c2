"""The monic Chebyshev family and its running-sum family.

``tcheb(k)`` is the monic degree-k polynomial V_k with
V_k(q + q^{-1}) = q^k + q^{-k} (the Vieta-Lucas normalization, 2*T_k(X/2)
in terms of the classical first-kind Chebyshev T_k; only the monic variant
is implemented).  ``fpoly(k)`` is the running sum 1 + V_1 + ... + V_k,
monic of degree k.

Each family has at least two independent construction routes (three-term
recurrence, binomial closed form, matrix trace) so they can cross-validate
one another; the recurrence route is the cached hot path.
"""
from __future__ import annotations

import threading
from math import comb

from .intpoly import ONE, TWO, X, IntPoly


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


class ChebCache:
    """Append-only store of both families, grown on demand.

    Extension is serialized behind a lock; reads of already-built entries
    need no synchronization because the lists only ever grow.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._t: list[IntPoly] = [TWO, X]
        self._f: list[IntPoly] = [ONE]
        self._fvals: dict[int, list[int]] = {}

    def _ensure(self, k: int) -> None:
        if k < len(self._t) and k < len(self._f):
            return
        with self._lock:
            t, f = self._t, self._f
            while len(t) <= k:
                t.append(X * t[-1] - t[-2])
            while len(f) <= k:
                f.append(f[-1] + t[len(f)])

    def tcheb(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("tcheb index must be non-negative")
        self._ensure(k)
        return self._t[k]

    def fpoly(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("fpoly index must be non-negative")
        self._ensure(k)
        return self._f[k]

    def fpoly_value(self, k: int, x: int) -> int:
        """F_k evaluated at the integer x, via the same three-term recurrence
        run on values (F_{k+1}(x) = x*F_k(x) - F_{k-1}(x)); cached per x."""
        if k < 0:
            raise ValueError("fpoly index must be non-negative")
        vals = self._fvals.get(x)
        if vals is None or len(vals) <= k:
            with self._lock:
                vals = self._fvals.setdefault(x, [1, x + 1])
                while len(vals) <= k:
                    vals.append(x * vals[-1] - vals[-2])
        return vals[k]


_CACHE = ChebCache()


def tcheb(k: int) -> IntPoly:
    """Monic Chebyshev polynomial of degree k, by the recurrence
    V_{k+1} = X V_k - V_{k-1} with V_0 = 2, V_1 = X.

    >>> print(tcheb(4))
    X^4 - 4*X^2 + 2
    """
    return _CACHE.tcheb(k)


def fpoly(k: int) -> IntPoly:
    """The running sum 1 + V_1 + ... + V_k; monic of degree k.

    >>> print(fpoly(2))
    X^2 + X - 1
    """
    return _CACHE.fpoly(k)


def fpoly_value(k: int, x: int) -> int:
    """Integer value of fpoly(k) at x, by the value recurrence (no polynomial
    arithmetic); the cheap route when only evaluations are needed."""
    return _CACHE.fpoly_value(k, x)


def tcheb_closed(k: int) -> IntPoly:
    """Closed form of tcheb(k) for k >= 1: the coefficient of X^{k-2m} is
    (-1)^m * (C(k-m, m) + C(k-m-1, m-1)), i.e. (-1)^m * k/(k-m) * C(k-m, m)."""
    if k < 1:
        raise ValueError("closed form is stated for k >= 1")
    out = [0] * (k + 1)
    for m in range(k // 2 + 1):
        c = _binom(k - m, m) + _binom(k - m - 1, m - 1)
        out[k - 2 * m] = -c if m & 1 else c
    return IntPoly(tuple(out))


def tcheb_trace(k: int) -> IntPoly:
    """tcheb(k) as the trace of the k-th power of [[X, -1], [1, 0]], computed
    by binary matrix exponentiation over the polynomial ring."""
    if k < 0:
        raise ValueError("tcheb index must be non-negative")
    a, b, c, d = ONE, IntPoly(()), IntPoly(()), ONE  # identity
    pa, pb, pc, pd = X, IntPoly((-1,)), ONE, IntPoly(())
    while k:
        if k & 1:
            a, b, c, d = (a * pa + b * pc, a * pb + b * pd,
                          c * pa + d * pc, c * pb + d * pd)
        k >>= 1
        if k:
            pa, pb, pc, pd = (pa * pa + pb * pc, pa * pb + pb * pd,
                              pc * pa + pd * pc, pc * pb + pd * pd)
    return a + d


def fpoly_closed(k: int) -> IntPoly:
    """Closed form of fpoly(k) for k >= 1 as two interleaved binomial sums:
    sum (-1)^m C(k-m, m) X^{k-2m}  +  sum (-1)^m C(k-m-1, m) X^{k-2m-1}."""
    if k < 1:
        raise ValueError("closed form is stated for k >= 1")
    out = [0] * (k + 1)
    for m in range(k // 2 + 1):
        c = _binom(k - m, m)
        out[k - 2 * m] += -c if m & 1 else c
    for m in range((k - 1) // 2 + 1):
        c = _binom(k - m - 1, m)
        out[k - 2 * m - 1] += -c if m & 1 else c
    return IntPoly(tuple(out))


def fpoly_constant_term(k: int) -> int:
    """The constant term of fpoly(k), which is (-1)^(k//2); checked against
    the cached polynomial before returning."""
    if k < 0:
        raise ValueError("fpoly index must be non-negative")
    expected = -1 if (k // 2) & 1 else 1
    actual = fpoly(k).coeff(0)
    if actual != expected:
        raise RuntimeError(
            f"constant-term law broken at k={k}: {actual} != {expected}")
    return expected
