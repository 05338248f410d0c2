"""Truncated formal power series in t whose coefficients are polynomials in X.

This is the independent verification engine: the ideal-count polynomials are
recoverable from the infinite product

    prod_{i>=1} (1 - t^i)^2 / (1 - X t^i + t^{2i})
        = 1 + (X - 2) * sum_{n>=1} G_n(X) t^n,

and the two families from the rational functions (2 - Xt)/(1 - Xt + t^2)
and (1 + t)/(1 - Xt + t^2).  Everything here is plain truncated arithmetic:
exact through t^N, no identities from the other modules.

A series of order N keeps exactly the coefficients of t^0..t^N.  Any factor
(1 - t^i)^2/(1 - X t^i + t^{2i}) with i > N is 1 + O(t^{N+1}), so the
product needs only the factors with i <= N.
"""
from __future__ import annotations

from dataclasses import dataclass

from .intpoly import IntPoly, ONE, TWO, X, ZERO


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of t^0..t^order; ``coeffs[k]`` is a polynomial in X."""

    order: int
    coeffs: tuple[IntPoly, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"need {self.order + 1} coefficients, got {len(self.coeffs)}")

    def truncate(self, new_order: int) -> TruncatedSeries:
        """Drop terms above t^new_order (new_order <= order)."""
        if new_order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(new_order, self.coeffs[: new_order + 1])


def series_from_terms(order: int, terms: dict[int, IntPoly]) -> TruncatedSeries:
    """Series with the given t-power -> coefficient map, zero elsewhere."""
    cs = [ZERO] * (order + 1)
    for k, p in terms.items():
        if k < 0:
            raise ValueError("negative t-power")
        if k <= order:
            cs[k] = p
    return TruncatedSeries(order, tuple(cs))


def series_one(order: int) -> TruncatedSeries:
    return series_from_terms(order, {0: ONE})


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product truncated at the common order, coefficient-exact.

    The convolution accumulates into raw coefficient lists so no
    intermediate polynomial objects are built.
    """
    _check_orders(a, b)
    n = a.order
    out: list[list[int]] = [[] for _ in range(n + 1)]
    for i, p in enumerate(a.coeffs):
        pc = p.coeffs
        if not pc:
            continue
        for j in range(n - i + 1):
            qc = b.coeffs[j].coeffs
            if not qc:
                continue
            acc = out[i + j]
            need = len(pc) + len(qc) - 1
            if len(acc) < need:
                acc.extend([0] * (need - len(acc)))
            for u, cu in enumerate(pc):
                if cu:
                    for v, cv in enumerate(qc):
                        acc[u + v] += cu * cv
    return TruncatedSeries(n, tuple(IntPoly(tuple(c)) for c in out))


def series_div(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """The series S with S * den == num through t^order.

    Requires den to have constant term 1, which makes the division exact
    over the integers: S_k = num_k - sum_{j=1..k} den_j * S_{k-j}.
    """
    _check_orders(num, den)
    if den.coeffs[0] != ONE:
        raise ValueError("denominator constant term must be 1")
    n = num.order
    result: list[IntPoly] = []
    for k in range(n + 1):
        acc = list(num.coeffs[k].coeffs)
        for j in range(1, k + 1):
            dc = den.coeffs[j].coeffs
            if not dc:
                continue
            sc = result[k - j].coeffs
            if not sc:
                continue
            need = len(dc) + len(sc) - 1
            if len(acc) < need:
                acc.extend([0] * (need - len(acc)))
            for u, cu in enumerate(dc):
                if cu:
                    for v, cv in enumerate(sc):
                        acc[u + v] -= cu * cv
        result.append(IntPoly(tuple(acc)))
    return TruncatedSeries(n, tuple(result))


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """The series b with a * b == 1 through t^order; a must have constant
    term 1 (every denominator expanded here does)."""
    if a.coeffs[0] != ONE:
        raise ValueError("constant term must be 1 to invert")
    return series_div(series_one(a.order), a)


def expand_pg_product(order: int) -> TruncatedSeries:
    """Expand prod_{i=1..order} (1 - t^i)^2 / (1 - X t^i + t^{2i}).

    The numerators are multiplied out into one integer series and the
    denominators into one polynomial series (each factor is sparse, so both
    passes are in-place and cheap); one exact series division then yields
    the same result as multiplying the per-factor inverses, at a fraction
    of the cost.
    """
    if order < 1:
        raise ValueError("order must be positive")
    n = order
    # numerator: prod (1 - t^i)^2, integer coefficients
    num = [0] * (n + 1)
    num[0] = 1
    for i in range(1, n + 1):
        for _ in range(2):
            for m in range(n, i - 1, -1):
                num[m] -= num[m - i]
    # denominator: prod (1 - X t^i + t^{2i})
    den: list[IntPoly] = [ONE] + [ZERO] * n
    for i in range(1, n + 1):
        for m in range(n, i - 1, -1):
            d = den[m] - X * den[m - i]
            if m >= 2 * i:
                d = d + den[m - 2 * i]
            den[m] = d
    return series_div(
        TruncatedSeries(n, tuple(IntPoly((c,)) for c in num)),
        TruncatedSeries(n, tuple(den)),
    )


_X_MINUS_2 = X - TWO


def pg_from_series(order: int) -> list[IntPoly]:
    """The ideal-count polynomials G_1..G_order, each read off the product
    expansion by dividing the t^n coefficient exactly by (X - 2).

    A nonzero remainder is impossible and raises RuntimeError (it would mean
    the expansion itself is broken, never something to discard silently).
    """
    expansion = expand_pg_product(order)
    out: list[IntPoly] = []
    for n in range(1, order + 1):
        q, r = divmod(expansion.coeffs[n], _X_MINUS_2)
        if not r.is_zero():
            raise RuntimeError(
                f"t^{n} coefficient of the product is not divisible by X - 2")
        out.append(q)
    return out


def expand_f_gf(order: int) -> TruncatedSeries:
    """Expansion of (1 + t)/(1 - Xt + t^2); coefficient of t^k is the
    degree-k running-sum polynomial."""
    if order < 1:
        raise ValueError("order must be positive")
    num = series_from_terms(order, {0: ONE, 1: ONE})
    den = series_from_terms(order, {0: ONE, 1: -X, 2: ONE})
    return series_div(num, den)


def expand_tcheb_gf(order: int) -> TruncatedSeries:
    """Expansion of (2 - Xt)/(1 - Xt + t^2); coefficient of t^k is the
    monic Chebyshev polynomial of degree k."""
    if order < 1:
        raise ValueError("order must be positive")
    num = series_from_terms(order, {0: TWO, 1: -X})
    den = series_from_terms(order, {0: ONE, 1: -X, 2: ONE})
    return series_div(num, den)
