"""Divisor arithmetic and consecutive-integer-run combinatorics.

Besides the plain divisor enumerations this module owns two things the
polynomial modules lean on:

* the interval-count coefficients ``a_coeff(n, i)``: the number of divisors
  d of n with (i + sqrt(2n+i^2))/2 < d <= i + sqrt(2n+i^2), decided purely
  in integer arithmetic (floating-point square roots would misclassify
  divisors that sit exactly on the boundary);

* runs of consecutive integers summing to n (``IncreasingSequence``) and the
  involution pairing the odd-length run for each odd divisor with an
  even-length partner.  These runs index the monomials of the ideal-count
  polynomials.

The two representation counters at the bottom are deliberately brute force:
they act as oracles for root-of-unity identities and must not share any
logic with the polynomial side.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending, by trial division to sqrt(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def odd_divisors(n: int) -> list[int]:
    """The odd positive divisors of n, ascending (always contains 1)."""
    return [d for d in divisors(n) if d & 1]


def is_prime(n: int) -> bool:
    """Primality by trial division; adequate at desk scale."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def a_coeff(n: int, i: int) -> int:
    """Number of divisors d of n with (i + s)/2 < d <= i + s, s = sqrt(2n+i^2).

    The comparisons are done on squared quantities:
      d <= i + s      <=>  d*(d - 2i) <= 2n
      d > (i + s)/2   <=>  2d - i > 0  and  2d*(d - i) > n
    so boundary divisors (d exactly equal to i + s) are classified exactly.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= i <= n - 1:
        raise ValueError(f"index i={i} out of range 0..{n - 1}")
    count = 0
    for d in divisors(n):
        if d * (d - 2 * i) <= 2 * n and 2 * d - i > 0 and 2 * d * (d - i) > n:
            count += 1
    return count


def r_nd(n: int, d: int) -> int:
    """The offset n/d - (d+1)/2 attached to an odd divisor d of n."""
    if d < 1 or d % 2 == 0:
        raise ValueError(f"d={d} is not odd and positive")
    if n % d:
        raise ValueError(f"{d} does not divide {n}")
    return n // d - (d + 1) // 2


def triangular_index(n: int) -> int | None:
    """The r with n = r(r+1)/2, or None if n is not triangular.

    Uses the exact test: n is triangular iff 8n+1 is a perfect square.
    """
    if n < 1:
        raise ValueError("n must be positive")
    s = isqrt(8 * n + 1)
    return (s - 1) // 2 if s * s == 8 * n + 1 else None


def two_squares_count(n: int) -> int:
    """Number of ordered pairs (x, y) of integers with x^2 + y^2 = n,
    counting signs, by brute-force enumeration of |x| <= sqrt(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    count = 0
    for x in range(-isqrt(n), isqrt(n) + 1):
        rem = n - x * x
        y = isqrt(rem)
        if y * y == rem:
            count += 1 if y == 0 else 2
    return count


def square_plus_twice_square_count(n: int) -> int:
    """Number of ordered pairs (x, y) with x^2 + 2*y^2 = n, counting signs,
    by brute-force enumeration of |y| <= sqrt(n/2)."""
    if n < 1:
        raise ValueError("n must be positive")
    count = 0
    for y in range(-isqrt(n // 2), isqrt(n // 2) + 1):
        rem = n - 2 * y * y
        x = isqrt(rem)
        if x * x == rem:
            count += 1 if x == 0 else 2
    return count


@dataclass(frozen=True)
class IncreasingSequence:
    """The run of consecutive integers {a+1, ..., a+h}; h >= 1 elements.

    Stores only the pair (a, h); the element set is materialized on demand.
    A run is *positive* when a >= 0, *odd* when h is odd; its represented
    sum is h*(h + 2a + 1)/2.
    """

    a: int
    h: int

    def __post_init__(self) -> None:
        if self.h < 1:
            raise ValueError("run length h must be >= 1")

    def elements(self) -> range:
        return range(self.a + 1, self.a + self.h + 1)

    @property
    def total(self) -> int:
        """Sum of the elements: h*(h + 2a + 1)/2."""
        return self.h * (self.h + 2 * self.a + 1) // 2

    def is_positive(self) -> bool:
        return self.a >= 0

    def is_odd(self) -> bool:
        return self.h % 2 == 1


def involute(s: IncreasingSequence) -> IncreasingSequence:
    """The partner run under a + a' + 1 = 0, a' + h' = a + h.

    An involution on runs with positive total; it preserves the represented
    sum, flips the parity of the length, and swaps positive with negative
    runs.
    """
    return IncreasingSequence(-s.a - 1, 2 * s.a + s.h + 1)


def sequence_for_divisor(n: int, d: int) -> tuple[IncreasingSequence, IncreasingSequence]:
    """The odd-length run attached to an odd divisor d of n, with its partner.

    The odd run is IS(n/d - (d+1)/2, d), centered around n/d; the partner is
    its involute IS(-n/d + (d-1)/2, 2n/d).  Both sum to n.
    """
    r = r_nd(n, d)
    odd = IncreasingSequence(r, d)
    return odd, involute(odd)


def representations(n: int) -> list[IncreasingSequence]:
    """Every run (a, h) with h >= 1 summing to n, i.e. h*(h + 2a + 1) = 2n.

    Enumerated independently of the divisor pairing: h ranges over the
    divisors of 2n whose codivisor has the opposite parity.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for h in divisors(2 * n):
        other = 2 * n // h
        if (other - h) % 2 == 1:  # h + 2a + 1 = other needs opposite parity
            out.append(IncreasingSequence((other - h - 1) // 2, h))
    out.sort(key=lambda s: s.h)
    return out


@dataclass(frozen=True)
class OddDivisorTerm:
    """One odd divisor's contribution to the ideal-count decompositions.

    ``r`` is the offset n/d - (d+1)/2; the contribution is the degree
    ``f_index`` running-sum polynomial with the given sign (+1 when r >= 0,
    else -1 with f_index = -r - 1, which is >= 0).
    """

    d: int
    r: int
    sign: int
    f_index: int


def odd_divisor_term(n: int, d: int) -> OddDivisorTerm:
    r = r_nd(n, d)
    if r >= 0:
        return OddDivisorTerm(d, r, 1, r)
    return OddDivisorTerm(d, r, -1, -r - 1)
