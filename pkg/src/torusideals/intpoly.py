"""Exact dense polynomials over the integers, plus Laurent polynomials in q.

Two carriers live here: ``IntPoly`` for ordinary polynomials in X with
arbitrary-precision integer coefficients, and ``LaurentPoly`` for finitely
supported integer combinations of powers q^i with i possibly negative.
Everything is immutable and canonical; all arithmetic is exact.

The one non-obvious operation is the basis change ``laurent_to_x_basis``:
a palindromic Laurent polynomial that is symmetric about q^0 is a unique
integer combination of 1 and the binomials q^i + q^{-i}, and each
q^i + q^{-i} equals the degree-i monic Chebyshev polynomial evaluated at
q + q^{-1}.  The inverse substitution is therefore exact over the integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class NonDivisibleError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _strip(cs: tuple[int, ...]) -> tuple[int, ...]:
    end = len(cs)
    while end and cs[end - 1] == 0:
        end -= 1
    return cs[:end]


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial in X; ``coeffs[i]`` is the coefficient of X^i.

    Canonical form: no trailing zeros, the zero polynomial is the empty
    tuple.  The constructor normalizes, so equality is structural.

    >>> IntPoly((1, 0, 1))
    IntPoly('X^2 + 1')
    >>> IntPoly((0, 0)) == IntPoly(())
    True
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(tuple(self.coeffs)))

    # -- structure ----------------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        """Coefficient of X^i (zero outside the stored range)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly((other,))
        return self + (-other)

    def __rsub__(self, other: int) -> IntPoly:
        return IntPoly((other,)) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        # Schoolbook; fine at desk scale.  Swap in a subquadratic kernel here
        # if degrees ever grow past a few thousand.
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> IntPoly:
        """Multiply by X^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return ZERO
        return IntPoly((0,) * k + self.coeffs)

    def __divmod__(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Long division over the integers.

        Requires every quotient coefficient to be an integer, which holds in
        particular whenever ``other`` is monic; raises ``NonDivisibleError``
        when an intermediate leading coefficient is not divisible.
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dcs = other.coeffs
        dlead = dcs[-1]
        qlen = len(rem) - len(dcs) + 1
        if qlen <= 0:
            return ZERO, self
        quo = [0] * qlen
        for k in range(qlen - 1, -1, -1):
            top = rem[k + len(dcs) - 1]
            if top == 0:
                continue
            q, r = divmod(top, dlead)
            if r:
                raise NonDivisibleError(
                    f"leading coefficient {top} not divisible by {dlead}")
            quo[k] = q
            for j, d in enumerate(dcs):
                rem[k + j] -= q * d
        return IntPoly(tuple(quo)), IntPoly(tuple(rem))

    def __floordiv__(self, other: IntPoly) -> IntPoly:
        """Exact quotient; raises ``NonDivisibleError`` on nonzero remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise NonDivisibleError(f"{self!r} is not divisible by {other!r}")
        return q

    def divides(self, other: IntPoly) -> bool:
        """True iff self divides other exactly over the integers."""
        try:
            _, r = divmod(other, self)
        except NonDivisibleError:
            return False
        return r.is_zero()

    # -- evaluation and substitution -----------------------------------------

    def eval_int(self, x: int) -> int:
        """Exact value at an integer, by Horner's scheme."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_q_plus_qinv(self) -> LaurentPoly:
        """Substitute X := q + q^{-1}, landing in the Laurent ring."""
        acc = LAURENT_ZERO
        arg = LaurentPoly(-1, (1, 0, 1))  # q + q^{-1}
        for c in reversed(self.coeffs):
            acc = acc * arg + LaurentPoly(0, (c,))
        return acc

    # -- rendering ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"IntPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


ZERO = IntPoly(())
ONE = IntPoly((1,))
TWO = IntPoly((2,))
X = IntPoly((0, 1))


@dataclass(frozen=True)
class LaurentPoly:
    """Laurent polynomial in q; ``coeffs[i]`` is the coefficient of q^{min_exp+i}.

    Canonical form: first and last stored coefficients are nonzero; the zero
    polynomial is ``LaurentPoly(0, ())``.
    """

    min_exp: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cs = tuple(self.coeffs)
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        cs = _strip(cs[lead:])
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "min_exp", self.min_exp + lead if cs else 0)

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero Laurent polynomial has no support")
        return self.min_exp + len(self.coeffs) - 1

    def coeff(self, e: int) -> int:
        """Coefficient of q^e."""
        i = e - self.min_exp
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def support(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) over the nonzero support, ascending."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_exp + i, c

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.min_exp + len(self.coeffs), other.min_exp + len(other.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.min_exp - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_exp - lo + i] += c
        return LaurentPoly(lo, tuple(out))

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.min_exp, tuple(-c for c in self.coeffs))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly(self.min_exp, tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return LAURENT_ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return LaurentPoly(self.min_exp + other.min_exp, tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q^k (k of either sign)."""
        if self.is_zero():
            return self
        return LaurentPoly(self.min_exp + k, self.coeffs)

    def eval_int(self, q: int) -> int:
        """Exact integer value; requires min_exp >= 0."""
        if not self.is_zero() and self.min_exp < 0:
            raise ValueError("cannot evaluate negative powers at an integer")
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc * q ** self.min_exp if self.coeffs else 0

    # -- predicates ----------------------------------------------------------

    def is_palindromic(self) -> bool:
        """True iff the coefficient sequence reads the same reversed."""
        return self.coeffs == self.coeffs[::-1]

    def is_centered(self) -> bool:
        """True iff the support is symmetric about q^0 (min_exp = -max_exp)."""
        return self.is_zero() or self.min_exp == -self.max_exp

    # -- rendering ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)!r})"

    def __str__(self) -> str:
        return format_laurent(self)


LAURENT_ZERO = LaurentPoly(0, ())
LAURENT_ONE = LaurentPoly(0, (1,))


def monomial(e: int, c: int = 1) -> LaurentPoly:
    """The Laurent monomial c * q^e."""
    return LaurentPoly(e, (c,))


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact Laurent division: the Q with Q * den == num.

    Raises ``NonDivisibleError`` when no such Q exists over the integers and
    ``ZeroDivisionError`` on a zero divisor (a malformed input, not a failed
    division).
    """
    if den.is_zero():
        raise ZeroDivisionError("Laurent division by zero")
    if num.is_zero():
        return LAURENT_ZERO
    q, r = divmod(IntPoly(num.coeffs), IntPoly(den.coeffs))
    if not r.is_zero():
        raise NonDivisibleError("nonzero remainder in exact Laurent division")
    return LaurentPoly(num.min_exp - den.min_exp, q.coeffs)


def laurent_to_x_basis(lp: LaurentPoly) -> IntPoly:
    """Rewrite a centered palindromic Laurent polynomial as a polynomial in
    X = q + q^{-1}.

    With b_i the coefficient of q^i (equal to that of q^{-i} by symmetry),
    the result is b_0 + sum_{i>=1} b_i * V_i(X) where V_i is the monic
    degree-i polynomial with V_i(q + q^{-1}) = q^i + q^{-i}; the V_i are
    generated here by the three-term recurrence V_{i+1} = X V_i - V_{i-1}.
    Substituting X := q + q^{-1} back reproduces the input exactly.
    """
    if lp.is_zero():
        return ZERO
    if not lp.is_palindromic():
        raise ValueError("not palindromic: cannot change basis to X = q + 1/q")
    if not lp.is_centered():
        raise ValueError(
            f"support not centered about q^0 (min_exp={lp.min_exp}, "
            f"max_exp={lp.max_exp}); divide out the middle power of q first")
    m = lp.max_exp
    acc = [lp.coeff(0)]
    v_prev, v_cur = TWO, X  # V_0, V_1
    for i in range(1, m + 1):
        b = lp.coeff(i)
        if b:
            for j, c in enumerate(v_cur.coeffs):
                if j < len(acc):
                    acc[j] += b * c
                else:
                    acc.append(b * c)
        if i < m:
            v_prev, v_cur = v_cur, X * v_cur - v_prev
    return IntPoly(tuple(acc))


# -- JSON encoding ------------------------------------------------------------
# Shared by every module: coefficients as decimal strings so that arbitrary
# precision survives any JSON implementation.

def intpoly_to_json(p: IntPoly) -> dict:
    return {"coeffs": [str(c) for c in p.coeffs]}


def intpoly_from_json(obj: dict) -> IntPoly:
    return IntPoly(tuple(int(c) for c in obj["coeffs"]))


def laurent_to_json(lp: LaurentPoly) -> dict:
    return {"min_exp": lp.min_exp, "coeffs": [str(c) for c in lp.coeffs]}


def laurent_from_json(obj: dict) -> LaurentPoly:
    return LaurentPoly(int(obj["min_exp"]), tuple(int(c) for c in obj["coeffs"]))


# -- rendering ------------------------------------------------------------------

def _term_str(c: int, e: int, var: str, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    if e == 0:
        body = str(mag)
    else:
        head = "" if mag == 1 else f"{mag}*"
        body = f"{head}{var}" if e == 1 else f"{head}{var}^{e}"
    if first:
        return body if c > 0 else f"-{body}"
    return f" {sign} {body}"


def format_poly(p: IntPoly, var: str = "X") -> str:
    """Human-readable form, highest degree first: 'X^3 + X^2 - 2*X - 1'."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c:
            parts.append(_term_str(c, i, var, not parts))
    return "".join(parts)


def format_laurent(lp: LaurentPoly, var: str = "q") -> str:
    """Human-readable form, highest exponent first; negative powers as q^-k."""
    if lp.is_zero():
        return "0"
    parts = []
    for e in range(lp.max_exp, lp.min_exp - 1, -1):
        c = lp.coeff(e)
        if c:
            parts.append(_term_str(c, e, var, not parts))
    return "".join(parts)
