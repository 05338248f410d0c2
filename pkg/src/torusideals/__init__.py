"""Exact ideal-count polynomials of the two-variable Laurent torus algebra.

The library computes, entirely in exact integer arithmetic: the full count
C_n(q) of codimension-n ideals (a palindromic monic polynomial of degree
2n), its quotient P_n(q) = C_n(q)/(q-1)^2, the reduced polynomial G_n(X)
with G_n(q + q^{-1}) = P_n(q)/q^{n-1}, the monic Chebyshev family and its
running sums, and the symbolic zeta-function factorizations attached to the
counts.  Every object is reachable by at least two independent formulas so
the implementations cross-check one another; the ``verify`` module sweeps
those identities over ranges of n.
"""

__version__ = "0.1.0"

from .chebfam import fpoly, fpoly_value, tcheb
from .hilbert import (
    cn_via_coeff_formula,
    cn_via_odd_divisors,
    pg_eval_int,
    pg_via_interval,
    pg_via_odd_divisors,
    pn_from_cn,
)
from .intpoly import IntPoly, LaurentPoly
from .zeta import hasse_weil_factors, local_zeta_factors

__all__ = [
    "IntPoly",
    "LaurentPoly",
    "tcheb",
    "fpoly",
    "fpoly_value",
    "pg_via_interval",
    "pg_via_odd_divisors",
    "pg_eval_int",
    "cn_via_odd_divisors",
    "cn_via_coeff_formula",
    "pn_from_cn",
    "local_zeta_factors",
    "hasse_weil_factors",
    "__version__",
]
