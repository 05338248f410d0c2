"""Aggregated identity sweeps behind the ``verify`` CLI command.

Each suite runs one family of cross-checks over a range of n, counting every
individual comparison and collecting failures instead of raising, so a run
reports all breakage at once.  All sweeps are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import chebfam, divisors, hilbert, series, zeta
from .intpoly import LaurentPoly, ONE, TWO, X, monomial


@dataclass
class Failure:
    case: str
    expected: str
    actual: str


@dataclass
class VerifySuiteReport:
    """Pass/fail tally of one suite; process exit code is 0 iff no failures."""

    suite: str
    max_n: int
    passed: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, case: str, ok: bool, expected: object = True,
              actual: object = None) -> None:
        if ok:
            self.passed += 1
        else:
            self.failures.append(
                Failure(case, str(expected), str(actual if actual is not None else not ok)))

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "max_n": self.max_n,
            "passed": self.passed,
            "failed": self.failed,
            "failures": [
                {"case": f.case, "expected": f.expected, "actual": f.actual}
                for f in self.failures
            ],
        }


DEFAULT_RANGES = {
    "routes": 200,
    "cheb": 64,
    "series": 64,
    "mult": 60,
    "zeta": 500,
    "special": 10000,
}


def verify_routes(max_n: int = 200) -> VerifySuiteReport:
    """Every route to the same polynomial agrees, and the count structure
    holds: four ways to G_n, two ways to C_n, the monomial route to the
    centered quotient, and the run/divisor combinatorics behind them."""
    rep = VerifySuiteReport("routes", max_n)
    series_pgs = series.pg_from_series(max_n)
    for n in range(1, max_n + 1):
        p_interval = hilbert.pg_via_interval(n)
        decomp = hilbert.pg_via_odd_divisors(n)
        rep.check(f"pg interval=odd_divisors n={n}",
                  p_interval == decomp.polynomial, p_interval, decomp.polynomial)
        roundtrip = hilbert.pg_roundtrip(n)
        rep.check(f"pg interval=roundtrip n={n}",
                  p_interval == roundtrip, p_interval, roundtrip)
        rep.check(f"pg interval=series n={n}",
                  p_interval == series_pgs[n - 1], p_interval, series_pgs[n - 1])
        rep.check(f"pg monic degree n={n}",
                  p_interval.is_monic() and p_interval.degree == n - 1,
                  f"monic, degree {n - 1}", p_interval)
        rep.check(f"decomp d=1 term n={n}",
                  decomp.terms[0].d == 1 and decomp.terms[0].sign == 1
                  and decomp.terms[0].f_index == n - 1,
                  "+F_{n-1} from d=1", decomp.terms[0])

        # full count: two routes and structure
        cn_a = hilbert.cn_via_odd_divisors(n)
        cn_b = hilbert.cn_via_coeff_formula(n)
        rep.check(f"cn two-route n={n}", cn_a.full == cn_b.full,
                  cn_a.full, cn_b.full)
        rep.check(f"cn palindromic monic deg 2n n={n}",
                  cn_a.full.is_palindromic() and cn_a.full.min_exp == 0
                  and cn_a.full.max_exp == 2 * n and cn_a.full.coeff(2 * n) == 1,
                  "palindromic monic of degree 2n", cn_a.full)
        pn = hilbert.pn_from_cn(n)
        rep.check(f"pn structure n={n}",
                  pn.is_palindromic() and pn.min_exp == 0
                  and pn.max_exp == 2 * n - 2
                  and all(c >= 0 for c in pn.coeffs),
                  "palindromic degree 2n-2, coefficients >= 0", pn)
        rep.check(f"pn value at 1 n={n}",
                  pn.eval_int(1) == sum(divisors.divisors(n)),
                  sum(divisors.divisors(n)), pn.eval_int(1))
        odd_count = len(divisors.odd_divisors(n))
        coeff_sum = sum(abs(c) for c in cn_a.centered.coeffs)
        rep.check(f"cn coefficient-sum law n={n}",
                  coeff_sum == 4 * odd_count, 4 * odd_count, coeff_sum)

        # monomial route over run differences
        seq_route = hilbert.pg_via_sequences(n)
        centered_pn = pn.shift(-(n - 1))
        rep.check(f"pg sequence route n={n}", seq_route == centered_pn,
                  centered_pn, seq_route)

        # run/divisor bijection, involution, parity, containment
        odd = divisors.odd_divisors(n)
        produced = []
        for d in odd:
            odd_run, even_run = divisors.sequence_for_divisor(n, d)
            produced += [odd_run, even_run]
            rep.check(f"run sums n={n} d={d}",
                      odd_run.total == n and even_run.total == n, n,
                      (odd_run.total, even_run.total))
            rep.check(f"involution n={n} d={d}",
                      divisors.involute(odd_run) == even_run
                      and divisors.involute(even_run) == odd_run,
                      "mutually involute", (odd_run, even_run))
            rep.check(f"parity flip n={n} d={d}",
                      odd_run.is_odd() != even_run.is_odd(),
                      "opposite parity", (odd_run.h, even_run.h))
            pos, neg = ((odd_run, even_run) if odd_run.is_positive()
                        else (even_run, odd_run))
            pos_set, neg_set = set(pos.elements()), set(neg.elements())
            rep.check(f"containment n={n} d={d}",
                      pos_set <= neg_set
                      and len(neg_set - pos_set) == abs(even_run.h - odd_run.h),
                      "positive run inside negative partner",
                      (odd_run, even_run))
        rep.check(f"bijection n={n}",
                  sorted((s.a, s.h) for s in produced)
                  == sorted((s.a, s.h) for s in divisors.representations(n)),
                  "divisor pairs exhaust the representations", produced)

        # interval counts are 1 on the top half of the index range
        tail_ok = all(divisors.a_coeff(n, i) == 1
                      for i in range((n - 1) // 2, n))
        rep.check(f"a_coeff tail of ones n={n}", tail_ok, "all 1",
                  [divisors.a_coeff(n, i) for i in range((n - 1) // 2, n)])
    return rep


def verify_cheb(max_n: int = 64) -> VerifySuiteReport:
    """Both polynomial families agree across all construction routes and
    satisfy their recurrences and substitution identities."""
    rep = VerifySuiteReport("cheb", max_n)
    for k in range(max_n + 1):
        t = chebfam.tcheb(k)
        f = chebfam.fpoly(k)
        if k >= 1:
            rep.check(f"tcheb closed k={k}", chebfam.tcheb_closed(k) == t,
                      t, chebfam.tcheb_closed(k))
            rep.check(f"fpoly closed k={k}", chebfam.fpoly_closed(k) == f,
                      f, chebfam.fpoly_closed(k))
        rep.check(f"tcheb trace k={k}", chebfam.tcheb_trace(k) == t,
                  t, chebfam.tcheb_trace(k))
        rep.check(f"constant term k={k}",
                  chebfam.fpoly_constant_term(k) == f.coeff(0),
                  f.coeff(0), chebfam.fpoly_constant_term(k))
        # substitution: t(q + 1/q) == q^k + q^-k
        expected = monomial(k) + monomial(-k) if k else monomial(0, 2)
        rep.check(f"tcheb substitution k={k}",
                  t.eval_q_plus_qinv() == expected, expected,
                  t.eval_q_plus_qinv())
        if k >= 1:
            rep.check(f"f recurrence k={k}",
                      chebfam.fpoly(k + 1) == X * f - chebfam.fpoly(k - 1),
                      chebfam.fpoly(k + 1), X * f - chebfam.fpoly(k - 1))
        # difference law: V_{r+1} - V_r = (X - 2) F_r, and its Laurent form
        diff = chebfam.tcheb(k + 1) - t
        rep.check(f"difference law k={k}", diff == (X - TWO) * f,
                  (X - TWO) * f, diff)
        lhs = (monomial(k + 1) + monomial(-k - 1)
               - monomial(k) - monomial(-k))
        rhs = LaurentPoly(-1, (1, -2, 1)) * f.eval_q_plus_qinv()
        rep.check(f"difference law (Laurent) k={k}", lhs == rhs, rhs, lhs)
        # leading-coefficient pattern of the running sums
        if k >= 5:
            want = [1, 1, -(k - 1), -(k - 2),
                    (k - 2) * (k - 3) // 2, (k - 3) * (k - 4) // 2]
            got = [f.coeff(k - j) for j in range(6)]
            rep.check(f"fpoly leading coefficients k={k}", got == want,
                      want, got)
    return rep


def verify_series(max_n: int = 64) -> VerifySuiteReport:
    """The generating-function expansions reproduce both families, replay
    the numerator identity, and are stable under deeper truncation."""
    rep = VerifySuiteReport("series", max_n)
    f_gf = series.expand_f_gf(max_n)
    t_gf = series.expand_tcheb_gf(max_n)
    for k in range(max_n + 1):
        rep.check(f"f gf k={k}", f_gf.coeffs[k] == chebfam.fpoly(k),
                  chebfam.fpoly(k), f_gf.coeffs[k])
        rep.check(f"tcheb gf k={k}", t_gf.coeffs[k] == chebfam.tcheb(k),
                  chebfam.tcheb(k), t_gf.coeffs[k])
    # (1 - t^2) / (1 - Xt + t^2) == (1 - t) * (f-family gf)
    den = series.series_from_terms(max_n, {0: ONE, 1: -X, 2: ONE})
    lhs = series.series_mul(
        series.series_from_terms(max_n, {0: ONE, 2: -ONE}),
        series.series_inverse(den))
    rhs = series.series_mul(
        series.series_from_terms(max_n, {0: ONE, 1: -ONE}), f_gf)
    rep.check("numerator identity", lhs == rhs, "equal series", (lhs, rhs))
    # truncation stability of the big product
    half = max(1, max_n // 2)
    big = series.expand_pg_product(max_n)
    small = series.expand_pg_product(half)
    rep.check("truncation stability", big.truncate(half) == small,
              "orders agree on shared terms", half)
    # product expansion against the interval route
    for n, p in enumerate(series.pg_from_series(min(max_n, 64)), start=1):
        rep.check(f"pg series n={n}", p == hilbert.pg_via_interval(n),
                  hilbert.pg_via_interval(n), p)
    return rep


def verify_mult(max_n: int = 60) -> VerifySuiteReport:
    """Multiplicativity of |G_n(x)| at the four special points, the
    three-case law at x=1, the closed factor identities, and
    multiplicativity of the odd-divisor count itself."""
    rep = VerifySuiteReport("mult", max_n)
    for m in range(1, max_n + 1):
        for k in range(m + 1, max_n + 1):
            if gcd(m, k) != 1:
                continue
            for x in (-2, -1, 0, 1, 2):
                v = hilbert.mult_check(x, m, k)
                rep.check(f"mult x={x} m={m} k={k}", v.ok,
                          f"factor {v.factor}", f"lhs={v.lhs} rhs={v.rhs}")
    fid = hilbert.mult_factor_identities()
    rep.check("difference factorization", fid.difference_ok)
    rep.check("sum factorization", fid.sum_ok)
    rep.check("square-difference divisibility", fid.square_divisible)
    for m in range(1, 101):
        for k in range(m + 1, 101):
            if gcd(m, k) == 1:
                lhs = len(divisors.odd_divisors(m * k))
                rhs = (len(divisors.odd_divisors(m))
                       * len(divisors.odd_divisors(k)))
                rep.check(f"odd-divisor count multiplicative m={m} k={k}",
                          lhs == rhs, rhs, lhs)
    return rep


def verify_zeta(max_n: int = 500) -> VerifySuiteReport:
    """Factor counts, exponent symmetry, the functional equation, and
    agreement with the coefficient formula."""
    rep = VerifySuiteReport("zeta", max_n)
    for n in range(1, max_n + 1):
        z = zeta.local_zeta_factors(n)
        odd_count = len(divisors.odd_divisors(n))
        rep.check(f"factor count n={n}",
                  len(z.numerator) == len(z.denominator) == 2 * odd_count,
                  2 * odd_count, (len(z.numerator), len(z.denominator)))
        rep.check(f"exponent range n={n}",
                  all(0 <= e <= 2 * n for e in z.numerator + z.denominator),
                  "within [0, 2n]", z)
        rep.check(f"functional equation n={n}",
                  zeta.check_functional_equation(n).ok, True)
        rep.check(f"coefficient consistency n={n}",
                  zeta.zeta_consistency_with_cn(n).ok, True)
    z3, z4 = zeta.local_zeta_factors(3), zeta.local_zeta_factors(4)
    rep.check("n=3 factors", (z3.numerator, z3.denominator)
              == ((1, 2, 4, 5), (0, 3, 3, 6)),
              ((1, 2, 4, 5), (0, 3, 3, 6)), (z3.numerator, z3.denominator))
    rep.check("n=4 factors", (z4.numerator, z4.denominator)
              == ((1, 7), (0, 8)),
              ((1, 7), (0, 8)), (z4.numerator, z4.denominator))
    return rep


def verify_special(max_n: int = 10000) -> VerifySuiteReport:
    """Defect classification against the number-theoretic characterizations,
    the power-of-two law, and the strict degree bound on the defect."""
    rep = VerifySuiteReport("special", max_n)
    for n in range(1, max_n + 1):
        r = hilbert.special_family_check(n)
        rep.check(f"special families n={n}", r.ok,
                  f"kind {r.predicted_kind}",
                  f"kind {r.defect_kind} f0={r.f0_sign} f1={r.f1_sign}")
        if n >= 2:
            is_pow2 = n & (n - 1) == 0
            rep.check(f"power-of-two law n={n}",
                      (r.defect_kind == "zero") == is_pow2,
                      is_pow2, r.defect_kind)
    for n in range(2, min(max_n, 1000) + 1):
        try:
            hilbert.approx_defect(n)
            rep.check(f"defect degree bound n={n}", True)
        except RuntimeError as exc:
            rep.check(f"defect degree bound n={n}", False,
                      "degree < n/2 - 1", str(exc))
    return rep


SUITES = {
    "routes": verify_routes,
    "cheb": verify_cheb,
    "series": verify_series,
    "mult": verify_mult,
    "zeta": verify_zeta,
    "special": verify_special,
}


def run_suites(names: list[str], max_n: int | None = None) -> list[VerifySuiteReport]:
    """Run the named suites (each at its default range when max_n is None)."""
    reports = []
    for name in names:
        bound = max_n if max_n is not None else DEFAULT_RANGES[name]
        reports.append(SUITES[name](bound))
    return reports
