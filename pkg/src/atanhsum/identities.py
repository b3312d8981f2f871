"""Verification battery: exact telescoping, cyclotomic identities, and the
ball-arithmetic identity checklist.

Check semantics are three-valued:

  * identities ("these two balls describe the same real") pass when the
    balls intersect;
  * inequalities ("this real is strictly below that one") pass only when
    the balls are disjoint in the stated order, and come back
    ``inconclusive`` when they overlap, with a suggestion to raise
    precision;
  * algebraic claims (telescoping, cyclotomic shifts) are decided in exact
    integer/rational arithmetic and never have a tolerance.

``run_suite`` executes the whole checklist, never raises on a failing
check, and returns one report per check, sorted by name.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from gmpy2 import mpq

from .balls import BallReal, PrecisionContext
from .series import (
    apery_zeta3,
    companions,
    correction_c,
    delta_h,
    f_product,
    g_product,
    gamma_accel,
    h3_closed,
    h_derivative,
    h_direct,
    h_direct_tail_bound,
    h_partial,
    h_product,
    h_zeta_series,
)
from .zeta import zeta_minus_one

__all__ = [
    "PASS",
    "FAIL",
    "INCONCLUSIVE",
    "VerificationReport",
    "telescope_partial",
    "telescope_closed_form",
    "cyclotomic",
    "cyclotomic_shift_check",
    "run_suite",
    "report_lines",
    "report_records",
]

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"

#: Reference decimal expansion of the Euler-Mascheroni constant used by the
#: containment checks (A001620).
GAMMA_REFERENCE = Fraction("0.5772156649015329")


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    status: str
    detail: str
    tolerance_or_separation: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == PASS


def _float_or_zero(x) -> float:
    try:
        return float(x)
    except (OverflowError, ValueError):  # pragma: no cover - display only
        return 0.0


# ---------------------------------------------------------------------------
# exact rational telescoping
# ---------------------------------------------------------------------------

def telescope_partial(n_last: int) -> Fraction:
    """prod_{n=2}^{N} (n^3 + 1)/(n^3 - 1) in exact rational arithmetic.

    The running product collapses step by step (the gcd reduction keeps the
    numbers at machine size), so N = 10^6 stays fast.
    """
    if n_last < 2:
        raise ValueError("telescoping product starts at n = 2")
    acc = mpq(1)
    for n in range(2, n_last + 1):
        cube = n * n * n
        acc *= mpq(cube + 1, cube - 1)
    return Fraction(acc.numerator, acc.denominator)


def telescope_closed_form(n_last: int) -> Fraction:
    """3N(N+1) / (2(N^2 + N + 1)) - the collapsed partial product."""
    return Fraction(3 * n_last * (n_last + 1), 2 * (n_last * n_last + n_last + 1))


# ---------------------------------------------------------------------------
# cyclotomic polynomials over Z (dense integer coefficient lists)
# ---------------------------------------------------------------------------

def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division in Z[x]; raises if the division leaves a remainder."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], den[-1])
        if r:
            raise ArithmeticError("polynomial division is not exact")
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("polynomial division is not exact")
    return out


_cyclo_cache: dict[int, list[int]] = {}


def cyclotomic(n: int) -> list[int]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n in _cyclo_cache:
        return _cyclo_cache[n]
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic(d))
    out = _poly_divexact(num, den)
    _cyclo_cache[n] = out
    return out


def _poly_shift_one(p: list[int]) -> list[int]:
    """p(x + 1) by exact binomial expansion."""
    out = [0] * len(p)
    for i, c in enumerate(p):
        if c:
            for j in range(i + 1):
                out[j] += c * math.comb(i, j)
    return out


def _poly_eval(p: list[int], x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def cyclotomic_shift_check(n_max: int) -> VerificationReport:
    """Phi_6(n+1) = Phi_3(n) exactly for n = 1..n_max, and the failure of
    the analogous shift for p in {5, 7, 11}: the coefficient of n^(p-2) in
    Phi_2p(n+1) is p - 2, not 1."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    phi3, phi6 = cyclotomic(3), cyclotomic(6)
    shifted = _poly_shift_one(phi6)
    if shifted != phi3:
        return VerificationReport(
            "cyclotomic-shift", FAIL, f"Phi6(x+1) = {shifted} != Phi3 = {phi3}"
        )
    for n in range(1, n_max + 1):
        if _poly_eval(phi6, n + 1) != _poly_eval(phi3, n):
            return VerificationReport(
                "cyclotomic-shift", FAIL, f"pointwise mismatch at n = {n}"
            )
    for p in (5, 7, 11):
        shifted = _poly_shift_one(cyclotomic(2 * p))
        coeff = shifted[p - 2]
        if coeff != p - 2 or coeff == 1:
            return VerificationReport(
                "cyclotomic-shift",
                FAIL,
                f"coefficient of n^{p-2} in Phi_{2*p}(n+1) is {coeff}, expected {p-2}",
            )
    return VerificationReport(
        "cyclotomic-shift",
        PASS,
        f"Phi6(n+1) = Phi3(n) for n <= {n_max}; shift coefficient is p-2 for p in (5, 7, 11)",
    )


# ---------------------------------------------------------------------------
# ball-identity checklist
# ---------------------------------------------------------------------------

def _identity_report(name: str, a: BallReal, b: BallReal, what: str) -> VerificationReport:
    if a.overlaps(b):
        gap = abs(Fraction(mpq(a.mid) - mpq(b.mid)))
        return VerificationReport(name, PASS, what, _float_or_zero(gap))
    return VerificationReport(
        name,
        FAIL,
        f"{what}: balls disjoint ({a.mid} ± {a.rad} vs {b.mid} ± {b.rad})",
        _float_or_zero(a.separation(b)),
    )


def _separation_report(
    name: str, low: BallReal, high: BallReal, what: str
) -> VerificationReport:
    if low.strictly_below(high):
        return VerificationReport(
            name, PASS, what, _float_or_zero(low.separation(high))
        )
    if high.strictly_below(low):
        return VerificationReport(name, FAIL, f"{what}: strict inequality reversed")
    return VerificationReport(
        name,
        INCONCLUSIVE,
        f"{what}: balls overlap; raise the precision to separate them",
    )


def _containment_report(
    name: str, ball: BallReal, value, what: str
) -> VerificationReport:
    if ball.contains(value):
        return VerificationReport(name, PASS, what, _float_or_zero(ball.rad))
    return VerificationReport(
        name, FAIL, f"{what}: {value} outside [{ball.lower()}, {ball.upper()}]"
    )


def _check_rep_agreement(k: int, ctx: PrecisionContext, cap: int) -> list[VerificationReport]:
    direct = h_direct(k, ctx, max_terms=cap)
    zser = h_zeta_series(k, ctx)
    prod = h_product(k, ctx)
    out = []
    pairs = [
        ("direct/zeta-series", direct, zser),
        ("direct/product", direct, prod),
        ("zeta-series/product", zser, prod),
    ]
    for tag, a, b in pairs:
        out.append(
            _identity_report(
                f"rep-agreement-k{k}-{tag}", a.value, b.value, f"h({k}) {tag} overlap"
            )
        )
    return out


def _check_companions(k: int, ctx: PrecisionContext) -> list[VerificationReport]:
    h = h_zeta_series(k, ctx).value
    a = companions(k, "A", ctx).value
    e = companions(k, "E", ctx).value
    b = companions(k, "B", ctx).value
    return [
        _identity_report(f"companion-algebra-k{k}-A", a, h.add(e, ctx), f"A({k}) = h + E"),
        _identity_report(f"companion-algebra-k{k}-B", b, h.sub(e, ctx), f"B({k}) = h - E"),
    ]


def _check_doubling(k: int, ctx: PrecisionContext) -> VerificationReport:
    g2k = g_product(2 * k, ctx).value
    gk = g_product(k, ctx).value
    h = h_zeta_series(k, ctx).value
    rhs = gk.square(ctx).mul(h.mul_int(2, ctx).exp(ctx), ctx)
    return _identity_report(
        f"doubling-law-k{k}", g2k, rhs, f"g({2*k}) = g({k})^2 exp(2 h({k}))"
    )


def _check_product_identity(k: int, ctx: PrecisionContext) -> VerificationReport:
    f = f_product(k, ctx).value
    rhs = g_product(2 * k, ctx).value.mul_int(2, ctx).div(g_product(k, ctx).value, ctx)
    return _identity_report(
        f"product-identity-k{k}", f, rhs, f"f({k}) = 2 g({2*k}) / g({k})"
    )


def _check_zeta_identity(k: int, ctx: PrecisionContext) -> VerificationReport:
    recon = (
        BallReal.from_int(1, ctx)
        .add(h_zeta_series(k, ctx).value, ctx)
        .sub(correction_c(k, ctx).value, ctx)
    )
    direct = BallReal.from_int(1, ctx).add(zeta_minus_one(k, ctx), ctx)
    return _identity_report(
        f"zeta-identity-k{k}", recon, direct, f"zeta({k}) = 1 + h({k}) - C({k})"
    )


def _check_bounds(k: int, ctx: PrecisionContext) -> list[VerificationReport]:
    h = h_zeta_series(k, ctx).value
    zk = zeta_minus_one(k, ctx)
    z3k = zeta_minus_one(3 * k, ctx)
    z5k = zeta_minus_one(5 * k, ctx)
    upper_corr = z3k.div(
        BallReal.from_int(1, ctx).sub(
            BallReal.from_fraction(Fraction(1, 4**k), ctx), ctx
        ).mul_int(3, ctx),
        ctx,
    )
    upper = zk.add(upper_corr, ctx)
    refined = zk.add(z3k.div_int(3, ctx), ctx).add(z5k.div_int(5, ctx), ctx)
    return [
        _separation_report(f"bounds-k{k}-lower", zk, h, f"zeta({k})-1 < h({k})"),
        _separation_report(f"bounds-k{k}-upper", h, upper, f"h({k}) < upper bound"),
        _separation_report(
            f"bounds-k{k}-refined-lower", refined, h, f"3-term lower bound < h({k})"
        ),
    ]


def _check_monotone_convex(k: int, ctx: PrecisionContext) -> list[VerificationReport]:
    prev = h_zeta_series(k - 1, ctx).value
    here = h_zeta_series(k, ctx).value
    nxt = h_zeta_series(k + 1, ctx).value
    return [
        _separation_report(f"monotone-k{k}", nxt, here, f"h({k+1}) < h({k})"),
        _separation_report(
            f"convex-k{k}",
            here.mul_int(2, ctx),
            prev.add(nxt, ctx),
            f"h({k-1}) + h({k+1}) > 2 h({k})",
        ),
    ]


def _check_derivative_signs(ctx: PrecisionContext, cap: int) -> list[VerificationReport]:
    out = []
    zero = BallReal.exact_zero()
    for k in (2, 3):
        d1 = h_derivative(k, 1, ctx, max_terms=cap).value
        d2 = h_derivative(k, 2, ctx, max_terms=cap).value
        out.append(
            _separation_report(f"deriv-sign-k{k}-order1", d1, zero, f"h'({k}) < 0")
        )
        out.append(
            _separation_report(f"deriv-sign-k{k}-order2", zero, d2, f"h''({k}) > 0")
        )
    return out


def _check_derivative_fd(
    k: Fraction, delta_exp: int, ctx: PrecisionContext, cap: int
) -> VerificationReport:
    delta = Fraction(1, 10**delta_exp)
    name = f"deriv-fd-k{float(k):g}-d{delta_exp}"
    d1 = h_derivative(k, 1, ctx, max_terms=cap)
    d2 = h_derivative(k, 2, ctx, max_terms=cap)
    hp = h_zeta_series(k + delta, ctx).value
    hm = h_zeta_series(k - delta, ctx).value
    fd = hp.sub(hm, ctx).div(BallReal.from_fraction(2 * delta, ctx), ctx)
    # central differences converge like h'''(xi) delta^2 / 6; for these
    # series h''' <= 6 h'' holds comfortably, so C = upper(h'') works
    c_const = Fraction(mpq(d2.value.upper()))
    tol = c_const * delta * delta + Fraction(mpq(d1.value.rad)) + Fraction(mpq(fd.rad))
    diff = abs(Fraction(mpq(d1.value.mid) - mpq(fd.mid)))
    if diff <= tol:
        return VerificationReport(
            name, PASS, f"|h'({k}) - central difference| = {float(diff):.3e}",
            _float_or_zero(tol),
        )
    return VerificationReport(
        name, FAIL, f"difference {float(diff):.3e} exceeds C delta^2 = {float(tol):.3e}"
    )


def _check_tail_soundness(n_last: int, ctx: PrecisionContext) -> VerificationReport:
    name = f"tail-sound-N{n_last}"
    href = h_zeta_series(2, ctx).value
    partial = h_partial(2, n_last, ctx)
    gap = href.sub(partial, ctx)
    bound = Fraction(mpq(h_direct_tail_bound(2, n_last)))
    lo, hi = Fraction(mpq(gap.lower())), Fraction(mpq(gap.upper()))
    if lo > 0 and hi <= bound:
        return VerificationReport(
            name, PASS, f"0 < h(2) - h_{n_last}(2) <= {float(bound):.4e}",
            _float_or_zero(bound),
        )
    if hi <= 0:
        return VerificationReport(name, FAIL, "partial sum is not below the limit")
    return VerificationReport(
        name,
        FAIL if hi > bound else INCONCLUSIVE,
        f"gap in [{float(lo):.4e}, {float(hi):.4e}] vs bound {float(bound):.4e}",
    )


def _check_ck_decreasing(k_max: int, ctx: PrecisionContext) -> VerificationReport:
    prev = None
    for k in range(1, k_max + 1):
        cur = correction_c(k, ctx).value
        if prev is not None and not cur.strictly_below(prev):
            return VerificationReport(
                "ck-decreasing",
                INCONCLUSIVE if cur.overlaps(prev) else FAIL,
                f"C({k}) not separated below C({k-1})",
            )
        prev = cur
    return VerificationReport(
        "ck-decreasing", PASS, f"C(k) strictly decreasing on 1..{k_max}"
    )


def _check_gamma_accel(ctx: PrecisionContext) -> list[VerificationReport]:
    out = []
    for n in (5, 10, 20):
        ball = gamma_accel(n, ctx).value
        out.append(
            _containment_report(
                f"gamma-accel-contains-N{n}",
                ball,
                GAMMA_REFERENCE,
                f"accelerated gamma ball at N = {n} contains the reference value",
            )
        )
    return out


def _check_telescope(n_last: int) -> VerificationReport:
    name = f"telescope-N{n_last}"
    product = telescope_partial(n_last)
    closed = telescope_closed_form(n_last)
    if product != closed:
        return VerificationReport(name, FAIL, f"{product} != {closed}")
    residual = Fraction(3, 2) - product
    expected = Fraction(3, 2 * (n_last * n_last + n_last + 1))
    if residual != expected:
        return VerificationReport(
            name, FAIL, f"3/2 - product = {residual}, expected {expected}"
        )
    return VerificationReport(
        name, PASS, f"exact equality at N = {n_last}; 3/2 - value = {expected}"
    )


def _check_h3_closed(ctx: PrecisionContext, cap: int) -> list[VerificationReport]:
    target = h3_closed(ctx).value
    out = []
    for tag, res in (
        ("direct", h_direct(3, ctx, max_terms=cap)),
        ("zeta-series", h_zeta_series(3, ctx)),
        ("product", h_product(3, ctx)),
    ):
        out.append(
            _identity_report(
                f"h3-closed-{tag}",
                res.value,
                target,
                f"h(3) {tag} ball meets (1/2) ln(3/2)",
            )
        )
    return out


def _check_apery(ctx: PrecisionContext) -> VerificationReport:
    ball = apery_zeta3(ctx).value
    direct = BallReal.from_int(1, ctx).add(zeta_minus_one(3, ctx), ctx)
    return _identity_report(
        "apery-zeta3", ball, direct, "1 + (1/2) ln(3/2) - C(3) meets zeta(3)"
    )


def _check_delta_ratio(k_max: int, ctx: PrecisionContext) -> VerificationReport:
    """Delta h(k) / 2^-(k+1) stays above 1 and decreases toward it."""
    prev = None
    for k in range(2, k_max + 1):
        ratio = delta_h(k, ctx).value.mul_int(2 ** (k + 1), ctx)
        one = BallReal.from_int(1, ctx)
        if not one.strictly_below(ratio):
            return VerificationReport(
                "delta-ratio", FAIL if ratio.strictly_below(one) else INCONCLUSIVE,
                f"ratio at k = {k} not separated above 1",
            )
        if prev is not None and not ratio.strictly_below(prev):
            return VerificationReport(
                "delta-ratio",
                FAIL if prev.strictly_below(ratio) else INCONCLUSIVE,
                f"ratio did not decrease at k = {k}",
            )
        prev = ratio
    return VerificationReport(
        "delta-ratio", PASS, f"ratio > 1 and decreasing for k = 2..{k_max}"
    )


SUITE_GROUPS = ("all", "identities", "bounds", "telescope")


def run_suite(
    k_min: int = 2,
    k_max: int = 8,
    digits: int = 15,
    suite: str = "all",
    telescope_n: int = 100_000,
    term_cap: Optional[int] = None,
) -> list[VerificationReport]:
    """Execute the verification checklist and report per-check outcomes.

    A failing check produces a ``fail`` report rather than an exception; an
    unexpected exception inside a check is caught and reported as a failure
    of that check.
    """
    if not 2 <= k_min <= k_max <= 16:
        raise ValueError("k range must sit inside [2, 16]")
    if digits < 10:
        raise ValueError("the suite needs at least 10 digits to separate balls")
    if suite not in SUITE_GROUPS:
        raise ValueError(f"unknown suite {suite!r}")
    ctx = PrecisionContext(digits)
    cap = term_cap or 20_000
    reports: list[VerificationReport] = []

    def guard(fn: Callable[[], object]) -> None:
        try:
            result = fn()
        except Exception as exc:  # a check must report, not propagate
            reports.append(
                VerificationReport(f"error-{fn.__name__}", FAIL, repr(exc))
            )
            return
        if isinstance(result, VerificationReport):
            reports.append(result)
        else:
            reports.extend(result)

    if suite in ("all", "identities"):
        for k in range(k_min, k_max + 1):
            guard(lambda k=k: _check_rep_agreement(k, ctx, cap))
            guard(lambda k=k: _check_companions(k, ctx))
            guard(lambda k=k: _check_zeta_identity(k, ctx))
            if k <= 8:
                guard(lambda k=k: _check_doubling(k, ctx))
                guard(lambda k=k: _check_product_identity(k, ctx))
        for k in range(max(3, k_min), k_max + 1):
            guard(lambda k=k: _check_monotone_convex(k, ctx))
        guard(lambda: _check_ck_decreasing(min(k_max, 10), ctx))
        guard(lambda: _check_gamma_accel(ctx))
        guard(lambda: _check_h3_closed(ctx, cap))
        guard(lambda: _check_apery(ctx))
        guard(lambda: _check_delta_ratio(min(k_max, 12), ctx))
        guard(lambda: _check_derivative_signs(ctx, cap))
        for k in (Fraction(5, 2), Fraction(3), Fraction(4)):
            for d in (3, 4):
                guard(lambda k=k, d=d: _check_derivative_fd(k, d, ctx, cap))
        guard(lambda: _check_tail_soundness(100, ctx))
        guard(lambda: _check_tail_soundness(10_000, ctx))

    if suite in ("all", "bounds"):
        for k in range(k_min, min(k_max, 10) + 1):
            guard(lambda k=k: _check_bounds(k, ctx))

    if suite in ("all", "telescope"):
        for n in (2, 10, 1000, telescope_n):
            guard(lambda n=n: _check_telescope(n))
        guard(lambda: cyclotomic_shift_check(1000))

    reports.sort(key=lambda r: r.check_name)
    return reports


def report_lines(reports: Iterable[VerificationReport]) -> list[str]:
    """Human-readable rendering, one aligned line per check."""
    out = []
    for r in reports:
        out.append(f"{r.status.upper():<13} {r.check_name:<42} {r.detail}")
    return out


def report_records(reports: Iterable[VerificationReport]) -> list[dict]:
    """Machine-readable key-value records (consumed by the CLI)."""
    return [
        {
            "check_name": r.check_name,
            "status": r.status,
            "detail": r.detail,
            "tolerance_or_separation": r.tolerance_or_separation,
        }
        for r in reports
    ]
