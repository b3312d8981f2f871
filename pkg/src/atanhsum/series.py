"""Evaluators for the arctanh sum h, the products g and f, the companion
series A/E/B, the correction C, the Euler-Mascheroni constant, and the
derivatives and differences of h.

Every evaluator returns a ``SeriesResult`` whose ball radius covers the
truncation tail (chosen by inverting an explicit bound), the radii of every
zeta evaluation consumed, and accumulated rounding.  The representations:

  h(k) = sum_{n>=2} arctanh(n^-k)                        (direct)
       = sum_{m>=0} [zeta((2m+1)k) - 1] / (2m+1)         (zeta series)
       = (1/2) ln( g(2k) / g(k)^2 )                      (product)

with g(k) = prod_{n>=2} (1 - n^-k) and f(k) = prod_{n>=1} (1 + n^-k)
evaluated through their log series

  ln g(k) = -sum_{n>=1} [zeta(kn) - 1] / n
  ln f(k) = ln 2 + sum_{n>=1} (-1)^(n+1) [zeta(kn) - 1] / n.

Truncation bounds used here:

  * direct h:        [(N+1)^-k + (N+1)^(1-k)/(k-1)] / (1 - (N+1)^-2k)
  * zeta-series h:   (4/3) 2^(-(2M+3)k), valid for k >= 2
  * log products:    (2/(N+1)) 2^(-k(N+1)) / (1 - 2^-k)
  * correction C:    (1/(2N+3)) (1 + 2/(k(2N+3)-1)) 2^(-k(2N+3)) / (1-2^-2k)
  * derivatives:     term at N+1 plus the closed-form integral
                     int_A^inf x^-k (ln x)^j dx.

Direct summation of h and of its derivatives converges polynomially, so at
small k the inverted N can exceed any sane budget; those evaluators accept a
term cap and simply return a wider, still-certified ball when capped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from gmpy2 import mpfr, mpq

from .balls import (
    BallReal,
    DomainError,
    PrecisionContext,
    _RDN,
    _RUP,
    _rdn_frac,
    _rup_frac,
    int_power_ball,
    ln2_ball,
    pi_ball,
)
from .zeta import zeta_minus_one

__all__ = [
    "KParam",
    "SeriesResult",
    "REP_DIRECT",
    "REP_ZETA_SERIES",
    "REP_PRODUCT",
    "REP_CLOSED_FORM",
    "DEFAULT_TERM_CAP",
    "h_direct",
    "h_zeta_series",
    "h_product",
    "h_value",
    "h_partial",
    "h_direct_tail_bound",
    "g_product",
    "f_product",
    "companions",
    "correction_c",
    "gamma_direct",
    "gamma_accel",
    "gamma_accel_tail_bound",
    "h_derivative",
    "delta_h",
    "apery_zeta3",
    "g2_closed",
    "f2_closed",
    "h2_closed",
    "h3_closed",
]

REP_DIRECT = "direct"
REP_ZETA_SERIES = "zeta-series"
REP_PRODUCT = "product"
REP_CLOSED_FORM = "closed-form"

#: Term budget for the polynomially convergent direct sums.  Past this the
#: evaluators stop adding terms and let the certified tail widen the radius.
DEFAULT_TERM_CAP = 100_000

KLike = Union["KParam", int, float, str, Fraction]


@dataclass(frozen=True)
class KParam:
    """Series exponent k: any real > 1; products and companions need an
    integer k >= 2."""

    value: Fraction
    is_integer: bool

    @staticmethod
    def of(k: KLike) -> "KParam":
        if isinstance(k, KParam):
            return k
        value = Fraction(k)
        if value <= 1:
            raise DomainError("series parameter must exceed 1", k)
        return KParam(value, value.denominator == 1)

    def require_integer_ge2(self, what: str) -> int:
        if not self.is_integer or self.value < 2:
            raise DomainError(f"{what} requires an integer k >= 2", self.value)
        return int(self.value)


@dataclass(frozen=True)
class SeriesResult:
    """A certified ball plus how it was produced.

    ``tail_bound`` is the rigorous truncation bound that was folded into
    ``value.rad``.  ``tail_estimate`` is only set by ``gamma_direct``: that
    series is reproduced for comparison purposes and deliberately reports an
    order-of-magnitude tail estimate instead of certifying one.
    """

    value: BallReal
    rep: str
    terms_used: int
    tail_bound: mpfr
    tail_estimate: Optional[mpfr] = None


_ZERO = mpfr(0)


def _pow2_upper(expo: Fraction) -> mpfr:
    return _RUP.pow(mpfr(2), _rup_frac(expo))


def _int_pow_upper(base: int, expo: Fraction) -> mpfr:
    # base >= 2: the power is increasing in the exponent
    return _RUP.pow(mpfr(base), _rup_frac(expo))


def _le_eps(bound: mpfr, eps: Fraction) -> bool:
    return bound <= mpq(eps.numerator, eps.denominator)


# ---------------------------------------------------------------------------
# h(k): direct representation
# ---------------------------------------------------------------------------

def h_direct_tail_bound(k: KLike, n_last: int) -> mpfr:
    """Upper bound for h(k) - h_N(k) after summing n = 2..n_last."""
    kf = KParam.of(k).value
    a = n_last + 1
    first = _int_pow_upper(a, -kf)
    second = _RUP.div(_int_pow_upper(a, 1 - kf), _rdn_frac(kf - 1))
    den = _RDN.sub(mpfr(1), _int_pow_upper(a, -2 * kf))
    return _RUP.div(_RUP.add(first, second), den)


def _pick_direct_n(kf: Fraction, eps: Fraction, cap: int) -> int:
    # policy guess from (N+1)^(1-k)/(k-1) ~ eps/2, then grow to the
    # rigorous bound or the cap
    kfl = float(kf)
    lg_eps = -(len(str(eps.denominator)) - len(str(eps.numerator)))
    guess = 10.0 ** ((lg_eps - math.log10(2.0 * (kfl - 1.0))) / (1.0 - kfl))
    n = min(cap, max(4, math.ceil(guess)))
    while n < cap and not _le_eps(h_direct_tail_bound(kf, n), eps):
        n = min(cap, n * 2)
    return n


def h_partial(k: KLike, n_last: int, ctx: PrecisionContext) -> BallReal:
    """Plain partial sum h_N(k) = sum_{n=2}^{N} arctanh(n^-k), no tail."""
    kp = KParam.of(k)
    total = BallReal.exact_zero()
    for n in range(2, n_last + 1):
        total = total.add(int_power_ball(n, -kp.value, ctx).arctanh(ctx), ctx)
    return total


def h_direct(
    k: KLike, ctx: PrecisionContext, max_terms: Optional[int] = None
) -> SeriesResult:
    """h(k) by its defining sum with the certified truncation bound.

    When the inverted bound asks for more than ``max_terms`` terms (always
    the case for small k at high precision), the sum stops at the cap and
    the radius honestly carries the larger tail bound.
    """
    kp = KParam.of(k)
    cap = max_terms or DEFAULT_TERM_CAP
    n_last = _pick_direct_n(kp.value, ctx.series_eps(), cap)
    total = h_partial(kp, n_last, ctx)
    tail = h_direct_tail_bound(kp, n_last)
    return SeriesResult(total.widen(tail), REP_DIRECT, n_last - 1, tail)


# ---------------------------------------------------------------------------
# h(k): zeta-series representation
# ---------------------------------------------------------------------------

def _zeta_series_tail(kf: Fraction, m_last: int) -> mpfr:
    return _RUP.mul(_rup_frac(Fraction(4, 3)), _pow2_upper(-(2 * m_last + 3) * kf))


def h_zeta_series(k: KLike, ctx: PrecisionContext) -> SeriesResult:
    """h(k) = sum_{m=0}^{M} [zeta((2m+1)k) - 1]/(2m+1), remainder
    |R_M| <= (4/3) 2^(-(2M+3)k); the bound is proven for k >= 2 only."""
    kp = KParam.of(k)
    if kp.value < 2:
        raise DomainError(
            "zeta-series tail bound is unsupported for k < 2 "
            "(the direct representation remains available)",
            kp.value,
        )
    eps = ctx.series_eps()
    kfl = float(kp.value)
    d = len(str(eps.denominator)) - 1
    m_last = max(0, math.ceil(((d * math.log2(10) + 0.42) / kfl - 3) / 2))
    while not _le_eps(_zeta_series_tail(kp.value, m_last), eps):
        m_last += 1
    total = BallReal.exact_zero()
    for m in range(m_last + 1):
        z = zeta_minus_one((2 * m + 1) * kp.value, ctx)
        total = total.add(z.div_int(2 * m + 1, ctx), ctx)
    tail = _zeta_series_tail(kp.value, m_last)
    return SeriesResult(total.widen(tail), REP_ZETA_SERIES, m_last + 1, tail)


# ---------------------------------------------------------------------------
# infinite products g and f, and h through them
# ---------------------------------------------------------------------------

def _log_product_tail(kf: Fraction, n_last: int) -> mpfr:
    num = _RUP.mul(mpfr(2), _pow2_upper(-kf * (n_last + 1)))
    den = _RDN.mul(mpfr(n_last + 1), _RDN.sub(mpfr(1), _pow2_upper(-kf)))
    return _RUP.div(num, den)


def _pick_product_n(kf: Fraction, eps: Fraction) -> int:
    d = len(str(eps.denominator)) - 1
    n = max(2, math.ceil(d * math.log2(10) / float(kf)))
    while not _le_eps(_log_product_tail(kf, n), eps):
        n += 2
    return n


def _log_g(k: int, ctx: PrecisionContext) -> tuple[BallReal, int, mpfr]:
    kf = Fraction(k)
    eps = ctx.series_eps()
    n_last = _pick_product_n(kf, eps)
    total = BallReal.exact_zero()
    for n in range(1, n_last + 1):
        total = total.add(zeta_minus_one(k * n, ctx).div_int(n, ctx), ctx)
    tail = _log_product_tail(kf, n_last)
    return total.neg().widen(tail), n_last, tail


def g_product(k: KLike, ctx: PrecisionContext) -> SeriesResult:
    """g(k) = prod_{n>=2} (1 - n^-k) via ln g(k) = -sum (zeta(kn)-1)/n."""
    ki = KParam.of(k).require_integer_ge2("g_product")
    lng, n_last, ln_tail = _log_g(ki, ctx)
    value = lng.exp(ctx)
    out_tail = _RUP.mul(_RUP.exp(_RUP.add(lng.mid, lng.rad)), ln_tail)
    return SeriesResult(value, REP_PRODUCT, n_last, out_tail)


def f_product(k: KLike, ctx: PrecisionContext) -> SeriesResult:
    """f(k) = prod_{n>=1} (1 + n^-k) via
    ln f(k) = ln 2 + sum (-1)^(n+1) (zeta(kn)-1)/n."""
    ki = KParam.of(k).require_integer_ge2("f_product")
    kf = Fraction(ki)
    eps = ctx.series_eps()
    n_last = _pick_product_n(kf, eps)
    total = ln2_ball(ctx)
    for n in range(1, n_last + 1):
        term = zeta_minus_one(ki * n, ctx).div_int(n, ctx)
        total = total.add(term if n % 2 == 1 else term.neg(), ctx)
    ln_tail = _log_product_tail(kf, n_last)
    lnf = total.widen(ln_tail)
    value = lnf.exp(ctx)
    out_tail = _RUP.mul(_RUP.exp(_RUP.add(lnf.mid, lnf.rad)), ln_tail)
    return SeriesResult(value, REP_PRODUCT, n_last, out_tail)


def h_product(k: KLike, ctx: PrecisionContext) -> SeriesResult:
    """h(k) = (1/2) ln( g(2k) / g(k)^2 )."""
    ki = KParam.of(k).require_integer_ge2("h_product")
    g2k = g_product(2 * ki, ctx)
    gk = g_product(ki, ctx)
    ratio = g2k.value.div(gk.value.square(ctx), ctx)
    value = ratio.ln(ctx).div_int(2, ctx)
    return SeriesResult(
        value, REP_PRODUCT, g2k.terms_used + gk.terms_used, _ZERO
    )


def h_value(k: KLike, ctx: PrecisionContext, rep: Optional[str] = None) -> SeriesResult:
    """Dispatch on representation; the zeta series is the default certified
    path, with the direct sum as fallback for non-integer k in (1, 2)."""
    kp = KParam.of(k)
    if rep is None:
        rep = REP_ZETA_SERIES if kp.value >= 2 else REP_DIRECT
    if rep == REP_DIRECT:
        return h_direct(kp, ctx)
    if rep == REP_ZETA_SERIES:
        return h_zeta_series(kp, ctx)
    if rep == REP_PRODUCT:
        return h_product(kp, ctx)
    if rep == REP_CLOSED_FORM:
        if kp.is_integer and kp.value == 3:
            return h3_closed(ctx)
        if kp.is_integer and kp.value == 2:
            return h2_closed(ctx)
        raise DomainError("closed form implemented only for k = 2 and k = 3", kp.value)
    raise ValueError(f"unknown representation {rep!r}")


# ---------------------------------------------------------------------------
# companion series A, E, B
# ---------------------------------------------------------------------------

def companions(k: KLike, which: str, ctx: PrecisionContext) -> SeriesResult:
    """A(k) = sum (zeta(nk)-1)/n, E(k) = sum (zeta(2nk)-1)/(2n),
    B(k) = sum (-1)^(n+1) (zeta(nk)-1)/n.

    Each is computed both as its truncated zeta series and as its closed log
    form (A = -ln g(k), E = -(1/2) ln g(2k), B = ln(f(k)/2)); the returned
    ball keeps the series midpoint with the radius widened to cover the
    closed-form ball as well.
    """
    ki = KParam.of(k).require_integer_ge2("companions")
    kf = Fraction(ki)
    eps = ctx.series_eps()
    which = which.upper()
    if which not in ("A", "E", "B"):
        raise ValueError("companion selector must be A, E, or B")

    if which == "E":
        n_last = _pick_product_n(2 * kf, eps)
        total = BallReal.exact_zero()
        for n in range(1, n_last + 1):
            total = total.add(zeta_minus_one(2 * ki * n, ctx).div_int(2 * n, ctx), ctx)
        tail = _RUP.div(_log_product_tail(2 * kf, n_last), mpfr(2))
        closed = g_product(2 * ki, ctx).value.ln(ctx).div_int(2, ctx).neg()
    else:
        n_last = _pick_product_n(kf, eps)
        total = BallReal.exact_zero()
        for n in range(1, n_last + 1):
            term = zeta_minus_one(ki * n, ctx).div_int(n, ctx)
            if which == "B" and n % 2 == 0:
                term = term.neg()
            total = total.add(term, ctx)
        tail = _log_product_tail(kf, n_last)
        if which == "A":
            closed = g_product(ki, ctx).value.ln(ctx).neg()
        else:
            closed = f_product(ki, ctx).value.div_int(2, ctx).ln(ctx)

    series = total.widen(tail)
    return SeriesResult(series.hull(closed), REP_ZETA_SERIES, n_last, tail)


# ---------------------------------------------------------------------------
# correction function C(k)
# ---------------------------------------------------------------------------

def _correction_tail(kf: Fraction, n_last: int) -> mpfr:
    s_next = kf * (2 * n_last + 3)
    front = _RUP.div(
        _RUP.add(mpfr(1), _RUP.div(mpfr(2), _rdn_frac(s_next - 1))),
        mpfr(2 * n_last + 3),
    )
    geom = _RUP.div(
        _pow2_upper(-s_next),
        _RDN.sub(mpfr(1), _pow2_upper(-2 * kf)),
    )
    return _RUP.mul(front, geom)


def correction_c(
    k: KLike, ctx: PrecisionContext, n_terms: Optional[int] = None
) -> SeriesResult:
    """C(k) = sum_{n>=1} [zeta(k(2n+1)) - 1] / (2n+1) for real k >= 1.

    ``n_terms`` forces the truncation point (the tail bound still goes into
    the radius), which the Apery-constant check uses.
    """
    kf = k.value if isinstance(k, KParam) else Fraction(k)
    if kf < 1:
        raise DomainError("correction_c requires k >= 1", k)
    if n_terms is not None:
        n_last = max(1, n_terms)
    else:
        eps = ctx.series_eps()
        d = len(str(eps.denominator)) - 1
        n_last = max(1, math.ceil((d * math.log2(10) / float(kf) - 3) / 2))
        while not _le_eps(_correction_tail(kf, n_last), eps):
            n_last += 1
    total = BallReal.exact_zero()
    for n in range(1, n_last + 1):
        z = zeta_minus_one(kf * (2 * n + 1), ctx)
        total = total.add(z.div_int(2 * n + 1, ctx), ctx)
    tail = _correction_tail(kf, n_last)
    return SeriesResult(total.widen(tail), REP_ZETA_SERIES, n_last, tail)


# ---------------------------------------------------------------------------
# Euler-Mascheroni constant
# ---------------------------------------------------------------------------

def gamma_direct(n_terms: int, ctx: PrecisionContext) -> SeriesResult:
    """gamma approximated by 1 - (1/2) ln 2 - sum_{n=2}^{N} (arctanh(1/n) - 1/n).

    The partial sum is computed as a ball (rounding only); the O(N^-2) tail
    is reported as ``tail_estimate`` and deliberately NOT folded into the
    radius: this slowly convergent form exists for rate comparison, not as a
    certified route to gamma.
    """
    if n_terms < 2:
        raise DomainError("gamma_direct needs the sum to start at n = 2", n_terms)
    total = BallReal.exact_zero()
    for n in range(2, n_terms + 1):
        x = BallReal.from_fraction(Fraction(1, n), ctx)
        total = total.add(x.arctanh(ctx).sub(x, ctx), ctx)
    value = (
        BallReal.from_int(1, ctx)
        .sub(ln2_ball(ctx).div_int(2, ctx), ctx)
        .sub(total, ctx)
    )
    estimate = _rup_frac(Fraction(1, 6 * n_terms * n_terms))
    return SeriesResult(value, REP_DIRECT, n_terms - 1, _ZERO, estimate)


def gamma_accel_tail_bound(n_terms: int) -> Fraction:
    """Certified bound for the tail of the accelerated gamma series.

    The generic geometric bound is (4/3) 2^-(2N+3).  For N >= 4 the sharper
    chain  tail <= (4/3) (1 + 1/(N+1)) 2^-(2N+3) / (2N+3) <= (1/3) 2^-(2N+4)
    holds (the last step is 8(N+2)/(N+1) <= 2N+3), and that is the constant
    the comparison table reports.
    """
    if n_terms >= 4:
        return Fraction(1, 3 * 2 ** (2 * n_terms + 4))
    return Fraction(4, 3 * 2 ** (2 * n_terms + 3))


def gamma_accel(n_terms: int, ctx: PrecisionContext) -> SeriesResult:
    """gamma = 1 - (1/2) ln 2 - sum_{m=1}^{N} [zeta(2m+1) - 1]/(2m+1), with
    the certified geometric tail bound folded into the radius."""
    if n_terms < 1:
        raise DomainError("gamma_accel needs at least one term", n_terms)
    # terms below the rounding floor cannot move the midpoint; skip them and
    # charge their geometric bound to the radius instead
    m_eff = min(n_terms, ctx.working_precision // 2 + 8)
    total = BallReal.exact_zero()
    for m in range(1, m_eff + 1):
        total = total.add(zeta_minus_one(2 * m + 1, ctx).div_int(2 * m + 1, ctx), ctx)
    if m_eff < n_terms:
        total = total.widen(_rup_frac(Fraction(4, 3 * 2 ** (2 * m_eff + 3))))
    value = (
        BallReal.from_int(1, ctx)
        .sub(ln2_ball(ctx).div_int(2, ctx), ctx)
        .sub(total, ctx)
    )
    tail = _rup_frac(gamma_accel_tail_bound(n_terms))
    return SeriesResult(value.widen(tail), REP_ZETA_SERIES, m_eff, tail)


# ---------------------------------------------------------------------------
# derivatives and differences of h
# ---------------------------------------------------------------------------

def _deriv_tail(kf: Fraction, order: int, n_last: int) -> mpfr:
    # sum_{n>N} (ln n)^j n^-k * (factor) bounded by the n = N+1 term plus
    # the closed-form integral of x^-k (ln x)^j from N+1
    a = n_last + 1
    ln_a = _RUP.log(mpfr(a))
    k1 = _rdn_frac(kf - 1)
    pow_a = _int_pow_upper(a, -kf)
    pow_a1 = _int_pow_upper(a, 1 - kf)
    k1_sq_low = _RDN.square(k1)
    if order == 1:
        integral = _RUP.mul(
            pow_a1,
            _RUP.add(_RUP.div(ln_a, k1), _RUP.div(mpfr(1), k1_sq_low)),
        )
        series = _RUP.add(_RUP.mul(ln_a, pow_a), integral)
        den = _RDN.sub(mpfr(1), _int_pow_upper(a, -2 * kf))
        return _RUP.div(series, den)
    ln_a2 = _RUP.square(ln_a)
    integral = _RUP.mul(
        pow_a1,
        _RUP.add(
            _RUP.div(ln_a2, k1),
            _RUP.add(
                _RUP.div(_RUP.mul(mpfr(2), ln_a), k1_sq_low),
                _RUP.div(mpfr(2), _RDN.mul(k1, k1_sq_low)),
            ),
        ),
    )
    series = _RUP.add(_RUP.mul(ln_a2, pow_a), integral)
    t2 = _int_pow_upper(a, -2 * kf)
    num = _RUP.mul(series, _RUP.add(mpfr(1), t2))
    den = _RDN.square(_RDN.sub(mpfr(1), t2))
    return _RUP.div(num, den)


def h_derivative(
    k: KLike,
    order: int,
    ctx: PrecisionContext,
    max_terms: Optional[int] = None,
) -> SeriesResult:
    """h'(k) = -sum (ln n) n^-k / (1 - n^-2k)   (order 1, negative), or
    h''(k) = sum (ln n)^2 n^-k (1 + n^-2k)/(1 - n^-2k)^2  (order 2, positive).

    Direct summation with the integral-comparison tail; like ``h_direct``
    this is capped, so radii at small k reflect the budget, not the target.
    """
    if order not in (1, 2):
        raise ValueError("derivative order must be 1 or 2")
    kp = KParam.of(k)
    kf = kp.value
    cap = max_terms or DEFAULT_TERM_CAP
    eps = ctx.series_eps()
    kfl = float(kf)
    lg_eps = -(len(str(eps.denominator)) - 1)
    guess = 10.0 ** (lg_eps / (1.0 - kfl))
    n_last = min(cap, max(16, math.ceil(guess)))
    while n_last < cap and not _le_eps(_deriv_tail(kf, order, n_last), eps):
        n_last = min(cap, n_last * 2)

    one = BallReal.from_int(1, ctx)
    total = BallReal.exact_zero()
    for n in range(2, n_last + 1):
        t = int_power_ball(n, -kf, ctx)
        ln_n = BallReal.from_int(n, ctx).ln(ctx)
        t2 = t.square(ctx)
        if order == 1:
            term = ln_n.mul(t, ctx).div(one.sub(t2, ctx), ctx)
        else:
            num = ln_n.square(ctx).mul(t, ctx).mul(one.add(t2, ctx), ctx)
            term = num.div(one.sub(t2, ctx).square(ctx), ctx)
        total = total.add(term, ctx)
    tail = _deriv_tail(kf, order, n_last)
    value = total.widen(tail)
    if order == 1:
        value = value.neg()
    return SeriesResult(value, REP_DIRECT, n_last - 1, tail)


def delta_h(k: KLike, ctx: PrecisionContext) -> SeriesResult:
    """Forward difference h(k) - h(k+1), both sides via the zeta series."""
    ki = KParam.of(k).require_integer_ge2("delta_h")
    a = h_zeta_series(ki, ctx)
    b = h_zeta_series(ki + 1, ctx)
    return SeriesResult(
        a.value.sub(b.value, ctx),
        REP_ZETA_SERIES,
        a.terms_used + b.terms_used,
        _RUP.add(a.tail_bound, b.tail_bound),
    )


# ---------------------------------------------------------------------------
# Apery's constant and the special closed forms
# ---------------------------------------------------------------------------

def apery_zeta3(ctx: PrecisionContext, c3_terms: Optional[int] = None) -> SeriesResult:
    """zeta(3) = 1 + (1/2) ln(3/2) - C(3), with C(3) certified."""
    c3 = correction_c(3, ctx, n_terms=c3_terms)
    value = (
        BallReal.from_int(1, ctx)
        .add(h3_closed(ctx).value, ctx)
        .sub(c3.value, ctx)
    )
    return SeriesResult(value, REP_CLOSED_FORM, c3.terms_used, c3.tail_bound)


def g2_closed(ctx: PrecisionContext) -> SeriesResult:
    """g(2) = 1/2 exactly."""
    return SeriesResult(
        BallReal.from_fraction(Fraction(1, 2), ctx), REP_CLOSED_FORM, 1, _ZERO
    )


def f2_closed(ctx: PrecisionContext) -> SeriesResult:
    """f(2) = sinh(pi) / pi."""
    p = pi_ball(ctx)
    return SeriesResult(p.sinh(ctx).div(p, ctx), REP_CLOSED_FORM, 1, _ZERO)


def h2_closed(ctx: PrecisionContext) -> SeriesResult:
    """h(2) = (1/2) ln(sinh(pi)/pi)."""
    return SeriesResult(
        f2_closed(ctx).value.ln(ctx).div_int(2, ctx), REP_CLOSED_FORM, 1, _ZERO
    )


def h3_closed(ctx: PrecisionContext) -> SeriesResult:
    """h(3) = (1/2) ln(3/2), the telescoped value."""
    value = BallReal.from_fraction(Fraction(3, 2), ctx).ln(ctx).div_int(2, ctx)
    return SeriesResult(value, REP_CLOSED_FORM, 1, _ZERO)
