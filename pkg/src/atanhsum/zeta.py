"""Certified evaluation of zeta(s) - 1 for real s >= 2.

Two strategies, selected by ``zeta_strategy``:

  * DirectSum(N): sum_{m=2}^{N} m^-s plus the integral tail bound
        sum_{m>N} m^-s  <=  (N+1)^-s + (N+1)^(1-s) / (s-1),
    used when 2^(1-s) is already below the precision goal (large s), so a
    handful of terms suffice.

  * EulerMaclaurin(N, M):
        zeta(s) - 1 = sum_{m=2}^{N-1} m^-s + N^(1-s)/(s-1) + N^-s/2
                      + sum_{j=1}^{M} B_2j/(2j)! (s)_{2j-1} N^(1-s-2j) + R,
    with the classical first-omitted-term remainder bound for real s:
        |R| <= |B_{2M+2}|/(2M+2)! * (s)_{2M+1} * N^(-s-2M-1).

The subtraction of 1 never happens: the m = 1 term is simply left out, so
there is no cancellation for large s.  Every returned ball's radius covers
the truncation bound, the remainder bound, and accumulated rounding.

Results are cached per (s, working precision, tolerance) for reuse across
the series evaluators, which hammer the same arguments.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from gmpy2 import mpfr, mpq, mpz

from .balls import (
    BallReal,
    DomainError,
    PrecisionContext,
    _RUP,
    _rdn_frac,
    _rup_frac,
    int_power_ball,
)
from .bernoulli import bernoulli

__all__ = ["ZetaPlan", "zeta_strategy", "zeta_minus_one", "clear_zeta_cache"]

RealArg = Union[int, float, Fraction]

_cache_lock = threading.Lock()
_cache: dict = {}


@dataclass(frozen=True)
class ZetaPlan:
    """Evaluation plan: ``kind`` is 'direct' or 'euler-maclaurin'."""

    kind: str
    n_terms: int
    bernoulli_pairs: int = 0

    def __str__(self):
        if self.kind == "direct":
            return f"DirectSum(N={self.n_terms})"
        return f"EulerMaclaurin(N={self.n_terms}, M={self.bernoulli_pairs})"


def _as_fraction(s: RealArg) -> Fraction:
    f = Fraction(s)
    if f < 2:
        raise DomainError("zeta_minus_one requires s >= 2", s)
    return f


def _direct_tail_upper(N: int, s: Fraction) -> mpfr:
    # (N+1)^-s + (N+1)^(1-s)/(s-1), rounded outward; both powers are
    # decreasing in s, so exponents enter as upper bounds
    a = mpfr(N + 1)
    first = _RUP.pow(a, _rup_frac(-s))
    second = _RUP.div(_RUP.pow(a, _rup_frac(1 - s)), _rdn_frac(s - 1))
    return _RUP.add(first, second)


def _pochhammer(s: Fraction, count: int) -> Fraction:
    out = Fraction(1)
    for i in range(count):
        out *= s + i
    return out


def _em_remainder_upper(s: Fraction, N: int, M: int) -> mpfr:
    coef = abs(bernoulli(2 * M + 2)) / math.factorial(2 * M + 2)
    coef *= _pochhammer(s, 2 * M + 1)
    expo = -(s + 2 * M + 1)
    # N >= 2, so an upper bound on the (negative) exponent bounds the power.
    power = _RUP.pow(mpfr(N), _rup_frac(expo))
    return _RUP.mul(_rup_frac(coef), power)


def zeta_strategy(s: RealArg, ctx: PrecisionContext) -> ZetaPlan:
    """Pick DirectSum for large s, Euler-Maclaurin otherwise.

    The threshold follows 2^(1-s) < 10^-(target+guard): past it the defining
    series collapses in a handful of terms and the Bernoulli machinery is
    pure overhead.
    """
    sf = _as_fraction(s)
    eps = ctx.series_eps()
    digits_goal = ctx.target_digits + ctx.guard_digits
    if (float(sf) - 1.0) * math.log10(2.0) > digits_goal:
        n = 2
        while _direct_tail_upper(n, sf) > mpq(eps.numerator, eps.denominator):
            n += 1
        return ZetaPlan("direct", n)

    sfl = float(sf)
    # eps is 1/10^d; avoid float overflow on the big denominator
    lg_eps = -(len(str(eps.denominator)) - len(str(eps.numerator)))
    best: Optional[tuple] = None
    for m in range(2, 257, 2):
        # |B_{2m+2}|/(2m+2)! ~ 2/(2 pi)^(2m+2); pochhammer via lgamma
        lg_coef = math.log10(2.0) - (2 * m + 2) * math.log10(2 * math.pi)
        lg_poch = (math.lgamma(sfl + 2 * m + 1) - math.lgamma(sfl)) / math.log(10.0)
        need = (lg_coef + lg_poch - lg_eps) / (sfl + 2 * m + 1)
        n = max(2, math.ceil(10.0 ** min(need, 9.0)))
        cost = n + 3 * m
        if best is None or cost < best[0]:
            best = (cost, n, m)
    _, n, m = best
    eps_q = mpq(eps.numerator, eps.denominator)
    while _em_remainder_upper(sf, n, m) > eps_q:
        n = n + max(2, n // 4)
    return ZetaPlan("euler-maclaurin", n, m)


def _eval_direct(s: Fraction, plan: ZetaPlan, ctx: PrecisionContext) -> BallReal:
    total = BallReal.exact_zero()
    for m in range(2, plan.n_terms + 1):
        total = total.add(int_power_ball(m, -s, ctx), ctx)
    return total.widen(_direct_tail_upper(plan.n_terms, s))


def _eval_euler_maclaurin(s: Fraction, plan: ZetaPlan, ctx: PrecisionContext) -> BallReal:
    N, M = plan.n_terms, plan.bernoulli_pairs
    total = BallReal.exact_zero()
    for m in range(2, N):
        total = total.add(int_power_ball(m, -s, ctx), ctx)

    if s.denominator == 1:
        # integer s: every correction term is an exact rational
        si = int(s)
        corr = Fraction(1, N ** (si - 1) * (si - 1)) + Fraction(1, 2 * N**si)
        for j in range(1, M + 1):
            coef = bernoulli(2 * j) / math.factorial(2 * j) * _pochhammer(s, 2 * j - 1)
            corr += coef * Fraction(1, N ** (si + 2 * j - 1))
        total = total.add(BallReal.from_fraction(corr, ctx), ctx)
    else:
        n_pow = int_power_ball(N, Fraction(1) - s, ctx)  # N^(1-s)
        s_minus_1 = BallReal.from_fraction(s - 1, ctx)
        total = total.add(n_pow.div(s_minus_1, ctx), ctx)
        n_inv_s = int_power_ball(N, -s, ctx)
        total = total.add(n_inv_s.div_int(2, ctx), ctx)
        n_sq_inv = BallReal.from_fraction(Fraction(1, N * N), ctx)
        running = n_pow  # N^(1-s-2j) built up by exact 1/N^2 multiplications
        for j in range(1, M + 1):
            running = running.mul(n_sq_inv, ctx)
            coef = bernoulli(2 * j) / math.factorial(2 * j) * _pochhammer(s, 2 * j - 1)
            total = total.add(running.mul(BallReal.from_fraction(coef, ctx), ctx), ctx)

    return total.widen(_em_remainder_upper(s, N, M))


def zeta_minus_one(
    s: RealArg,
    ctx: PrecisionContext,
    plan: Optional[ZetaPlan] = None,
    use_cache: bool = True,
) -> BallReal:
    """Ball containing zeta(s) - 1 with radius <= 10^-target_digits."""
    sf = _as_fraction(s)
    key = (sf.numerator, sf.denominator, ctx.working_precision, ctx.target_digits)
    if plan is None and use_cache:
        with _cache_lock:
            hit = _cache.get(key)
        if hit is not None:
            return hit

    chosen = plan or zeta_strategy(sf, ctx)
    goal = mpq(1, 10**ctx.target_digits)
    for _ in range(64):
        if chosen.kind == "direct":
            ball = _eval_direct(sf, chosen, ctx)
        else:
            ball = _eval_euler_maclaurin(sf, chosen, ctx)
        if plan is not None or mpq(ball.rad) <= goal:
            break
        # widen the plan until the certified radius meets the contract
        chosen = ZetaPlan(
            chosen.kind,
            chosen.n_terms + max(2, chosen.n_terms // 2),
            chosen.bernoulli_pairs,
        )
    else:  # pragma: no cover - the growth loop converges long before this
        raise DomainError("could not certify zeta(s)-1 to target digits", s)

    if plan is None and use_cache:
        with _cache_lock:
            _cache[key] = ball
    return ball


def clear_zeta_cache() -> None:
    with _cache_lock:
        _cache.clear()
