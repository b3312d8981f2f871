"""Arbitrary-precision ball arithmetic with rigorous error radii.

A ball is a pair (mid, rad): an MPFR midpoint at the working precision and a
non-negative radius such that the exact real being represented lies in
[mid - rad, mid + rad].  Every operation returns a ball that contains the
exact image of its input balls:

  * midpoints are computed with MPFR round-to-nearest, so the rounding error
    is at most half an ulp, bounded above by |mid| * 2^-p;
  * the argument radii are propagated through a derivative bound evaluated
    with outward (directed) rounding.

Radius bookkeeping runs in a dedicated low-precision MPFR context with the
widest exponent range gmpy2 allows, so radii like 1e-60000 neither underflow
nor overflow.  All values are immutable; the module is safe for concurrent
use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import gmpy2
from gmpy2 import mpfr, mpq, mpz

__all__ = [
    "BallReal",
    "DomainError",
    "PrecisionContext",
    "ball_arith",
    "elementary",
    "ln2_ball",
    "pi_ball",
]

_EMIN = gmpy2.get_emin_min()
_EMAX = gmpy2.get_emax_max()

# Directed contexts for radius and bound arithmetic.  64 bits is far more
# than a radius needs; what matters is the rounding direction.
_RUP = gmpy2.context(precision=64, round=gmpy2.RoundUp, emin=_EMIN, emax=_EMAX)
_RDN = gmpy2.context(precision=64, round=gmpy2.RoundDown, emin=_EMIN, emax=_EMAX)

_ZERO = mpfr(0)

Scalar = Union[int, Fraction, mpz, mpq]


class DomainError(ValueError):
    """An operation was applied outside its certified domain.

    Carries the offending operand(s) so callers can report the violating
    ball rather than a bare message.
    """

    def __init__(self, message: str, *operands):
        super().__init__(message)
        self.operands = operands


@lru_cache(maxsize=64)
def _near_ctx(precision: int):
    return gmpy2.context(
        precision=precision,
        round=gmpy2.RoundToNearest,
        emin=_EMIN,
        emax=_EMAX,
    )


# gmpy2's bare operators (-x, abs(x)) round through the *thread* context at
# its default 53-bit precision; negation and absolute value must instead be
# performed losslessly at the operand's own precision.

@lru_cache(maxsize=64)
def _exact_ctx(precision: int):
    return gmpy2.context(precision=precision, emin=_EMIN, emax=_EMAX)


def _neg_exact(x: mpfr) -> mpfr:
    return _exact_ctx(x.precision).minus(x)


def _abs_exact(x: mpfr) -> mpfr:
    return _exact_ctx(x.precision).abs(x)


@dataclass(frozen=True)
class PrecisionContext:
    """Requested output precision plus the derived working precision.

    ``target_digits`` is what the caller wants certified (decimal digits);
    ``guard_digits`` absorbs cancellation (the default 20 covers the
    zeta-minus-one and log-ratio forms used throughout);
    ``working_precision`` is the binary precision of ball midpoints.
    """

    target_digits: int
    guard_digits: int = 20
    working_precision: int = 0

    def __post_init__(self):
        if self.target_digits < 1:
            raise ValueError("target_digits must be positive")
        if self.guard_digits < 0:
            raise ValueError("guard_digits must be non-negative")
        if self.working_precision == 0:
            bits = math.ceil(
                (self.target_digits + self.guard_digits) * math.log2(10)
            ) + 16
            object.__setattr__(self, "working_precision", bits)
        minimum = math.ceil(self.target_digits * math.log2(10))
        if self.working_precision < minimum:
            raise ValueError(
                "working_precision %d cannot certify %d digits"
                % (self.working_precision, self.target_digits)
            )

    @property
    def ctx(self):
        """The MPFR round-to-nearest context for midpoints."""
        return _near_ctx(self.working_precision)

    def series_eps(self) -> Fraction:
        """Truncation tolerance for series tails.

        Half the guard digits sit between the tail target and the certified
        output, leaving the rest to accumulated rounding.
        """
        extra = max(2, self.guard_digits // 2)
        return Fraction(1, 10 ** (self.target_digits + extra))

    def radius_goal(self) -> Fraction:
        return Fraction(1, 10 ** self.target_digits)


def _half_ulp(mid: mpfr, precision: int) -> mpfr:
    # |mid| * 2^-p bounds half an ulp of a round-to-nearest result; exact
    # results (mid == 0 only occurs for exact zeros here) contribute nothing.
    if mid == 0:
        return _ZERO
    return _RUP.div_2exp(_RUP.abs(mid), precision)


def _rup_frac(q: Fraction) -> mpfr:
    return _RUP.div(mpz(q.numerator), mpz(q.denominator))


def _rdn_frac(q: Fraction) -> mpfr:
    return _RDN.div(mpz(q.numerator), mpz(q.denominator))


class BallReal:
    """Midpoint-radius real with containment-preserving arithmetic."""

    __slots__ = ("mid", "rad")

    def __init__(self, mid: mpfr, rad: mpfr = _ZERO):
        if rad < 0:
            raise ValueError("radius must be non-negative")
        object.__setattr__(self, "mid", mid)
        object.__setattr__(self, "rad", rad)

    def __setattr__(self, name, value):  # immutability
        raise AttributeError("BallReal is immutable")

    def __repr__(self):
        return f"BallReal({self.mid!r} ± {self.rad!r})"

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_int(n: int, ctx: PrecisionContext) -> "BallReal":
        mid = mpfr(n, precision=ctx.working_precision)
        rad = _ZERO if mid == n else _half_ulp(mid, ctx.working_precision)
        return BallReal(mid, rad)

    @staticmethod
    def from_fraction(q: Scalar, ctx: PrecisionContext) -> "BallReal":
        q = Fraction(q) if not isinstance(q, Fraction) else q
        mid = mpfr(mpq(q.numerator, q.denominator), precision=ctx.working_precision)
        rad = _ZERO if mpq(mid) == mpq(q.numerator, q.denominator) else _half_ulp(
            mid, ctx.working_precision
        )
        return BallReal(mid, rad)

    @staticmethod
    def exact_zero() -> "BallReal":
        return BallReal(_ZERO, _ZERO)

    # -- exact interval queries (mpq arithmetic, no rounding slop) --------

    def lower(self) -> mpq:
        return mpq(self.mid) - mpq(self.rad)

    def upper(self) -> mpq:
        return mpq(self.mid) + mpq(self.rad)

    def contains(self, value) -> bool:
        v = mpq(value.numerator, value.denominator) if isinstance(value, Fraction) else mpq(value)
        return self.lower() <= v <= self.upper()

    def contains_ball(self, other: "BallReal") -> bool:
        return self.lower() <= other.lower() and other.upper() <= self.upper()

    def overlaps(self, other: "BallReal") -> bool:
        return self.lower() <= other.upper() and other.lower() <= self.upper()

    def strictly_below(self, other: "BallReal") -> bool:
        """Every point of self lies below every point of other."""
        return self.upper() < other.lower()

    def separation(self, other: "BallReal") -> Fraction:
        """Signed gap between the balls (positive when disjoint)."""
        if self.upper() < other.lower():
            gap = other.lower() - self.upper()
        elif other.upper() < self.lower():
            gap = self.lower() - other.upper()
        else:
            return Fraction(0)
        return Fraction(gap.numerator, gap.denominator)

    def hull(self, other: "BallReal") -> "BallReal":
        """Smallest ball around self.mid covering both balls."""
        span = max(
            abs(mpq(self.mid) - mpq(other.mid)) + mpq(other.rad),
            mpq(self.rad),
        )
        rad = _RUP.div(mpz(span.numerator), mpz(span.denominator))
        return BallReal(self.mid, rad)

    def widen(self, extra: mpfr) -> "BallReal":
        return BallReal(self.mid, _RUP.add(self.rad, extra))

    # -- arithmetic --------------------------------------------------------

    def _maybe_exact(self, other: "BallReal", mid: mpfr, exact: mpq) -> mpfr:
        # Point inputs whose result is exactly representable keep radius 0
        # (integer arithmetic stays exact, per the containment contract).
        if self.rad == 0 and other.rad == 0 and mpq(mid) == exact:
            return _ZERO
        return None

    def add(self, other: "BallReal", ctx: PrecisionContext) -> "BallReal":
        p = ctx.working_precision
        mid = ctx.ctx.add(self.mid, other.mid)
        if self.rad == 0 and other.rad == 0 and mpq(mid) == mpq(self.mid) + mpq(other.mid):
            return BallReal(mid, _ZERO)
        rad = _RUP.add(_RUP.add(self.rad, other.rad), _half_ulp(mid, p))
        return BallReal(mid, rad)

    def sub(self, other: "BallReal", ctx: PrecisionContext) -> "BallReal":
        p = ctx.working_precision
        mid = ctx.ctx.sub(self.mid, other.mid)
        if self.rad == 0 and other.rad == 0 and mpq(mid) == mpq(self.mid) - mpq(other.mid):
            return BallReal(mid, _ZERO)
        rad = _RUP.add(_RUP.add(self.rad, other.rad), _half_ulp(mid, p))
        return BallReal(mid, rad)

    def neg(self) -> "BallReal":
        return BallReal(_neg_exact(self.mid), self.rad)

    def abs_(self) -> "BallReal":
        return BallReal(_abs_exact(self.mid), self.rad)

    def mul(self, other: "BallReal", ctx: PrecisionContext) -> "BallReal":
        p = ctx.working_precision
        mid = ctx.ctx.mul(self.mid, other.mid)
        if self.rad == 0 and other.rad == 0 and mpq(mid) == mpq(self.mid) * mpq(other.mid):
            return BallReal(mid, _ZERO)
        # |a| rb + |b| ra + ra rb, all rounded outward
        rad = _RUP.add(
            _RUP.add(
                _RUP.mul(_RUP.abs(self.mid), other.rad),
                _RUP.mul(_RUP.abs(other.mid), self.rad),
            ),
            _RUP.add(_RUP.mul(self.rad, other.rad), _half_ulp(mid, p)),
        )
        return BallReal(mid, rad)

    def div(self, other: "BallReal", ctx: PrecisionContext) -> "BallReal":
        p = ctx.working_precision
        den_low = _RDN.sub(_RDN.abs(other.mid), other.rad)
        if den_low <= 0:
            raise DomainError("division by a ball containing zero", other)
        mid = ctx.ctx.div(self.mid, other.mid)
        if self.rad == 0 and other.rad == 0:
            if mpq(mid) * mpq(other.mid) == mpq(self.mid):
                return BallReal(mid, _ZERO)
        # |x/y - a/b| <= (ra |b| + |a| rb) / (|b| (|b| - rb))
        num = _RUP.add(
            _RUP.mul(self.rad, _RUP.abs(other.mid)),
            _RUP.mul(_RUP.abs(self.mid), other.rad),
        )
        den = _RDN.mul(_RDN.abs(other.mid), den_low)
        rad = _RUP.add(_RUP.div(num, den), _half_ulp(mid, p))
        return BallReal(mid, rad)

    # fast paths for exact small scalars (series coefficients)

    def div_int(self, n: int, ctx: PrecisionContext) -> "BallReal":
        if n == 0:
            raise DomainError("division by zero", n)
        p = ctx.working_precision
        mid = ctx.ctx.div(self.mid, mpz(n))
        rad = _RUP.add(_RUP.div(self.rad, mpz(abs(n))), _half_ulp(mid, p))
        if self.rad == 0 and mpq(mid) * n == mpq(self.mid):
            rad = _ZERO
        return BallReal(mid, rad)

    def mul_int(self, n: int, ctx: PrecisionContext) -> "BallReal":
        p = ctx.working_precision
        mid = ctx.ctx.mul(self.mid, mpz(n))
        if self.rad == 0 and mpq(mid) == mpq(self.mid) * n:
            return BallReal(mid, _ZERO)
        rad = _RUP.add(_RUP.mul(self.rad, mpz(abs(n))), _half_ulp(mid, p))
        return BallReal(mid, rad)

    def mul_2exp(self, e: int, ctx: PrecisionContext) -> "BallReal":
        # scaling by 2^e is exact in binary
        return BallReal(
            ctx.ctx.mul_2exp(self.mid, e) if e >= 0 else ctx.ctx.div_2exp(self.mid, -e),
            _RUP.mul_2exp(self.rad, e) if e >= 0 else _RUP.div_2exp(self.rad, -e),
        )

    # -- elementary functions ---------------------------------------------

    def ln(self, ctx: PrecisionContext) -> "BallReal":
        low = _RDN.sub(self.mid, self.rad)
        if low <= 0:
            raise DomainError("ln requires a ball strictly above zero", self)
        mid = ctx.ctx.log(self.mid)
        prop = _RUP.div(self.rad, low) if self.rad != 0 else _ZERO
        return BallReal(mid, _RUP.add(prop, _half_ulp(mid, ctx.working_precision)))

    def exp(self, ctx: PrecisionContext) -> "BallReal":
        mid = ctx.ctx.exp(self.mid)
        if self.rad != 0:
            hi = _RUP.exp(_RUP.add(self.mid, self.rad))
            prop = _RUP.mul(hi, self.rad)
        else:
            prop = _ZERO
        return BallReal(mid, _RUP.add(prop, _half_ulp(mid, ctx.working_precision)))

    def arctanh(self, ctx: PrecisionContext) -> "BallReal":
        xhi = _RUP.add(_RUP.abs(self.mid), self.rad)
        if xhi >= 1:
            raise DomainError("arctanh requires the ball inside (-1, 1)", self)
        mid = ctx.ctx.atanh(self.mid)
        if self.rad != 0:
            den = _RDN.sub(mpfr(1), _RUP.square(xhi))
            if den <= 0:
                raise DomainError("arctanh ball too close to +-1 to certify", self)
            prop = _RUP.div(self.rad, den)
        else:
            prop = _ZERO
        return BallReal(mid, _RUP.add(prop, _half_ulp(mid, ctx.working_precision)))

    def sinh(self, ctx: PrecisionContext) -> "BallReal":
        mid = ctx.ctx.sinh(self.mid)
        if self.rad != 0:
            grow = _RUP.cosh(_RUP.add(_RUP.abs(self.mid), self.rad))
            prop = _RUP.mul(grow, self.rad)
        else:
            prop = _ZERO
        return BallReal(mid, _RUP.add(prop, _half_ulp(mid, ctx.working_precision)))

    def square(self, ctx: PrecisionContext) -> "BallReal":
        return self.mul(self, ctx)

    def pow_fraction(self, expo: Fraction, ctx: PrecisionContext) -> "BallReal":
        """self ** expo via exp(expo * ln(self)); requires self > 0."""
        if expo.denominator == 1:
            return self.pow_int(int(expo), ctx)
        e = BallReal.from_fraction(expo, ctx)
        return self.ln(ctx).mul(e, ctx).exp(ctx)

    def pow_int(self, n: int, ctx: PrecisionContext) -> "BallReal":
        if n == 0:
            return BallReal.from_int(1, ctx)
        base = self if n > 0 else BallReal.from_int(1, ctx).div(self, ctx)
        out = None
        b = base
        m = abs(n)
        while m:
            if m & 1:
                out = b if out is None else out.mul(b, ctx)
            m >>= 1
            if m:
                b = b.mul(b, ctx)
        return out


def int_power_ball(base: int, expo: Fraction, ctx: PrecisionContext) -> BallReal:
    """base**expo as a ball (base >= 1); exact-rational fast path for integer expo."""
    if expo.denominator == 1:
        e = int(expo)
        if e >= 0:
            return BallReal.from_int(base**e, ctx)
        return BallReal.from_fraction(Fraction(1, base**-e), ctx)
    ln_base = BallReal.from_int(base, ctx).ln(ctx)
    return ln_base.mul(BallReal.from_fraction(expo, ctx), ctx).exp(ctx)


def ball_arith(a: BallReal, b: BallReal, op: str, ctx: PrecisionContext) -> BallReal:
    """Dispatch {add, sub, mul, div} on balls; div rejects balls containing 0."""
    try:
        method = {"add": a.add, "sub": a.sub, "mul": a.mul, "div": a.div}[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return method(b, ctx)


def elementary(x: BallReal, fn: str, ctx: PrecisionContext) -> BallReal:
    """Dispatch {ln, exp, arctanh, sinh} with domain checking."""
    try:
        method = {"ln": x.ln, "exp": x.exp, "arctanh": x.arctanh, "sinh": x.sinh}[fn]
    except KeyError:
        raise ValueError(f"unknown function {fn!r}") from None
    return method(ctx)


def pi_ball(ctx: PrecisionContext) -> BallReal:
    mid = ctx.ctx.const_pi()
    return BallReal(mid, _half_ulp(mid, ctx.working_precision))


def ln2_ball(ctx: PrecisionContext) -> BallReal:
    mid = ctx.ctx.const_log2()
    return BallReal(mid, _half_ulp(mid, ctx.working_precision))
