"""Command-line interface: compute quantities, run the verification suite,
render the built-in reference tables, and stream certified digits.

Exit codes are fixed for scripting:
  0 success / all checks pass
  1 a verification check failed
  2 usage error (bad quantity, k out of domain, ...)
  3 requested precision not achievable within resource limits
  4 a verification check was inconclusive (raise digits and retry)

Printed values are rounded half-even on the ball midpoint and truncated to
the decimal places certified by the radius, so no displayed digit can be
wrong.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from gmpy2 import mpfr, mpq

from .balls import DomainError, PrecisionContext, _RUP
from . import series
from .identities import (
    FAIL,
    INCONCLUSIVE,
    SUITE_GROUPS,
    report_lines,
    report_records,
    run_suite,
)

__all__ = ["main", "OutputRecord", "format_midpoint", "certified_places"]

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_INCONCLUSIVE = 4

QUANTITIES = ("h", "g", "f", "A", "E", "B", "C", "gamma", "delta_h", "zeta3")
TABLES = ("h-values", "zeta-approx", "gamma-compare", "bounds")
CONSTANTS = ("A393668", "A001620", "h", "C")

MAX_DIGIT_STREAM = 4000


# ---------------------------------------------------------------------------
# exact decimal rendering
# ---------------------------------------------------------------------------

def _round_half_even_scaled(q: mpq, places: int) -> int:
    """round(q * 10^places) with ties to even, in exact integer arithmetic."""
    scaled = q * mpq(10) ** places
    num, den = scaled.numerator, scaled.denominator
    floor_, rem = divmod(num, den)
    twice = 2 * rem
    if twice > den or (twice == den and floor_ % 2 == 1):
        floor_ += 1
    return int(floor_)


def format_midpoint(mid: mpfr, places: int) -> str:
    """Exact half-even decimal string of ``mid`` with ``places`` decimals."""
    n = _round_half_even_scaled(mpq(mid), places)
    sign = "-" if n < 0 else ""
    digits = str(abs(n)).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def certified_places(rad: mpfr, limit: int = 1_000_000) -> int:
    """floor(-log10(2 rad)): decimal places guaranteed by the radius."""
    if rad == 0:
        return limit
    twice = mpq(rad) * 2
    if twice >= 1:
        return 0
    guess = int(-_RUP.log10(_RUP.mul(rad, mpfr(2)))) + 2
    p = min(guess, limit)
    while p > 0 and twice > mpq(1, 10**p):
        p -= 1
    return p


def sci_string(x: mpfr, sig: int = 3) -> str:
    """Scientific notation that survives exponents far beyond floats."""
    if x == 0:
        return "0"
    ax = _RUP.abs(x)
    e = int(_RUP.floor(_RUP.log10(ax)))
    mant = float(_RUP.div(ax, _RUP.exp10(mpfr(e))))
    if mant >= 10.0:  # directed rounding can push the estimate over
        mant /= 10.0
        e += 1
    return f"{'-' if x < 0 else ''}{mant:.{sig - 1}f}e{e:+03d}"


@dataclass(frozen=True)
class OutputRecord:
    quantity: str
    k: Optional[str]
    digits: int
    value: str
    radius: str
    representation: str
    terms_used: int

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "OutputRecord":
        return OutputRecord(**json.loads(text))

    def plain(self) -> str:
        lines = [
            f"quantity       {self.quantity}" + (f"(k={self.k})" if self.k else ""),
            f"value          {self.value}",
            f"radius         {self.radius}",
            f"representation {self.representation}",
            f"terms          {self.terms_used}",
        ]
        return "\n".join(lines)

    def csv(self) -> str:
        head = "quantity,k,digits,value,radius,representation,terms_used"
        row = (
            f"{self.quantity},{self.k or ''},{self.digits},{self.value},"
            f"{self.radius},{self.representation},{self.terms_used}"
        )
        return head + "\n" + row


def _record_from_result(
    quantity: str,
    k: Optional[Fraction],
    digits: int,
    res: series.SeriesResult,
) -> Optional[OutputRecord]:
    places = min(digits, certified_places(res.value.rad))
    if places < digits:
        return None
    return OutputRecord(
        quantity,
        None if k is None else str(k),
        digits,
        format_midpoint(res.value.mid, places),
        sci_string(res.value.rad) if res.value.rad != 0 else "0",
        res.rep,
        res.terms_used,
    )


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def _parse_k(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"cannot parse k = {text!r}", text) from None


def cmd_compute(args) -> int:
    digits = args.digits
    ctx = PrecisionContext(digits)
    q = args.quantity
    try:
        k: Optional[Fraction] = _parse_k(args.k) if args.k is not None else None
        if q == "h":
            if k is None:
                raise DomainError("h requires --k", None)
            res = series.h_value(k, ctx, rep=args.rep)
        elif q in ("g", "f"):
            if k is None:
                raise DomainError(f"{q} requires --k", None)
            res = (series.g_product if q == "g" else series.f_product)(k, ctx)
        elif q in ("A", "E", "B"):
            if k is None:
                raise DomainError("companions require --k", None)
            res = series.companions(k, q, ctx)
        elif q == "C":
            if k is None:
                raise DomainError("C requires --k", None)
            res = series.correction_c(k, ctx, n_terms=args.terms)
        elif q == "delta_h":
            if k is None:
                raise DomainError("delta_h requires --k", None)
            res = series.delta_h(k, ctx)
        elif q == "zeta3":
            res = series.apery_zeta3(ctx, c3_terms=args.terms)
        elif q == "gamma":
            if args.method == "direct":
                res = series.gamma_direct(args.terms or 10_000, ctx)
            else:
                n = args.terms or _gamma_terms_for(ctx)
                res = series.gamma_accel(n, ctx)
        else:  # pragma: no cover - argparse restricts choices
            raise DomainError(f"unknown quantity {q}", q)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    record = _record_from_result(q, k, digits, res)
    if record is None:
        print(
            f"error: certified radius {sci_string(res.value.rad)} cannot support "
            f"{digits} digits within the term budget",
            file=sys.stderr,
        )
        return EXIT_RESOURCE
    if args.format == "json":
        print(record.to_json())
    elif args.format == "csv":
        print(record.csv())
    else:
        print(record.plain())
        if res.tail_estimate is not None:
            # the radius certifies the partial sum only, not the limit
            print(f"tail estimate  {sci_string(res.tail_estimate)} (uncertified)")
    return EXIT_OK


def _gamma_terms_for(ctx: PrecisionContext) -> int:
    n = 1
    eps = ctx.series_eps()
    while series.gamma_accel_tail_bound(n) > eps:
        n += 1
    return n


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.digits < 10:
        print("error: verification needs --digits >= 10", file=sys.stderr)
        return EXIT_USAGE
    try:
        reports = run_suite(
            k_min=2,
            k_max=args.k_max,
            digits=args.digits,
            suite=args.suite,
            telescope_n=args.n,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(report_records(reports), indent=2))
    else:
        for line in report_lines(reports):
            print(line)
    n_fail = sum(1 for r in reports if r.status == FAIL)
    n_inc = sum(1 for r in reports if r.status == INCONCLUSIVE)
    summary = (
        f"checks: {len(reports)}  pass: {len(reports) - n_fail - n_inc}  "
        f"fail: {n_fail}  inconclusive: {n_inc}"
    )
    # keep machine-readable stdout clean in json mode
    print(summary, file=sys.stderr if args.format == "json" else sys.stdout)
    if n_fail:
        return EXIT_CHECK_FAILED
    if n_inc:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

_H_FORMULA_TYPE = {
    2: "Elementary (hyperbolic)",
    3: "Elementary: (1/2) ln(3/2)",
    4: "Trigonometric product",
    5: "Gamma functions",
    6: "Trigonometric product",
}


def _table_h_values(ctx: PrecisionContext) -> tuple[list[str], list[list[str]]]:
    rows = []
    for k in range(2, 7):
        h = series.h_zeta_series(k, ctx)
        rows.append([str(k), format_midpoint(h.value.mid, 6), _H_FORMULA_TYPE[k]])
    return ["k", "h(k)", "Formula type"], rows


def _table_zeta_approx(ctx: PrecisionContext) -> tuple[list[str], list[list[str]]]:
    from .zeta import zeta_minus_one
    from .balls import BallReal

    rows = []
    for k in range(2, 6):
        h = series.h_zeta_series(k, ctx).value
        c = series.correction_c(k, ctx).value
        one = BallReal.from_int(1, ctx)
        approx = one.add(h, ctx).sub(c, ctx)
        exact = one.add(zeta_minus_one(k, ctx), ctx)
        rows.append(
            [
                str(k),
                format_midpoint(one.add(h, ctx).mid, 4),
                format_midpoint(c.mid, 4),
                format_midpoint(approx.mid, 4),
                format_midpoint(exact.mid, 4),
            ]
        )
    return ["k", "1+h(k)", "C(k)", "Approx.", "Exact zeta(k)"], rows


def _table_gamma_compare(
    ctx: PrecisionContext, terms: list[int]
) -> tuple[list[str], list[list[str]]]:
    rows = []
    for n in terms:
        direct = series.gamma_direct(n, ctx)
        accel = series.gamma_accel(n, ctx)
        tail = series.gamma_accel_tail_bound(n)
        # the accelerated column shows only digits its tail bound certifies
        places = certified_places(accel.value.rad)
        rows.append(
            [
                str(n),
                format_midpoint(direct.value.mid, 3 if n < 1000 else 5),
                format_midpoint(accel.value.mid, min(places, 16)),
                sci_string(_RUP.div(mpfr(tail.numerator), mpfr(tail.denominator))),
            ]
        )
    return ["Terms N", "Direct", "Accelerated", "Tail bound"], rows


def _table_bounds(ctx: PrecisionContext) -> tuple[list[str], list[list[str]]]:
    from .zeta import zeta_minus_one
    from .balls import BallReal

    rows = []
    for k in range(2, 6):
        zk = zeta_minus_one(k, ctx)
        h = series.h_zeta_series(k, ctx).value
        z3k = zeta_minus_one(3 * k, ctx)
        denom = (
            BallReal.from_int(1, ctx)
            .sub(BallReal.from_fraction(Fraction(1, 4**k), ctx), ctx)
            .mul_int(3, ctx)
        )
        upper = zk.add(z3k.div(denom, ctx), ctx)
        rows.append(
            [
                str(k),
                format_midpoint(zk.mid, 6),
                format_midpoint(h.mid, 6),
                format_midpoint(upper.mid, 6),
            ]
        )
    return ["k", "Lower: zeta(k)-1", "Exact h(k)", "Upper bound"], rows


def _render_table(headers: list[str], rows: list[list[str]], fmt: str) -> str:
    if fmt == "csv":
        out = [",".join(headers)]
        out += [",".join(r) for r in rows]
        return "\n".join(out)
    if fmt == "json":
        return json.dumps([dict(zip(headers, r)) for r in rows], indent=2)
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(headers)]
    line = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
    out = [line, "-" * len(line)]
    for r in rows:
        out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)))
    return "\n".join(out)


def cmd_table(args) -> int:
    ctx = PrecisionContext(30)
    if args.name == "h-values":
        headers, rows = _table_h_values(ctx)
    elif args.name == "zeta-approx":
        headers, rows = _table_zeta_approx(ctx)
    elif args.name == "gamma-compare":
        terms = (
            [int(t) for t in args.terms.split(",")]
            if args.terms
            else [5, 10, 20, 1000, 10_000, 100_000]
        )
        headers, rows = _table_gamma_compare(ctx, terms)
    else:
        headers, rows = _table_bounds(ctx)
    print(_render_table(headers, rows, args.format))
    return EXIT_OK


# ---------------------------------------------------------------------------
# digit streams
# ---------------------------------------------------------------------------

def _digit_value(constant: str, k: Optional[Fraction], count: int):
    """Ball for the requested constant at enough working digits for count
    correctly-rounded significant digits."""
    ctx = PrecisionContext(count + 12)
    if constant == "A393668":
        res = series.h_zeta_series(2, ctx)
        return series.SeriesResult(
            res.value.mul_int(2, ctx), res.rep, res.terms_used, res.tail_bound
        )
    if constant == "A001620":
        return series.gamma_accel(_gamma_terms_for(ctx), ctx)
    if constant == "h":
        if k is None:
            raise DomainError("digit stream for h requires --k", None)
        return series.h_value(k, ctx)
    if k is None:
        raise DomainError("digit stream for C requires --k", None)
    return series.correction_c(k, ctx)


def cmd_digits(args) -> int:
    if args.count < 1 or args.count > MAX_DIGIT_STREAM:
        print(
            f"error: count must be in 1..{MAX_DIGIT_STREAM}", file=sys.stderr
        )
        return EXIT_USAGE
    try:
        k = _parse_k(args.k) if args.k is not None else None
        res = _digit_value(args.constant, k, args.count)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    ball = res.value
    if ball.mid <= 0:
        print("error: digit streams are defined for positive values", file=sys.stderr)
        return EXIT_USAGE
    # leading decimal exponent: largest e with 10^e <= value
    v = mpq(ball.mid)
    value = Fraction(v.numerator, v.denominator)
    e = int(_RUP.floor(_RUP.log10(ball.mid)))
    while Fraction(10) ** e > value:
        e -= 1
    while Fraction(10) ** (e + 1) <= value:
        e += 1
    places = args.count - e - 1
    if certified_places(ball.rad) < places:
        print("error: requested digits exceed the certified radius", file=sys.stderr)
        return EXIT_RESOURCE
    text = format_midpoint(ball.mid, max(places, 0))
    stream = text.replace(".", "").lstrip("0") if e < 0 else text.replace(".", "")
    stream = stream[: args.count]
    offset = max(e + 1, 0)
    if args.bfile:
        print(f"# {args.constant}: decimal digits, offset {offset}")
        for i, d in enumerate(stream, start=1):
            print(f"{i} {d}")
    elif args.per_line:
        for d in stream:
            print(d)
    else:
        print(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atanhsum",
        description=(
            "Certified evaluation of the arctanh sum h(k), the products g and f, "
            "their companion series, the zeta correction C(k), and the "
            "Euler-Mascheroni constant."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate one quantity to certified digits")
    p.add_argument("quantity", choices=QUANTITIES)
    p.add_argument("--k", help="series parameter (integer or fraction)")
    p.add_argument("--digits", type=int, default=30)
    p.add_argument("--rep", choices=(
        series.REP_DIRECT, series.REP_ZETA_SERIES, series.REP_PRODUCT,
        series.REP_CLOSED_FORM,
    ))
    p.add_argument("--method", choices=("accel", "direct"), default="accel",
                   help="gamma only: accelerated zeta series or direct sum")
    p.add_argument("--terms", type=int, help="force the truncation point")
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", choices=SUITE_GROUPS, default="all")
    p.add_argument("--k-max", type=int, default=8, dest="k_max")
    p.add_argument("--digits", type=int, default=15)
    p.add_argument("--n", type=int, default=100_000,
                   help="largest telescoping product length")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="render a built-in reference table")
    p.add_argument("name", choices=TABLES)
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p.add_argument("--terms", help="gamma-compare row selection, e.g. 5,10,20")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("digits", help="stream certified decimal digits")
    p.add_argument("constant", choices=CONSTANTS)
    p.add_argument("--k", help="parameter for h or C")
    p.add_argument("--count", type=int, default=30)
    p.add_argument("--bfile", action="store_true", help="emit OEIS b-file lines")
    p.add_argument("--per-line", action="store_true", dest="per_line")
    p.set_defaults(func=cmd_digits)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
