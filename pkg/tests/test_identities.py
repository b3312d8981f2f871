"""Telescoping, cyclotomic checks, and the verification suite."""

from fractions import Fraction

import pytest

from atanhsum import (
    BallReal,
    PrecisionContext,
    cyclotomic,
    cyclotomic_shift_check,
    g_product,
    h_zeta_series,
    run_suite,
    telescope_closed_form,
    telescope_partial,
)
from atanhsum.identities import FAIL, INCONCLUSIVE, PASS, report_lines, report_records


def test_telescope_single_factor():
    assert telescope_partial(2) == Fraction(9, 7)
    assert telescope_closed_form(2) == Fraction(9, 7)


def test_telescope_n10():
    assert telescope_partial(10) == Fraction(55, 37)
    assert telescope_closed_form(10) == Fraction(55, 37)


def test_telescope_exact_equality_and_residual():
    for n in (2, 10, 1000, 10_000):
        value = telescope_partial(n)
        assert value == telescope_closed_form(n)
        assert Fraction(3, 2) - value == Fraction(3, 2 * (n * n + n + 1))


def test_telescope_increasing_and_bounded():
    prev = Fraction(0)
    for n in range(2, 40):
        value = telescope_partial(n)
        assert prev < value < Fraction(3, 2)
        prev = value


def test_telescope_large_distance_to_limit():
    n = 10**6
    value = telescope_partial(n)
    assert value == telescope_closed_form(n)
    assert Fraction(3, 2) - value < Fraction(1, 10**11)


def test_cyclotomic_polynomials():
    assert cyclotomic(3) == [1, 1, 1]
    assert cyclotomic(6) == [1, -1, 1]
    assert cyclotomic(10) == [1, -1, 1, -1, 1]  # x^4 - x^3 + x^2 - x + 1
    assert cyclotomic(14) == [1, -1, 1, -1, 1, -1, 1]


def test_cyclotomic_shift_check_passes():
    report = cyclotomic_shift_check(1000)
    assert report.status == PASS


def test_cyclotomic_shift_small():
    # Phi6(2) = 3 = Phi3(1)
    phi6 = cyclotomic(6)
    assert phi6[0] + phi6[1] * 2 + phi6[2] * 4 == 3


def test_corrupted_g2_fails_doubling_law():
    """Falsifiability probe: a wrong g(2) must break g(4) = g(2)^2 e^(2 h(2))."""
    ctx = PrecisionContext(15)
    corrupted = BallReal.from_fraction(Fraction(5001, 10_000), ctx)
    h2 = h_zeta_series(2, ctx).value
    rhs = corrupted.square(ctx).mul(h2.mul_int(2, ctx).exp(ctx), ctx)
    g4 = g_product(4, ctx).value
    assert not g4.overlaps(rhs)


def test_run_suite_all_pass():
    reports = run_suite(k_min=2, k_max=5, digits=15, telescope_n=1000)
    assert reports, "suite produced no reports"
    bad = [r for r in reports if r.status != PASS]
    assert not bad, "\n".join(report_lines(bad))


def test_run_suite_names_sorted_and_unique():
    reports = run_suite(k_min=2, k_max=4, digits=12, telescope_n=100)
    names = [r.check_name for r in reports]
    assert names == sorted(names)
    assert len(names) == len(set(names))


def test_run_suite_validation():
    with pytest.raises(ValueError):
        run_suite(k_min=2, k_max=20, digits=15)
    with pytest.raises(ValueError):
        run_suite(digits=5)
    with pytest.raises(ValueError):
        run_suite(suite="nope")


def test_invariant_ranges_beyond_default_suite():
    """The stated invariant ranges extend past the default verify run:
    zeta identity and C-monotonicity to k = 10, bounds to k = 10,
    monotonicity/convexity of h to k = 11."""
    from atanhsum.identities import (
        _check_bounds,
        _check_ck_decreasing,
        _check_monotone_convex,
        _check_zeta_identity,
    )

    ctx = PrecisionContext(15)
    failures = []
    for k in (9, 10):
        failures += [r for r in _check_bounds(k, ctx) if r.status != PASS]
        r = _check_zeta_identity(k, ctx)
        if r.status != PASS:
            failures.append(r)
    for k in (9, 10, 11):
        failures += [r for r in _check_monotone_convex(k, ctx) if r.status != PASS]
    r = _check_ck_decreasing(10, ctx)
    if r.status != PASS:
        failures.append(r)
    assert not failures, failures


def test_separation_three_valued_semantics():
    from atanhsum.identities import _identity_report, _separation_report
    from gmpy2 import mpfr

    ctx = PrecisionContext(15)
    a = BallReal.from_fraction(Fraction(1, 2), ctx).widen(mpfr("0.25"))
    b = BallReal.from_fraction(Fraction(6, 10), ctx).widen(mpfr("0.25"))
    c = BallReal.from_fraction(Fraction(2), ctx)
    # overlapping balls: identity passes, strict separation is inconclusive
    assert _identity_report("t", a, b, "same real").status == PASS
    assert _separation_report("t", a, b, "a < b").status == INCONCLUSIVE
    # disjoint in order: separation passes; reversed order: fail
    assert _separation_report("t", a, c, "a < c").status == PASS
    assert _separation_report("t", c, a, "c < a").status == FAIL
    assert _identity_report("t", a, c, "same real").status == FAIL


def test_precision_context_validation():
    with pytest.raises(ValueError):
        PrecisionContext(50, working_precision=10)
    with pytest.raises(ValueError):
        PrecisionContext(0)
    ctx = PrecisionContext(25)
    assert ctx.working_precision >= 25 * 3.32


def test_report_records_roundtrip():
    reports = run_suite(k_min=2, k_max=3, digits=12, suite="telescope", telescope_n=50)
    records = report_records(reports)
    assert all(
        set(r) == {"check_name", "status", "detail", "tolerance_or_separation"}
        for r in records
    )
    lines = report_lines(reports)
    assert len(lines) == len(reports)
