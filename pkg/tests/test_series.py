"""Series engine: every representation against frozen oracles, domain rules,
tail-bound soundness, and the identities between quantities."""

from fractions import Fraction

import pytest
from gmpy2 import mpq

from atanhsum import (
    BallReal,
    DomainError,
    KParam,
    PrecisionContext,
    apery_zeta3,
    companions,
    correction_c,
    delta_h,
    f2_closed,
    f_product,
    g2_closed,
    g_product,
    gamma_accel,
    gamma_accel_tail_bound,
    gamma_direct,
    h2_closed,
    h3_closed,
    h_derivative,
    h_direct,
    h_direct_tail_bound,
    h_partial,
    h_product,
    h_value,
    h_zeta_series,
    ln2_ball,
)

import oracles


H_ORACLES = {2: oracles.H2, 3: oracles.H3, 4: oracles.H4, 5: oracles.H5, 6: oracles.H6}


# -- h representations -------------------------------------------------------

def test_h_zeta_series_values(ctx30):
    for k, ref in H_ORACLES.items():
        assert h_zeta_series(k, ctx30).value.contains(ref), f"k={k}"


def test_h_zeta_series_small_target_term_count():
    ctx6 = PrecisionContext(6)
    res = h_zeta_series(2, ctx6)
    assert res.value.contains(oracles.H2)
    assert res.terms_used <= 13  # last index M <= 12


def test_h_zeta_series_leading_term_window(ctx30):
    # with no terms beyond m=0, h(k) - (zeta(k)-1) is below (4/3) 2^-6
    gap = abs(oracles.H2 - oracles.ZETA2_M1)
    assert gap <= Fraction(4, 3) / 64


def test_h_direct_values(ctx30):
    for k in (4, 5, 6):
        res = h_direct(k, ctx30)
        assert res.value.contains(H_ORACLES[k]), f"k={k}"


def test_h_direct_meets_modest_target_within_budget():
    # polynomial convergence: full certification is only feasible for easy
    # targets; k = 6 at 10 digits inverts to a few thousand terms
    ctx10 = PrecisionContext(10)
    res = h_direct(6, ctx10)
    assert res.terms_used < 20_000
    assert Fraction(mpq(res.value.rad)) < Fraction(1, 10**10)
    assert res.value.contains(H_ORACLES[6])


def test_h_direct_capped_still_contains(ctx30):
    res = h_direct(2, ctx30, max_terms=5000)
    assert res.terms_used <= 5000
    assert res.value.contains(oracles.H2)


def test_h_product_values(ctx30):
    for k in (2, 3, 4):
        assert h_product(k, ctx30).value.contains(H_ORACLES[k]), f"k={k}"


def test_h_non_integer_k(ctx30):
    assert h_zeta_series(Fraction(5, 2), ctx30).value.contains(oracles.H2_5)
    res = h_direct(Fraction(5, 2), ctx30, max_terms=30_000)
    assert res.value.contains(oracles.H2_5)


def test_h_domain_errors(ctx30):
    with pytest.raises(DomainError):
        h_direct(1, ctx30)
    with pytest.raises(DomainError):
        h_zeta_series(Fraction(3, 2), ctx30)  # bound unproven below 2
    with pytest.raises(DomainError):
        h_product(Fraction(5, 2), ctx30)  # integer-only
    # but the direct route still works in (1, 2)
    res = h_direct(Fraction(3, 2), ctx30, max_terms=2000)
    assert res.value.rad > 0


def test_h_value_dispatch(ctx30):
    assert h_value(3, ctx30).rep == "zeta-series"
    assert h_value(3, ctx30, rep="product").rep == "product"
    assert h_value(Fraction(3, 2), ctx30).rep == "direct"
    assert oracles.matches(h_value(3, ctx30, rep="closed-form").value, oracles.HALF_LN_3_2, 52)


def test_tail_bound_is_in_radius(ctx30):
    res = h_zeta_series(2, ctx30)
    assert Fraction(mpq(res.tail_bound)) <= Fraction(mpq(res.value.rad))
    assert res.terms_used >= 1


# -- products and companions --------------------------------------------------

def test_g2_exact_half(ctx30):
    assert g_product(2, ctx30).value.contains(Fraction(1, 2))
    assert g2_closed(ctx30).value.mid == Fraction(1, 2)


def test_f2_sinh_pi_over_pi(ctx30):
    assert f_product(2, ctx30).value.overlaps(f2_closed(ctx30).value)
    assert oracles.matches(f_product(2, ctx30).value, oracles.SINH_PI_OVER_PI, 51)


def test_g3_value(ctx30):
    assert g_product(3, ctx30).value.contains(oracles.G3)


def test_g3_brute_force_partial_product_bracket(ctx30):
    # independent oracle: partial product to 10^4 with the log-tail bound
    # ln tail <= sum_{n>N} -ln(1 - n^-3) <= (1/(1 - 1e-12)) * sum n^-3
    #         <= 1.000001 * (N^-3 + integral) ; bracket G3 between partial
    # and partial * exp(-tail)
    partial = Fraction(1)
    N = 10_000
    for n in range(2, N + 1):
        partial *= Fraction(n**3 - 1, n**3)
    tail = Fraction(2) * (Fraction(1, N**3) + Fraction(1, 2 * N**2))
    lower = partial * (1 - tail)
    assert lower <= oracles.G3 <= partial
    ball = g_product(3, ctx30).value
    assert Fraction(mpq(ball.mid)) <= partial


def test_f3_equals_3_g3(ctx30):
    f3 = f_product(3, ctx30).value
    rhs = g_product(3, ctx30).value.mul_int(3, ctx30)
    assert f3.overlaps(rhs)


def test_companion_closed_forms(ctx30):
    a2 = companions(2, "A", ctx30).value
    assert a2.overlaps(ln2_ball(ctx30))  # A(2) = -ln g(2) = ln 2
    assert a2.contains(oracles.LN2)
    e2 = companions(2, "E", ctx30).value
    assert e2.contains(oracles.E2)
    b3 = companions(3, "B", ctx30).value
    assert b3.contains(oracles.B3)


def test_companion_algebra(ctx30):
    for k in (2, 3, 5):
        h = h_zeta_series(k, ctx30).value
        a = companions(k, "A", ctx30).value
        e = companions(k, "E", ctx30).value
        b = companions(k, "B", ctx30).value
        assert a.overlaps(h.add(e, ctx30))
        assert b.overlaps(h.sub(e, ctx30))


def test_companions_domain(ctx30):
    with pytest.raises(DomainError):
        companions(Fraction(5, 2), "A", ctx30)
    with pytest.raises(ValueError):
        companions(2, "Q", ctx30)


# -- correction function ------------------------------------------------------

def test_correction_values(ctx30):
    assert correction_c(2, ctx30).value.contains(oracles.C2)
    assert correction_c(3, ctx30).value.contains(oracles.C3)
    assert correction_c(1, ctx30).value.contains(oracles.C1)


def test_correction_c1_identity(ctx30):
    # C(1) = 1 - gamma - (1/2) ln 2
    ref = Fraction(1) - oracles.GAMMA - oracles.LN2 / 2
    ball = correction_c(1, ctx30).value
    assert abs(Fraction(mpq(ball.mid)) - ref) <= Fraction(mpq(ball.rad)) + Fraction(1, 10**48)


def test_correction_domain(ctx30):
    with pytest.raises(DomainError):
        correction_c(Fraction(1, 2), ctx30)


def test_correction_forced_terms(ctx30):
    res = correction_c(3, ctx30, n_terms=5)
    assert res.terms_used == 5
    # truncating after five terms still certifies the true value
    assert res.value.contains(oracles.C3)


# -- gamma --------------------------------------------------------------------

def test_gamma_direct_small_cases(ctx30):
    assert oracles.matches(gamma_direct(2, ctx30).value, oracles.GAMMA_DIRECT_2, 52)
    assert oracles.matches(gamma_direct(10, ctx30).value, oracles.GAMMA_DIRECT_10, 52)


def test_gamma_direct_reports_uncertified_estimate(ctx30):
    res = gamma_direct(100, ctx30)
    assert res.tail_bound == 0
    assert res.tail_estimate is not None
    # the estimate has the right order: true gap is below it for N = 100
    gap = abs(Fraction(mpq(res.value.mid)) - oracles.GAMMA)
    assert gap < 2 * Fraction(mpq(res.tail_estimate))


def test_gamma_accel_contains_reference(ctx30):
    for n in (5, 10, 20):
        assert gamma_accel(n, ctx30).value.contains(oracles.GAMMA_16), f"N={n}"


def test_gamma_accel_tail_bounds():
    assert gamma_accel_tail_bound(5) == Fraction(1, 3 * 2**14)
    assert gamma_accel_tail_bound(10) == Fraction(1, 3 * 2**24)
    assert gamma_accel_tail_bound(2) == Fraction(4, 3 * 2**7)
    # the sharpened constant stays a true upper bound of the tail
    for n in (4, 5, 8):
        partial = gamma_accel(n, PrecisionContext(40)).value
        gap = abs(Fraction(mpq(partial.mid)) - oracles.GAMMA)
        assert gap < gamma_accel_tail_bound(n)


def test_gamma_accel_large_n_truncates_at_rounding_floor(ctx30):
    res = gamma_accel(10_000, ctx30)
    assert res.terms_used < 200
    assert res.value.contains(oracles.GAMMA)


# -- derivatives and differences ----------------------------------------------

def test_derivative_signs(ctx30):
    d1 = h_derivative(2, 1, ctx30, max_terms=4000).value
    d2 = h_derivative(2, 2, ctx30, max_terms=4000).value
    assert d1.upper() < 0
    assert d2.lower() > 0


def test_derivative_oracles(ctx15):
    for k, ref in oracles.HPRIME.items():
        ball = h_derivative(k, 1, ctx15, max_terms=30_000).value
        assert ball.contains(ref), f"k={k}"
    ball2 = h_derivative(3, 2, ctx15, max_terms=30_000).value
    assert ball2.contains(oracles.HSECOND3)


def test_derivative_matches_central_difference(ctx15):
    for k in (Fraction(5, 2), Fraction(3), Fraction(4)):
        d1 = h_derivative(k, 1, ctx15, max_terms=20_000)
        delta = Fraction(1, 1000)
        hp = h_zeta_series(k + delta, ctx15).value
        hm = h_zeta_series(k - delta, ctx15).value
        fd = hp.sub(hm, ctx15).div(BallReal.from_fraction(2 * delta, ctx15), ctx15)
        d2_up = Fraction(mpq(h_derivative(k, 2, ctx15, max_terms=20_000).value.upper()))
        diff = abs(Fraction(mpq(d1.value.mid)) - Fraction(mpq(fd.mid)))
        tol = d2_up * delta * delta + Fraction(mpq(d1.value.rad)) + Fraction(mpq(fd.rad))
        assert diff <= tol, f"k={k}"


def test_delta_h_values(ctx30):
    for k, ref in oracles.DH.items():
        assert delta_h(k, ctx30).value.contains(ref), f"k={k}"


def test_delta_h_ratio_decreasing(ctx30):
    prev = None
    for k in range(2, 13):
        ratio = delta_h(k, ctx30).value.mul_int(2 ** (k + 1), ctx30)
        assert ratio.lower() > 1
        if prev is not None:
            assert ratio.upper() < prev.lower() or ratio.strictly_below(prev)
        prev = ratio


# -- apery and closed forms -----------------------------------------------------

def test_apery_default(ctx30):
    assert apery_zeta3(ctx30).value.contains(oracles.APERY)


def test_apery_five_terms_contains_fifteen_digit_reference(ctx30):
    ball = apery_zeta3(ctx30, c3_terms=5).value
    assert ball.contains(Fraction("1.202056903159594"))
    assert ball.contains(oracles.APERY)


def test_apery_first_correction_term(ctx30):
    first = correction_c(3, ctx30, n_terms=1)
    assert oracles.matches(first.value, oracles.C3_FIRST_TERM, 20)


def test_closed_forms(ctx30):
    assert oracles.matches(h3_closed(ctx30).value, oracles.HALF_LN_3_2, 52)
    assert oracles.matches(h2_closed(ctx30).value, oracles.H2, 52)
    assert oracles.matches(
        h2_closed(ctx30).value.mul_int(2, ctx30), oracles.A393668, 51
    )


# -- partial sums and tail soundness -------------------------------------------

def test_h_partial_tail_soundness(ctx15):
    href = h_zeta_series(2, ctx15).value
    for n, stated_cap in ((100, Fraction(1, 100)), (10_000, Fraction("1.0001e-4"))):
        partial = h_partial(2, n, ctx15)
        gap = href.sub(partial, ctx15)
        bound = Fraction(mpq(h_direct_tail_bound(2, n)))
        assert gap.lower() > 0
        assert Fraction(mpq(gap.upper())) <= bound
        assert bound <= stated_cap


def test_kparam_coercion():
    assert KParam.of(3).is_integer
    assert KParam.of(2.5).value == Fraction(5, 2)
    assert not KParam.of(Fraction(7, 3)).is_integer
    with pytest.raises(DomainError):
        KParam.of(1)


def test_gamma_domain_rules(ctx30):
    with pytest.raises(DomainError):
        gamma_direct(1, ctx30)
    with pytest.raises(DomainError):
        gamma_accel(0, ctx30)


def test_concurrent_evaluation_matches_sequential(ctx15):
    """Pure functions + locked caches: parallel runs agree with serial ones."""
    import threading

    ks = [2, 3, 4, 5, 6, 7]
    expected = {k: Fraction(mpq(h_zeta_series(k, ctx15).value.mid)) for k in ks}
    results: dict = {}
    errors: list = []

    def worker(k):
        try:
            results[k] = Fraction(mpq(h_zeta_series(k, ctx15).value.mid))
            correction_c(k, ctx15)
            g_product(k, ctx15)
        except Exception as exc:  # pragma: no cover
            errors.append(exc)

    threads = [threading.Thread(target=worker, args=(k,)) for k in ks]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    assert results == expected
