"""Certified evaluation of arctanh sums, the infinite products behind them,
and the constants they determine.

The package computes h(k) = sum_{n>=2} arctanh(n^-k) by three independent
routes (direct sum, zeta series, log-product), the products
g(k) = prod(1 - n^-k) and f(k) = prod(1 + n^-k), the companion series A/E/B,
the correction C(k) with zeta(k) = 1 + h(k) - C(k), and the
Euler-Mascheroni constant by both its slow arctanh form and its geometric
zeta form.  Everything is evaluated in ball arithmetic: a midpoint plus a
rigorous radius that covers series truncation (by inverting explicit tail
bounds), special-function evaluation, and rounding.
"""

from fractions import Fraction as ExactRational

from .balls import (
    BallReal,
    DomainError,
    PrecisionContext,
    ball_arith,
    elementary,
    int_power_ball,
    ln2_ball,
    pi_ball,
)
from .bernoulli import bernoulli
from .zeta import ZetaPlan, clear_zeta_cache, zeta_minus_one, zeta_strategy
from .series import (
    DEFAULT_TERM_CAP,
    KParam,
    REP_CLOSED_FORM,
    REP_DIRECT,
    REP_PRODUCT,
    REP_ZETA_SERIES,
    SeriesResult,
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
)
from .identities import (
    VerificationReport,
    cyclotomic,
    cyclotomic_shift_check,
    run_suite,
    telescope_closed_form,
    telescope_partial,
)

__version__ = "0.1.0"

__all__ = [
    "BallReal",
    "DomainError",
    "ExactRational",
    "KParam",
    "PrecisionContext",
    "SeriesResult",
    "VerificationReport",
    "ZetaPlan",
    "apery_zeta3",
    "ball_arith",
    "bernoulli",
    "clear_zeta_cache",
    "companions",
    "correction_c",
    "cyclotomic",
    "cyclotomic_shift_check",
    "delta_h",
    "elementary",
    "f2_closed",
    "f_product",
    "g2_closed",
    "g_product",
    "gamma_accel",
    "gamma_accel_tail_bound",
    "gamma_direct",
    "h2_closed",
    "h3_closed",
    "h_derivative",
    "h_direct",
    "h_direct_tail_bound",
    "h_partial",
    "h_product",
    "h_value",
    "h_zeta_series",
    "int_power_ball",
    "ln2_ball",
    "pi_ball",
    "run_suite",
    "telescope_closed_form",
    "telescope_partial",
    "zeta_minus_one",
    "zeta_strategy",
    "REP_CLOSED_FORM",
    "REP_DIRECT",
    "REP_PRODUCT",
    "REP_ZETA_SERIES",
    "DEFAULT_TERM_CAP",
]
