"""Exact Bernoulli numbers for Euler-Maclaurin tail corrections.

Even-index convention (B_1 = -1/2).  Values are exact ``Fraction``s computed
by the binomial recurrence

    sum_{r=0}^{m} C(m+1, r) B_r = 0        (m >= 1),

restricted to even indices since B_3 = B_5 = ... = 0.  The cache grows
monotonically and is guarded by a lock so concurrent zeta evaluations can
share it.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import Optional

__all__ = ["bernoulli", "bernoulli_even_list"]

_lock = threading.Lock()
_even_cache = [Fraction(1)]  # B_0, B_2, B_4, ... at indices 0, 1, 2, ...


def _extend_even(upto_pair: int) -> None:
    # sum over even r of C(n+1, r) B_r plus the B_1 term equals 0, so
    # B_n = -(1/(n+1)) [ C(n+1,1) B_1 + sum_{j<m} C(n+1, 2j) B_2j ] with n=2m
    for m in range(len(_even_cache), upto_pair + 1):
        n = 2 * m
        acc = Fraction(-(n + 1), 2)  # C(n+1, 1) * B_1
        for j in range(m):
            acc += comb(n + 1, 2 * j) * _even_cache[j]
        _even_cache.append(-acc / (n + 1))


def bernoulli(n: int, ctx: Optional[object] = None) -> Fraction:
    """Exact B_n; ``ctx`` is accepted for interface parity and ignored."""
    if n < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    pair = n // 2
    with _lock:
        if pair >= len(_even_cache):
            _extend_even(pair)
        return _even_cache[pair]


def bernoulli_even_list(count: int) -> list[Fraction]:
    """[B_0, B_2, ..., B_{2(count-1)}] for batch consumers."""
    with _lock:
        if count > len(_even_cache):
            _extend_even(count - 1)
        return _even_cache[:count]
