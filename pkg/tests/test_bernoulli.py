"""Bernoulli numbers: classical values, an independent recurrence oracle,
and cache thread-safety."""

import threading
from fractions import Fraction

import pytest

from atanhsum import bernoulli

import oracles


def akiyama_tanigawa(n):
    """Independent oracle: the Akiyama-Tanigawa triangle gives B_0..B_n
    (with B_1 = +1/2 in this scheme; even indices agree)."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out


def test_small_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == oracles.BERNOULLI_12


def test_matches_akiyama_tanigawa_oracle():
    ref = akiyama_tanigawa(40)
    for n in range(0, 41, 2):
        assert bernoulli(n) == ref[n]


def test_odd_indices_vanish():
    for n in range(3, 31, 2):
        assert bernoulli(n) == 0


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_concurrent_cache_growth():
    errors = []

    def worker(start):
        try:
            for n in range(start, start + 40, 2):
                bernoulli(n)
        except Exception as exc:  # pragma: no cover
            errors.append(exc)

    threads = [threading.Thread(target=worker, args=(s,)) for s in (0, 20, 40, 60)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    ref = akiyama_tanigawa(60)
    assert bernoulli(60) == ref[60]
