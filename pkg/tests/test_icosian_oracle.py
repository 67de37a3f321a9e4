"""Cross-validation of table data against the exact quaternion model.

These tests rebuild the binary icosahedral group from raw coordinates and
compare sums over its 120 elements against what the character machinery
claims, with no shared code paths beyond Q(sqrt 5) arithmetic.
"""

from __future__ import annotations

import random
from collections import Counter

import pytest

from icosians import qconj, qmul, qnorm, sym_trace_sums, trace, unit_icosians
from icosym.chartab import default_table
from icosym.icostruct import scan_trivial
from icosym.scalar import Qsqrt5

# invariant degrees of the binary icosahedral group below 31, from the
# generating function (1 + t^30) / ((1 - t^12) (1 - t^20))
EXPECTED_SCAN = {0: 1, 12: 1, 20: 1, 24: 1, 30: 1}


@pytest.fixture(scope="module")
def icosians():
    return unit_icosians()


def test_there_are_120_unit_icosians(icosians):
    assert len(icosians) == 120
    assert all(qnorm(q) == Qsqrt5(1) for q in icosians)


def test_icosians_form_a_group(icosians):
    one = (Qsqrt5(1), Qsqrt5(0), Qsqrt5(0), Qsqrt5(0))
    assert one in icosians
    assert all(qconj(q) in icosians for q in icosians)
    rng = random.Random(5)
    sample = rng.sample(sorted(icosians, key=str), 40)
    for p in sample:
        for q in icosians:
            assert qmul(p, q) in icosians


def test_trace_multiset_matches_a_two_dimensional_row(icosians):
    tab = default_table()
    row = tab.row("X'")
    want = Counter()
    for size, value in zip(tab.sizes, row.values):
        want[value] += size
    got = Counter(trace(q) for q in icosians)
    assert got == want


def test_trivial_constituent_scan_matches_engine(icosians):
    sums = sym_trace_sums(30)
    oracle = {}
    for n, total in enumerate(sums):
        mult = total / 120
        assert mult.is_integer(), f"non-integral multiplicity at n={n}"
        oracle[n] = mult.as_int()
    assert oracle == {n: EXPECTED_SCAN.get(n, 0) for n in range(31)}
    assert scan_trivial(30) == oracle
