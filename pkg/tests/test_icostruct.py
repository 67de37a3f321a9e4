from __future__ import annotations

import pytest

from icosym.chartab import IRREP_NAMES
from icosym.icostruct import (
    IcoIrrep,
    base_parity,
    classify_irreps,
    dim_irrep,
    dual_irrep,
    generator_family,
    is_self_dual,
    scan_trivial,
    self_dual_two_dim_report,
    sym_power_irrep,
    twist_equivalent,
    validate_irrep,
    verify_generators,
)
from icosym.report import all_passed

SPIN_ROWS = {"X'", "X''", "X1", "W"}


def test_base_parities():
    for name in IRREP_NAMES:
        assert base_parity(name) == (1 if name in SPIN_ROWS else 0)


@pytest.mark.parametrize("m", range(1, 9))
def test_classification_counts(m):
    irreps = classify_irreps(m)
    assert len(irreps) == 9 * m
    assert sum(dim_irrep(r) ** 2 for r in irreps) == 120 * m
    by_row = {}
    for r in irreps:
        by_row.setdefault(r.base, []).append(r.exponent)
    assert set(by_row) == set(IRREP_NAMES)
    assert all(len(v) == m for v in by_row.values())


def test_m_equals_one_is_the_plain_table():
    irreps = classify_irreps(1)
    assert len(irreps) == 9
    assert {r.base for r in irreps} == set(IRREP_NAMES)
    for r in irreps:
        assert r.exponent == (1 if r.base in SPIN_ROWS else 0)


def test_validate_rejects_parity_mismatch():
    with pytest.raises(ValueError):
        validate_irrep(IcoIrrep("X'", 0), 2)
    with pytest.raises(ValueError):
        validate_irrep(IcoIrrep("U", 1), 2)
    with pytest.raises(ValueError):
        validate_irrep(IcoIrrep("U", 4), 2)
    validate_irrep(IcoIrrep("W", 3), 2)


def test_twist_equivalence_is_same_row():
    assert twist_equivalent(IcoIrrep("X'", 1), IcoIrrep("X'", 3), 2)
    assert not twist_equivalent(IcoIrrep("X'", 1), IcoIrrep("X''", 1), 2)


def test_duality_negates_exponent():
    assert dual_irrep(IcoIrrep("X'", 1), 2) == IcoIrrep("X'", 3)
    assert dual_irrep(IcoIrrep("U", 2), 3) == IcoIrrep("U", 4)


@pytest.mark.parametrize(
    "r,m,want",
    [
        (IcoIrrep("X'", 1), 1, True),
        (IcoIrrep("X'", 1), 2, False),
        (IcoIrrep("X'", 3), 3, True),
        (IcoIrrep("U", 0), 5, True),
        (IcoIrrep("W'", 2), 2, True),
        (IcoIrrep("W'", 2), 3, False),
    ],
)
def test_self_duality(r, m, want):
    assert is_self_dual(r, m) is want


def test_sym_power_attaches_scaled_exponent():
    assert sym_power_irrep(IcoIrrep("X'", 1), 5, 3) == {IcoIrrep("W", 5): 1}
    assert sym_power_irrep(IcoIrrep("X''", 1), 2, 3) == {IcoIrrep("W''", 2): 1}
    # exponent reduction mod 2m
    assert sym_power_irrep(IcoIrrep("X'", 1), 6, 1) == {
        IcoIrrep("W''", 0): 1,
        IcoIrrep("X2", 0): 1,
    }


def test_sym_power_rejects_higher_dimensional_input():
    with pytest.raises(ValueError):
        sym_power_irrep(IcoIrrep("W'", 0), 2, 1)


@pytest.mark.parametrize("m", range(1, 5))
def test_sym_power_parities_consistent(m):
    lam = IcoIrrep("X'", 1)
    for n in range(31):
        for r in sym_power_irrep(lam, n, m):
            validate_irrep(r, m)


def test_scan_trivial_frozen_values():
    scan = scan_trivial(30)
    nonzero = {n: v for n, v in scan.items() if v}
    assert nonzero == {0: 1, 12: 1, 20: 1, 24: 1, 30: 1}
    assert all(scan[n] == 0 for n in range(1, 12))


def test_self_dual_two_dim_report():
    even = self_dual_two_dim_report(2)
    assert even["blanket_claim_holds"] and not even["self_dual_two_dim"]
    m1 = self_dual_two_dim_report(1)
    assert set(m1["self_dual_two_dim"]) == {IcoIrrep("X'", 1), IcoIrrep("X''", 1)}
    m3 = self_dual_two_dim_report(3)
    assert set(m3["self_dual_two_dim"]) == {IcoIrrep("X'", 3), IcoIrrep("X''", 3)}
    assert not m3["blanket_claim_holds"]


@pytest.mark.parametrize("m", range(1, 5))
def test_generator_family_covers_all_rows(m):
    gens = generator_family(m)
    assert sorted(g.base for g in gens.values()) == sorted(IRREP_NAMES)
    assert gens["sym^5(Lam)"].base == "W"
    assert gens["Lam*Lam'"].base == "X2"
    assert gens["sym^4(Lam)"].base == "V"


@pytest.mark.parametrize("m", range(1, 9))
def test_verify_generators_all_pass(m):
    report = verify_generators(m)
    assert all_passed(report), [r for r in report if not r.passed]
