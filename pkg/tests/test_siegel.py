"""Tests for the auxiliary-sum construction and the exceptional-zero reports."""

from __future__ import annotations

import pytest

from icosym.icostruct import scan_trivial
from icosym.isobaric import (
    CharWord,
    FactLedger,
    IsobaricExpr,
    SymCusp,
    standard_icosahedral_pair,
)
from icosym.siegel import (
    MissingHypothesisError,
    RULES,
    ROW_RULES,
    build_auxiliary,
    expand_aux_square,
    galois_square_accounting,
    siegel_report,
    siegel_scan,
    standard_context,
    sym_power_automorphic,
    sym_power_cuspidal,
    verify_rule_table,
)

CHI = CharWord.gen("chi")

FULL_SCAN = siegel_scan(0, 30)  # shared by the scan tests below


def general_base_with_hypotheses(m):
    ledger = FactLedger()
    ledger.declare_character("chi")
    p = ledger.declare_base("p", "general")
    ledger.declare_cuspidal(SymCusp(p, m), True)
    for n in (m + 2, m - 2):
        if n > 1:
            ledger.declare_automorphic(SymCusp(p, n), True)
    return ledger, p


# -- hypothesis derivation ---------------------------------------------------


def test_sym_cuspidality_from_finite_image():
    ledger, p, _ = standard_icosahedral_pair()
    for n in (1, 2, 3, 4, 5):
        verdict, _ = sym_power_cuspidal(p, n, ledger)
        assert verdict is True
    for n in (6, 7, 12):
        verdict, _ = sym_power_cuspidal(p, n, ledger)
        assert verdict is False
    # automorphy holds at every level: the decomposition realizes the symbol
    # as an isobaric sum of family twists
    for n in range(2, 31):
        verdict, _ = sym_power_automorphic(p, n, ledger)
        assert verdict is True


def test_sym_cuspidality_from_type():
    ledger = FactLedger()
    tet = ledger.declare_base("t", "tetrahedral")
    octa = ledger.declare_base("o", "octahedral")
    gen = ledger.declare_base("g", "general")
    dih = ledger.declare_base(
        "d", "dihedral", dihedral_field="K", dihedral_char="chi"
    )
    assert sym_power_cuspidal(tet, 2, ledger)[0] is True
    assert sym_power_cuspidal(tet, 3, ledger)[0] is False
    assert sym_power_cuspidal(octa, 3, ledger)[0] is True
    assert sym_power_cuspidal(octa, 4, ledger)[0] is False
    assert sym_power_cuspidal(gen, 4, ledger)[0] is True
    assert sym_power_cuspidal(gen, 5, ledger)[0] is None
    assert sym_power_cuspidal(dih, 2, ledger)[0] is False
    assert sym_power_automorphic(gen, 4, ledger)[0] is True
    assert sym_power_automorphic(gen, 7, ledger)[0] is None


# -- the auxiliary sum -------------------------------------------------------


def test_auxiliary_shape():
    ledger, p, _ = standard_icosahedral_pair()
    aux = build_auxiliary(5, p, CHI, ledger)
    assert aux.degree == 10  # 1 + 6 + 3
    assert len(aux.terms) == 3


@pytest.mark.parametrize("m", [0, 1, 2])
def test_auxiliary_rejects_small_m(m):
    ledger, p, _ = standard_icosahedral_pair()
    with pytest.raises(ValueError):
        build_auxiliary(m, p, CHI, ledger)


def test_auxiliary_requires_hypotheses():
    ledger = FactLedger()
    p = ledger.declare_base("p", "general")
    with pytest.raises(MissingHypothesisError) as exc:
        build_auxiliary(7, p, CHI, ledger)
    assert any("sym^7" in msg for msg in exc.value.missing)


def test_auxiliary_rejects_non_cuspidal_power():
    # sym^6 of the tagged base visibly decomposes, so the hypothesis fails
    ledger, p, _ = standard_icosahedral_pair()
    with pytest.raises(MissingHypothesisError) as exc:
        build_auxiliary(6, p, CHI, ledger)
    assert any("reducible" in msg for msg in exc.value.missing)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_square_expansion_standard_base(m):
    ledger, p, _ = standard_icosahedral_pair()
    fact = expand_aux_square(m, p, CHI, ledger)
    assert fact.k == 4 and fact.r == 3
    assert fact.total_degree == (m + 5) ** 2
    kinds = sorted(f.kind for f in fact.factors)
    assert kinds == ["pair", "pair", "single", "single", "single", "single", "zeta"]
    exponents = {str(f): f.exponent for f in fact.factors}
    assert exponents[f"L(sym^{m}(pi)*chi)^4"] == 4


@pytest.mark.parametrize("m", [7, 9, 11])
def test_square_expansion_declared_hypotheses(m):
    ledger, p = general_base_with_hypotheses(m)
    fact = expand_aux_square(m, p, CHI, ledger)
    assert fact.k == 4 and fact.r == 3
    assert fact.total_degree == (m + 5) ** 2


def test_square_expansion_m3_factor_list():
    # the low boundary: sym^(m-2) collapses to the base itself
    ledger, p, _ = standard_icosahedral_pair()
    fact = expand_aux_square(3, p, CHI, ledger)
    singles = {str(f.parts[0]): f.exponent for f in fact.factors if f.kind == "single"}
    assert singles["sym^5(pi)*chi*omega(pi)^-1"] == 2
    assert singles["pi*chi*omega(pi)"] == 2
    assert singles["sym^2(pi)*omega(pi)^-1"] == 2


@pytest.mark.parametrize("m", [3, 4, 5])
def test_galois_accounting(m):
    acc = galois_square_accounting(m)
    assert acc["k"] == 4 and acc["r"] == 3
    assert (
        acc["target_multiplicity_in_square"]
        == 4 + acc["target_multiplicity_in_residual_factors"]
    )


# -- the rule table ----------------------------------------------------------


def test_rule_table_is_total():
    assert all(r.passed for r in verify_rule_table())
    assert set(ROW_RULES) == {
        "U", "V", "W", "X1", "X2", "W'", "W''", "X'", "X''",
    }
    for rule in RULES.values():
        assert rule.citations


# -- reports -----------------------------------------------------------------


@pytest.mark.parametrize("m", range(12))
def test_no_exceptional_case_below_twelve(m):
    assert siegel_report(m).verdict == "no-siegel-zero"


@pytest.mark.parametrize("m", [3, 4, 5])
def test_report_carries_k_and_r(m):
    rep = siegel_report(m)
    assert rep.k == 4 and rep.r == 3
    assert "auxiliary-expansion" in rep.citations


def test_report_m7_constituents():
    rep = siegel_report(7)
    labels = {c.label for c in rep.constituents}
    assert labels == {"twist of sym^5(pi)", "twist of pi_tau"}
    assert rep.verdict == "no-siegel-zero"


def test_report_m12_exceptional():
    rep = siegel_report(12)
    assert rep.verdict == "exceptional-case"
    assert rep.exceptional_character == "chi*omega(pi)^6"
    assert rep.exceptional_character_alt == "omega(pi)^(12/2)*chi^(13)"
    flagged = [c for c in rep.constituents if c.exceptional]
    assert len(flagged) == 1 and flagged[0].row == "U"
    assert "at most one exceptional zero" in rep.notes


def test_exceptional_character_is_central_power():
    for rep in FULL_SCAN:
        if rep.verdict != "exceptional-case":
            continue
        assert rep.m % 2 == 0
        expected = CharWord.gen("omega(pi)", rep.m // 2) * CHI
        assert rep.exceptional_character == str(expected)


def test_scan_matches_trivial_constituent_scan():
    scan = scan_trivial(30)
    for rep in FULL_SCAN[1:]:
        expected = "exceptional-case" if scan.get(rep.m) else "no-siegel-zero"
        assert rep.verdict == expected, rep.m
    assert {rep.m for rep in FULL_SCAN if rep.verdict == "exceptional-case"} \
        == {12, 20, 24, 30}


def test_declared_non_real_character_unflags():
    ledger, p, _ = standard_context()
    q_word = CharWord.gen("omega(pi)", 6) * CHI
    ledger.declare_word_kind(q_word, "non-real")
    rep = siegel_report(12, p, CHI, ledger)
    assert rep.verdict == "no-siegel-zero"
    assert any("cannot be excluded" not in c.detail for c in rep.constituents)


def test_declared_non_self_dual_short_circuits():
    ledger, p, _ = standard_context()
    ledger.declare_self_dual("sym^5(pi)*chi", False)
    rep = siegel_report(5, p, CHI, ledger)
    assert rep.verdict == "no-siegel-zero"
    assert rep.citations == ("non-self-dual",)
    assert not rep.constituents


def test_m0_flags_only_declared_real_characters():
    assert siegel_report(0).verdict == "no-siegel-zero"
    ledger, p, _ = standard_context()
    ledger.declare_word_kind(CHI, "quadratic")
    rep = siegel_report(0, p, CHI, ledger)
    assert rep.verdict == "exceptional-case"
    assert rep.exceptional_character == "chi"


def test_report_rejects_bad_inputs():
    with pytest.raises(ValueError):
        siegel_report(-1)
    ledger = FactLedger()
    p = ledger.declare_base("p", "general")
    with pytest.raises(ValueError):
        siegel_report(3, p, CHI, ledger)
    with pytest.raises(ValueError):
        siegel_scan(5, 3)


def test_scan_is_fully_covered():
    for rep in FULL_SCAN:
        assert rep.verdict != "not-covered"


def test_report_json_shape():
    rep = siegel_report(12)
    doc = rep.as_json()
    assert doc["verdict"] == "exceptional-case"
    assert doc["m"] == 12
    assert doc["exceptional_character"] == "chi*omega(pi)^6"
    assert all("rule" in c for c in doc["constituents"])
    text = str(rep)
    assert "exceptional-case" in text and "Q = chi*omega(pi)^6" in text
