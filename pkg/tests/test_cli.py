"""Command-line behavior: outputs, JSON documents, exit codes."""

from __future__ import annotations

import json

import pytest

import icosym.cli as cli
from icosym.chartab import IRREP_NAMES
from icosym.cli import cmd_dispatch
from icosym.report import CheckResult

ENVELOPE_KEYS = {"command", "inputs", "results", "citations"}


def run(capsys, *argv):
    code = cmd_dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    document = json.loads(out)
    assert set(document) == ENVELOPE_KEYS
    return code, document, err


@pytest.fixture
def facts_file(tmp_path):
    path = tmp_path / "facts.json"
    path.write_text(
        json.dumps(
            {
                "bases": [
                    {"name": "pi", "type": "tetrahedral"},
                    {"name": "rho", "type": "icosahedral"},
                ],
                "facts": [
                    {
                        "lhs": "Ad(pi)",
                        "rhs": "Ad(rho)",
                        "relation": "equiv",
                        "truth": False,
                    }
                ],
            }
        )
    )
    return str(path)


class TestChartab:
    def test_text_table(self, capsys):
        code, out, _ = run(capsys, "chartab")
        assert code == 0
        for name in IRREP_NAMES:
            assert name in out
        assert "1/2 + 1/2√5" in out

    def test_json_document(self, capsys):
        code, document, _ = run_json(capsys, "chartab")
        assert code == 0
        results = document["results"]
        assert [c["size"] for c in results["classes"]] == [1, 1, 12, 12, 12, 12, 30, 20, 20]
        assert results["rows"]["U"] == ["1"] * 9
        assert results["dimensions"]["W"] == 6


class TestVerify:
    def test_identities_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "identities")
        assert code == 0
        assert "11/11 checks passed" in out

    def test_table_json(self, capsys):
        code, document, _ = run_json(capsys, "verify", "table")
        assert code == 0
        assert document["results"]["passed"] is True
        assert "character table" in document["results"]["sections"]

    def test_failure_maps_to_exit_1(self, capsys, monkeypatch):
        monkeypatch.setattr(
            cli,
            "verify_all",
            lambda: {"stub": [CheckResult("forced failure", False, "synthetic")]},
        )
        code, out, _ = run(capsys, "verify", "all")
        assert code == 1
        assert "FAIL" in out

    def test_bad_target(self, capsys):
        code, _, _ = run(capsys, "verify", "everything")
        assert code == 2


class TestDecompose:
    def test_spec_example(self, capsys):
        code, out, _ = run(capsys, "decompose", "--rep", "sym^5(X')")
        assert code == 0
        assert out.strip() == "sym^5(X') = W"

    def test_json(self, capsys):
        code, document, _ = run_json(capsys, "decompose", "--rep", "sym^6(X')")
        assert code == 0
        assert document["results"]["decomposition"] == {"X2": 1, "W''": 1}
        assert document["results"]["dimension"] == "7"

    def test_semantic_error_is_usage_error(self, capsys):
        code, _, err = run(capsys, "decompose", "--rep", "sym^2(W)")
        assert code == 2
        assert "dimension 6" in err

    def test_parse_error_reports_position(self, capsys):
        code, _, err = run(capsys, "decompose", "--rep", "U + Q")
        assert code == 2
        assert "column 5" in err


class TestIrreps:
    def test_counts(self, capsys):
        code, document, _ = run_json(capsys, "irreps", "--m", "2")
        assert code == 0
        assert document["results"]["count"] == 18
        assert document["results"]["sum_of_squared_dims"] == 240
        assert document["results"]["two_dimensional_self_dual"] == []

    def test_odd_m_self_dual_pair(self, capsys):
        code, document, _ = run_json(capsys, "irreps", "--m", "3")
        assert code == 0
        pair = document["results"]["two_dimensional_self_dual"]
        assert {entry["row"] for entry in pair} == {"X'", "X''"}

    def test_bad_m(self, capsys):
        code, _, err = run(capsys, "irreps", "--m", "0")
        assert code == 2
        assert "at least 1" in err


class TestScanTrivial:
    def test_spec_example(self, capsys):
        code, out, _ = run(capsys, "scan-trivial", "--max", "30")
        assert code == 0
        assert "first trivial constituent at n = 12" in out

    def test_json(self, capsys):
        code, document, _ = run_json(capsys, "scan-trivial", "--max", "13")
        assert code == 0
        mults = document["results"]["multiplicities"]
        assert mults["12"] == 1
        assert all(mults[str(n)] == 0 for n in range(1, 12))
        assert document["results"]["first_nonzero"] == 12


class TestCuspidality:
    def test_definite_verdict(self, capsys, facts_file):
        code, out, _ = run(
            capsys, "cuspidality", "--facts", facts_file, "--pi", "pi",
            "--pi-prime", "rho",
        )
        assert code == 0
        assert "[structural] cuspidal" in out
        assert "[pole-counting] cuspidal" in out

    def test_json_routes_agree(self, capsys, facts_file):
        code, document, _ = run_json(
            capsys, "cuspidality", "--facts", facts_file, "--pi", "pi",
            "--pi-prime", "rho",
        )
        assert code == 0
        results = document["results"]
        assert results["routes_agree"] is True
        assert results["structural"]["verdict"] == "cuspidal"
        assert results["pole_counting"]["pole_order"] == 1

    def test_unknown_base(self, capsys, facts_file):
        code, _, err = run(
            capsys, "cuspidality", "--facts", facts_file, "--pi", "pi",
            "--pi-prime", "ghost",
        )
        assert code == 2
        assert "ghost" in err

    def test_unreadable_facts(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "cuspidality", "--facts", str(tmp_path / "nope.json"),
            "--pi", "a", "--pi-prime", "b",
        )
        assert code == 2
        assert "cannot read" in err

    def test_missing_facts_reported(self, capsys, tmp_path):
        path = tmp_path / "bare.json"
        path.write_text(
            json.dumps(
                {
                    "bases": [
                        {"name": "pi", "type": "icosahedral"},
                        {"name": "rho", "type": "tetrahedral"},
                    ]
                }
            )
        )
        code, out, _ = run(
            capsys, "cuspidality", "--facts", str(path), "--pi", "pi",
            "--pi-prime", "rho",
        )
        assert code == 0
        assert "undetermined" in out
        assert "missing fact" in out


class TestSiegel:
    def test_single_report(self, capsys):
        code, out, _ = run(capsys, "siegel", "--m", "12")
        assert code == 0
        assert "exceptional-case" in out
        assert "Q = chi*omega(pi)^6" in out
        assert "sources:" in out

    def test_scan_json(self, capsys):
        code, document, _ = run_json(capsys, "siegel", "--scan", "0..5")
        assert code == 0
        reports = document["results"]["reports"]
        assert len(reports) == 6
        assert all(r["verdict"] == "no-siegel-zero" for r in reports)
        assert any(c["rule"] == "auxiliary-expansion" for c in document["citations"])

    def test_facts_file_inputs(self, capsys, tmp_path):
        path = tmp_path / "siegel.json"
        path.write_text(
            json.dumps(
                {
                    "characters": [
                        {"name": "nu", "order": 5, "properties": ["non-real"]}
                    ],
                    "bases": [
                        {"name": "f", "type": "icosahedral", "galois_row": "X'"}
                    ],
                    "word_kinds": [
                        {"word": "nu*omega(f)^6", "kind": "non-real"}
                    ],
                    "siegel": {"p": "f", "chi": "nu"},
                }
            )
        )
        code, document, _ = run_json(
            capsys, "siegel", "--m", "12", "--facts", str(path)
        )
        assert code == 0
        # the candidate character nu*omega(f)^6 is declared non-real,
        # which rules the exceptional case out
        assert document["results"]["verdict"] == "no-siegel-zero"
        assert document["results"]["target"] == "sym^12(f)*nu"

    def test_bad_range(self, capsys):
        code, _, _ = run(capsys, "siegel", "--scan", "12")
        assert code == 2

    def test_m_and_scan_conflict(self, capsys):
        code, _, _ = run(capsys, "siegel", "--m", "3", "--scan", "0..5")
        assert code == 2

    def test_negative_m(self, capsys):
        code, _, err = run(capsys, "siegel", "--m", "-3")
        assert code == 2
        assert "nonnegative" in err


class TestDispatch:
    def test_no_arguments(self, capsys):
        assert cmd_dispatch([]) == 2
        capsys.readouterr()

    def test_unknown_command(self, capsys):
        assert cmd_dispatch(["frobnicate"]) == 2
        capsys.readouterr()

    def test_help_exits_zero(self, capsys):
        assert cmd_dispatch(["--help"]) == 0
        out = capsys.readouterr().out
        assert "chartab" in out
