"""Exact character calculus for the binary icosahedral group SL2(F5),
plus a formal bookkeeping engine for cuspidality decisions and
exceptional-zero reports over its symmetric-power tower.

Everything is exact: scalars live in Q(sqrt 5), class functions are
9-tuples of such scalars, and the higher layers manipulate symbols, so no
floating point appears anywhere.
"""

from __future__ import annotations

from .chartab import (
    IRREP_NAMES,
    CharacterTable,
    ClassFunction,
    NotACharacterError,
    default_table,
    format_decomposition,
)
from .icostruct import (
    IcoIrrep,
    classify_irreps,
    dim_irrep,
    generator_family,
    scan_trivial,
    self_dual_two_dim_report,
    sym_power_irrep,
    twist_equivalent,
)
from .isobaric import (
    BaseCusp,
    CharWord,
    Constituent,
    FactLedger,
    IsobaricExpr,
    LedgerError,
    PoleOrder,
    Verdict,
    a4,
    ad,
    decide_cuspidality,
    decide_cuspidality_via_poles,
    galois_pole_check,
    icosahedral_family,
    pole_order,
    rs_expand,
    standard_icosahedral_pair,
)
from .factsfile import FactsError, load_facts, load_facts_file
from .repexpr import DimensionError, ParseError, evaluate, parse, render
from .report import CheckResult, all_passed, format_report
from .scalar import GOLDEN, GOLDEN_CONJ, SQRT5, Qsqrt5
from .siegel import (
    LFactorization,
    MissingHypothesisError,
    SiegelReport,
    build_auxiliary,
    expand_aux_square,
    siegel_report,
    siegel_scan,
    sym_power_automorphic,
    sym_power_cuspidal,
)
from .verify import verify_all, verify_all_passed

__version__ = "0.1.0"

__all__ = [
    "IRREP_NAMES",
    "GOLDEN",
    "GOLDEN_CONJ",
    "SQRT5",
    "BaseCusp",
    "CharWord",
    "CharacterTable",
    "CheckResult",
    "ClassFunction",
    "Constituent",
    "DimensionError",
    "FactLedger",
    "FactsError",
    "IcoIrrep",
    "IsobaricExpr",
    "LFactorization",
    "LedgerError",
    "MissingHypothesisError",
    "NotACharacterError",
    "ParseError",
    "PoleOrder",
    "Qsqrt5",
    "SiegelReport",
    "Verdict",
    "a4",
    "ad",
    "all_passed",
    "build_auxiliary",
    "classify_irreps",
    "decide_cuspidality",
    "decide_cuspidality_via_poles",
    "default_table",
    "dim_irrep",
    "evaluate",
    "expand_aux_square",
    "format_decomposition",
    "format_report",
    "galois_pole_check",
    "generator_family",
    "icosahedral_family",
    "load_facts",
    "load_facts_file",
    "parse",
    "pole_order",
    "render",
    "rs_expand",
    "scan_trivial",
    "self_dual_two_dim_report",
    "siegel_report",
    "siegel_scan",
    "standard_icosahedral_pair",
    "sym_power_automorphic",
    "sym_power_cuspidal",
    "sym_power_irrep",
    "twist_equivalent",
    "verify_all",
    "verify_all_passed",
]
