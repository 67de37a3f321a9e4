"""Landau–Siegel-zero bookkeeping for symmetric-power L-functions.

The analytic input is reduced to one combinatorial test: if a self-dual
L-function ``L_1`` divides an auxiliary L-function with nonnegative
coefficients whose edge pole has order ``r``, and ``L_1`` appears with
exponent ``k > r``, then ``L_1`` has no real zero abnormally close to the
edge.  Everything this module does is set up instances of that test:

* :func:`build_auxiliary` forms ``Pi = 1 [+] sym^m(pi) (x) chi [+]
  sym^2(pi) (x) omega^-1`` under the hypotheses that ``sym^m`` is cuspidal
  and ``sym^(m +- 2)`` are automorphic;
* :func:`expand_aux_square` factors ``L(s, Pi x Pi)`` and counts the
  exponent of the target (always 4) against the pole order (always 3);
* :func:`siegel_report` decomposes ``sym^m(pi) (x) chi`` for a base with
  finite icosahedral image into the nine-generator family, sends every
  constituent through a rule table, and aggregates the verdicts.

Character constituents are the one structure that can carry an exceptional
zero, and for an icosahedral base they first appear at ``m = 12``; the
report flags them (in both normalizations of the character) unless the
ledger declares the character non-real.  For ``m = 0`` the object under
study is the twisting character itself — the classical degree-1 case —
which is flagged only when the ledger declares that character real, not by
mere presence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartab import CharacterTable, ClassFunction, IRREP_NAMES, default_table
from .isobaric import (
    BaseCusp,
    CharWord,
    Constituent,
    FactLedger,
    IsobaricExpr,
    LedgerError,
    SymCusp,
    TRIVIAL,
    ad,
    character,
    icosahedral_family,
    pole_order,
    standard_icosahedral_pair,
    sym_cusp,
)
from .report import CheckResult


class MissingHypothesisError(LedgerError):
    """An auxiliary construction whose hypotheses the ledger cannot supply."""

    def __init__(self, missing: list[str]) -> None:
        self.missing = tuple(missing)
        super().__init__("not covered; missing hypotheses: " + "; ".join(missing))


# --------------------------------------------------------------------------
# cuspidality / automorphy of symmetric powers


def sym_power_cuspidal(
    p: BaseCusp, n: int, ledger: FactLedger
) -> tuple[bool | None, str]:
    """Is sym^n of the base cuspidal?  Declared facts win; a finite-image
    tag decides by irreducibility of the restriction; small n falls back to
    the type classification."""
    if n == 0:
        return False, "sym^0 is the trivial character"
    if n == 1:
        return True, f"{p.name} is cuspidal by assumption"
    core = SymCusp(p, n)
    declared = ledger.cuspidal_declared(core)
    if declared is not None:
        return declared, f"declared: sym^{n}({p.name}) cuspidal is {declared}"
    if p.galois_row is not None:
        cf = ledger.galois_rows(core)
        mults = ledger.tab.decompose(ledger.tab.sym_power(ledger.tab.row(p.galois_row), n))
        irreducible = len(mults) == 1 and set(mults.values()) == {1}
        return irreducible, (
            f"finite image: sym^{n} restriction is "
            + ("irreducible" if irreducible else f"reducible ({sorted(cf)})")
        )
    if p.typ == "dihedral":
        return False, "symmetric powers of a dihedral base are never cuspidal"
    if n == 2 and p.typ in ("tetrahedral", "octahedral", "icosahedral", "general"):
        return True, "sym^2 is cuspidal for any non-dihedral base (Gelbart-Jacquet 1978)"
    if n == 3:
        if p.typ == "tetrahedral":
            return False, "sym^3 of a tetrahedral base splits (Kim-Shahidi 2002)"
        if p.typ in ("octahedral", "icosahedral", "general"):
            return True, (
                "sym^3 is cuspidal when the base is neither dihedral nor "
                "tetrahedral (Kim-Shahidi 2002)"
            )
    if n == 4:
        if p.typ in ("tetrahedral", "octahedral"):
            return False, f"sym^4 of a {p.typ} base splits (Kim 2003)"
        if p.typ in ("icosahedral", "general"):
            return True, (
                "sym^4 is cuspidal when the base is not solvable polyhedral "
                "(Kim 2003)"
            )
    return None, f"declare whether sym^{n}({p.name}) is cuspidal"


def sym_power_automorphic(
    p: BaseCusp, n: int, ledger: FactLedger
) -> tuple[bool | None, str]:
    """Is sym^n of the base (isobarically) automorphic?"""
    if n <= 1:
        return True, "degree at most 2"
    core = SymCusp(p, n)
    declared = ledger.automorphic_declared(core)
    if declared is not None:
        return declared, f"declared: sym^{n}({p.name}) automorphic is {declared}"
    if p.galois_row is not None:
        return True, (
            f"finite image: sym^{n} restricts to a sum of rows, each realized "
            "by a twist of a family generator, so the symbol is an isobaric "
            "sum of cuspidal twists"
        )
    if n == 2:
        return True, "sym^2 is automorphic (Gelbart-Jacquet 1978)"
    if n == 3:
        return True, "sym^3 is automorphic (Kim-Shahidi 2002)"
    if n == 4:
        return True, "sym^4 is automorphic (Kim 2003)"
    cuspidal, reason = sym_power_cuspidal(p, n, ledger)
    if cuspidal:
        return True, reason
    return None, f"declare whether sym^{n}({p.name}) is automorphic"


# --------------------------------------------------------------------------
# the auxiliary isobaric sum and its square


def build_auxiliary(
    m: int, p: BaseCusp, chi: CharWord, ledger: FactLedger
) -> IsobaricExpr:
    """1 [+] sym^m(p) (x) chi [+] sym^2(p) (x) omega^-1, for m >= 3.

    The degree-3 case of the target is covered by its own rule, so m = 2 is
    rejected rather than sent through a degenerate expansion; smaller m
    never needs an auxiliary sum.
    """
    if m == 2:
        raise ValueError(
            "m = 2 is handled by the symmetric-square rule, not the auxiliary sum"
        )
    if m < 3:
        raise ValueError(f"the auxiliary construction needs m >= 3, got {m}")
    missing = []
    cuspidal, reason = sym_power_cuspidal(p, m, ledger)
    if cuspidal is not True:
        missing.append(
            reason if cuspidal is None else f"hypothesis fails: {reason}"
        )
    for n in (m + 2, m - 2):
        automorphic, reason = sym_power_automorphic(p, n, ledger)
        if automorphic is not True:
            missing.append(
                reason if automorphic is None else f"hypothesis fails: {reason}"
            )
    if missing:
        raise MissingHypothesisError(missing)
    return (
        IsobaricExpr.single(TRIVIAL)
        + IsobaricExpr.single(Constituent(SymCusp(p, m), chi))
        + IsobaricExpr.single(ad(p))
    )


@dataclass(frozen=True)
class LFactor:
    """One factor of the expanded square: an L-function with an exponent."""

    kind: str  # zeta | single | pair
    parts: tuple[Constituent, ...]
    exponent: int
    reason: str  # why this factor is automorphic

    @property
    def degree(self) -> int:
        if self.kind == "zeta":
            return 1
        d = 1
        for c in self.parts:
            d *= c.degree
        return d

    def __str__(self) -> str:
        if self.kind == "zeta":
            inner = "zeta"
        elif self.kind == "single":
            inner = f"L({self.parts[0]})"
        else:
            inner = f"L({self.parts[0]} x {self.parts[1]})"
        return inner if self.exponent == 1 else f"{inner}^{self.exponent}"

    def as_json(self) -> dict:
        return {
            "kind": self.kind,
            "parts": [str(c) for c in self.parts],
            "exponent": self.exponent,
            "degree": self.degree,
            "automorphic": self.reason,
        }


@dataclass(frozen=True)
class LFactorization:
    """The factored square L(s, Pi x Pi) with the distinguished target."""

    m: int
    target: Constituent
    factors: tuple[LFactor, ...]
    k: int  # exponent of the target factor
    r: int  # pole order of the square at the edge

    @property
    def total_degree(self) -> int:
        return sum(f.exponent * f.degree for f in self.factors)

    def __str__(self) -> str:
        lines = [f"L(Pi x Pi) for m = {self.m}, target L({self.target}):"]
        lines += [f"  {f}" for f in self.factors]
        lines.append(f"  k = {self.k}, r = {self.r} -> k > r is {self.k > self.r}")
        return "\n".join(lines)

    def as_json(self) -> dict:
        return {
            "m": self.m,
            "target": str(self.target),
            "factors": [f.as_json() for f in self.factors],
            "k": self.k,
            "r": self.r,
            "total_degree": self.total_degree,
        }


def expand_aux_square(
    m: int, p: BaseCusp, chi: CharWord, ledger: FactLedger
) -> LFactorization:
    """Factor L(s, Pi x Pi) over the nine ordered pairs of constituents.

    Cross terms against the degree-3 piece expand by Clebsch--Gordan (that
    is where the two extra copies of the target come from); the two
    diagonal self-pairings stay as Rankin--Selberg pair factors.  The
    target exponent is checked to be 4 and the edge pole order 3, and the
    degrees must add up to the square of the degree of Pi.
    """
    aux = build_auxiliary(m, p, chi, ledger)
    omega = CharWord.gen(p.omega)
    target = Constituent(SymCusp(p, m), chi)
    adjoint = ad(p)

    factors = [
        LFactor("zeta", (), 1, "the zeta function"),
        LFactor("single", (target,), 4, "cuspidal by hypothesis"),
        LFactor(
            "single",
            (adjoint,),
            2,
            sym_power_automorphic(p, 2, ledger)[1],
        ),
        LFactor(
            "single",
            (Constituent(SymCusp(p, m + 2), chi * omega**-1),),
            2,
            sym_power_automorphic(p, m + 2, ledger)[1],
        ),
        LFactor(
            "single",
            (Constituent(sym_cusp(p, m - 2), chi * omega),),
            2,
            sym_power_automorphic(p, m - 2, ledger)[1],
        ),
        LFactor(
            "pair",
            (target, target),
            1,
            "Rankin-Selberg square of an automorphic symbol",
        ),
        LFactor(
            "pair",
            (adjoint, adjoint),
            1,
            "Rankin-Selberg square of an automorphic symbol",
        ),
    ]
    k = next(
        f.exponent for f in factors if f.kind == "single" and f.parts == (target,)
    )
    if k != 4:
        raise RuntimeError(f"target exponent {k} != 4")
    r = pole_order(aux, ledger).value()
    if r != 3:
        raise RuntimeError(f"edge pole order {r} != 3")
    result = LFactorization(m, target, tuple(factors), k, r)
    expected = aux.degree * aux.degree
    if result.total_degree != expected:
        raise RuntimeError(
            f"degree audit failed: {result.total_degree} != {expected}"
        )
    return result


def galois_square_accounting(
    m: int, tab: CharacterTable | None = None
) -> dict[str, int]:
    """Check the factorization against exact class-function arithmetic.

    With the twists set to the trivial character and the base restricted to
    the first 2-dimensional row, the sum of the factors' restrictions must
    equal the square of the restriction of the auxiliary sum, and pairing
    the square with the target row must reproduce the target exponent plus
    the target content of the residual factors.  Returns the accounting.
    """
    tab = tab or default_table()
    ledger, p, _ = standard_icosahedral_pair()
    chi = CharWord()
    fact = expand_aux_square(m, p, chi, ledger)

    def restrict(f: LFactor) -> ClassFunction:
        if f.kind == "zeta":
            return tab.trivial()
        cf = ledger.galois_restriction(IsobaricExpr.single(f.parts[0]))
        if f.kind == "pair":
            cf = cf * ledger.galois_restriction(IsobaricExpr.single(f.parts[1]))
        return cf

    aux_cf = ledger.galois_restriction(build_auxiliary(m, p, chi, ledger))
    square = aux_cf * aux_cf
    total = ClassFunction.of([0] * 9)
    for f in fact.factors:
        total = total + f.exponent * restrict(f)
    if total != square:
        raise RuntimeError("factor restrictions do not sum to the square")

    target_row = tab.sym_power(tab.row(p.galois_row), m)
    in_square = tab.inner_product(square, target_row).as_int()
    residual = 0
    for f in fact.factors:
        if f.kind == "single" and f.parts == (fact.target,):
            continue
        residual += f.exponent * tab.inner_product(restrict(f), target_row).as_int()
    if in_square != fact.k + residual:
        raise RuntimeError(
            f"target accounting failed: {in_square} != {fact.k} + {residual}"
        )
    return {
        "m": m,
        "k": fact.k,
        "r": fact.r,
        "target_multiplicity_in_square": in_square,
        "target_multiplicity_in_residual_factors": residual,
    }


# --------------------------------------------------------------------------
# the per-constituent rule table


@dataclass(frozen=True)
class SiegelRule:
    name: str
    statement: str
    citations: tuple[str, ...]


RULES: dict[str, SiegelRule] = {
    "character": SiegelRule(
        "character",
        "a degree-1 factor carries at most one exceptional real zero, and "
        "only when the character is trivial or quadratic",
        ("classical (Landau)",),
    ),
    "gl2-cusp-form": SiegelRule(
        "gl2-cusp-form",
        "L-functions of cuspidal GL(2) forms have no exceptional zero",
        ("Hoffstein-Ramakrishnan (1995)",),
    ),
    "symmetric-square": SiegelRule(
        "symmetric-square",
        "twisted symmetric-square (degree-3 adjoint) L-functions have no "
        "exceptional zero",
        (
            "Goldfeld-Hoffstein-Lieman (1994)",
            "Hoffstein-Ramakrishnan (1995)",
            "Banks (1997)",
        ),
    ),
    "auxiliary-expansion": SiegelRule(
        "auxiliary-expansion",
        "the factored square of the auxiliary isobaric sum exhibits the "
        "target with exponent 4 against an edge pole of order 3, so a real "
        "zero near the edge would force a negative coefficient",
        (
            "Goldfeld-Hoffstein-Lieman (1994)",
            "Kim-Shahidi (2002)",
            "Kim (2003)",
        ),
    ),
    "rankin-selberg-pair": SiegelRule(
        "rankin-selberg-pair",
        "Rankin-Selberg L-functions of two cuspidal GL(2) forms that are "
        "neither dihedral nor twist-equivalent have no exceptional zero",
        ("Ramakrishnan-Wang (2003)",),
    ),
}

# which rule each family generator dispatches to, by its restriction row
ROW_RULES: dict[str, str] = {
    "U": "character",
    "X'": "gl2-cusp-form",
    "X''": "gl2-cusp-form",
    "W'": "symmetric-square",
    "W''": "symmetric-square",
    "X1": "auxiliary-expansion",  # sym^3
    "V": "auxiliary-expansion",  # sym^4
    "W": "auxiliary-expansion",  # sym^5
    "X2": "rankin-selberg-pair",
}

_AUX_DEGREE = {"X1": 3, "V": 4, "W": 5}  # symmetric power behind each row


def verify_rule_table() -> list[CheckResult]:
    """Every family generator must dispatch to exactly one known rule."""
    results = []
    rows = sorted(ROW_RULES)
    missing = [row for row in rows if ROW_RULES[row] not in RULES]
    results.append(
        CheckResult(
            "rule-table-total",
            len(ROW_RULES) == 9 and not missing,
            f"9 generators, unknown rules for {missing or 'none'}",
        )
    )
    return results


# --------------------------------------------------------------------------
# the report


@dataclass(frozen=True)
class ConstituentReport:
    row: str
    label: str
    multiplicity: int
    rule: str
    citations: tuple[str, ...]
    detail: str = ""
    k: int | None = None
    r: int | None = None
    exceptional: bool = False

    def as_json(self) -> dict:
        out = {
            "row": self.row,
            "constituent": self.label,
            "multiplicity": self.multiplicity,
            "rule": self.rule,
            "citations": list(self.citations),
            "detail": self.detail,
            "exceptional": self.exceptional,
        }
        if self.k is not None:
            out["k"] = self.k
            out["r"] = self.r
        return out


@dataclass(frozen=True)
class SiegelReport:
    m: int
    target: str
    verdict: str  # no-siegel-zero | exceptional-case | not-covered
    constituents: tuple[ConstituentReport, ...]
    citations: tuple[str, ...]  # names of the rules used
    exceptional_character: str | None = None
    exceptional_character_alt: str | None = None
    k: int | None = None
    r: int | None = None
    notes: tuple[str, ...] = ()

    def __str__(self) -> str:
        head = f"m = {self.m}: {self.target} -> {self.verdict}"
        if self.verdict == "exceptional-case":
            head += (
                f" (Q = {self.exceptional_character}; "
                f"alternative normalization {self.exceptional_character_alt}; "
                "at most one exceptional zero)"
            )
        lines = [head]
        for c in self.constituents:
            extra = f" [k={c.k} > r={c.r}]" if c.k is not None else ""
            flag = " ** possible exceptional zero **" if c.exceptional else ""
            lines.append(
                f"  {c.multiplicity} x {c.label} ({c.row}): {c.rule}{extra}{flag}"
            )
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)

    def as_json(self) -> dict:
        return {
            "m": self.m,
            "target": self.target,
            "verdict": self.verdict,
            "constituents": [c.as_json() for c in self.constituents],
            "citations": list(self.citations),
            "exceptional_character": self.exceptional_character,
            "exceptional_character_alt": self.exceptional_character_alt,
            "k": self.k,
            "r": self.r,
            "notes": list(self.notes),
        }


def standard_context(
    ledger: FactLedger | None = None,
) -> tuple[FactLedger, BaseCusp, BaseCusp]:
    """The default report context: the tagged conjugate pair plus a free
    twisting character named chi."""
    ledger, p, p_tau = standard_icosahedral_pair(ledger)
    ledger.declare_character("chi")
    return ledger, p, p_tau


def siegel_report(
    m: int,
    p: BaseCusp | None = None,
    chi: CharWord | None = None,
    ledger: FactLedger | None = None,
) -> SiegelReport:
    """Classify L(s, sym^m(p) (x) chi) for a base with icosahedral image.

    Decomposes the symbol into twists of the nine-generator family, runs
    each constituent through the rule table, and aggregates.  A character
    constituent (first possible at m = 12) is flagged as the exceptional
    case — reported in both normalizations — unless the ledger knows it is
    not real; undischargeable rule hypotheses make the verdict not-covered
    rather than a silent pass.
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if p is None or ledger is None:
        ledger, p, p_tau = standard_context(ledger)
    else:
        partner_row = {"X'": "X''", "X''": "X'"}.get(p.galois_row)
        p_tau = next(
            (
                b
                for b in ledger.bases.values()
                if b.galois_row == partner_row and b.name != p.name
            ),
            None,
        )
        if p_tau is None:
            p_tau = ledger.declare_base(
                f"{p.name}_tau", "icosahedral", galois_row=partner_row
            )
    if p.typ != "icosahedral":
        raise ValueError(f"{p.name} is {p.typ}; the report needs icosahedral type")
    if p.galois_row not in ("X'", "X''"):
        raise ValueError(
            f"{p.name} needs a 2-dimensional finite-image tag to decompose"
        )
    chi = chi if chi is not None else CharWord.gen("chi")
    target = f"sym^{m}({p.name})*{chi}" if m >= 1 else str(chi)

    if ledger.self_dual_declared(target) is False:
        return SiegelReport(
            m,
            target,
            "no-siegel-zero",
            (),
            ("non-self-dual",),
            notes=(
                "declared not self-dual: only self-dual L-functions can "
                "carry an exceptional real zero",
            ),
        )

    if m == 0:
        kind = ledger.word_kind(chi)
        exceptional = kind in ("trivial", "quadratic")
        rule = RULES["character"]
        constituent = ConstituentReport(
            "U",
            str(chi),
            1,
            rule.name,
            rule.citations,
            detail=f"character kind: {kind or 'undeclared'}",
            exceptional=exceptional,
        )
        if exceptional:
            return SiegelReport(
                m,
                target,
                "exceptional-case",
                (constituent,),
                (rule.name,),
                exceptional_character=str(chi),
                exceptional_character_alt=str(chi),
                notes=("at most one exceptional zero",),
            )
        return SiegelReport(
            m,
            target,
            "no-siegel-zero",
            (constituent,),
            (rule.name,),
            notes=(
                "the object is the twisting character itself; no real "
                "(trivial or quadratic) kind is declared for it",
            ),
        )

    tab = ledger.tab
    family_rows = {
        row: label for label, _, row in icosahedral_family(ledger, p, p_tau)
    }
    mults = tab.decompose(tab.sym_power(tab.row(p.galois_row), m))

    constituents: list[ConstituentReport] = []
    rules_used: list[str] = []
    notes: list[str] = []
    exceptional_q: CharWord | None = None
    covered = True

    for row in IRREP_NAMES:
        mult = mults.get(row, 0)
        if not mult:
            continue
        rule = RULES[ROW_RULES[row]]
        rules_used.append(rule.name)
        if row == "U":
            if m % 2:
                raise RuntimeError(
                    "parity violation: a character constituent at odd m"
                )
            q_word = CharWord.gen(p.omega, m // 2) * chi
            kind = ledger.word_kind(q_word)
            # flagged unless the ledger knows the character is not real
            is_exceptional = kind in (None, "trivial", "quadratic")
            detail = (
                f"character constituent {q_word} "
                f"(kind: {kind or 'undeclared, cannot be excluded'})"
            )
            if is_exceptional:
                exceptional_q = q_word
            constituents.append(
                ConstituentReport(
                    row, str(q_word), mult, rule.name, rule.citations,
                    detail=detail, exceptional=is_exceptional,
                )
            )
            continue
        label = family_rows[row]
        if row in _AUX_DEGREE:
            inner_m = _AUX_DEGREE[row]
            try:
                fact = expand_aux_square(inner_m, p, chi, ledger)
            except MissingHypothesisError as err:
                covered = False
                constituents.append(
                    ConstituentReport(
                        row, f"twist of {label}", mult, rule.name,
                        rule.citations, detail=str(err),
                    )
                )
                continue
            constituents.append(
                ConstituentReport(
                    row,
                    f"twist of {label}",
                    mult,
                    rule.name,
                    rule.citations,
                    detail=f"auxiliary expansion at m = {inner_m}",
                    k=fact.k,
                    r=fact.r,
                )
            )
            continue
        if row == "X2":
            verdict, reason = ledger.equivalent(
                Constituent(p), Constituent(p_tau)
            )
            if verdict is None:
                covered = False
                detail = f"cannot certify non-twist-equivalence: {reason}"
            else:
                detail = (
                    "the pair is neither dihedral nor twist-equivalent: "
                    + reason
                )
            constituents.append(
                ConstituentReport(
                    row, f"twist of {label}", mult, rule.name,
                    rule.citations, detail=detail,
                )
            )
            continue
        constituents.append(
            ConstituentReport(
                row, f"twist of {label}", mult, rule.name, rule.citations
            )
        )

    top_k = top_r = None
    if m in _AUX_DEGREE.values() and len(constituents) == 1:
        top_k, top_r = constituents[0].k, constituents[0].r

    if not covered:
        verdict = "not-covered"
    elif exceptional_q is not None:
        verdict = "exceptional-case"
        notes.append("at most one exceptional zero")
    else:
        verdict = "no-siegel-zero"

    alt = None
    if exceptional_q is not None:
        alt = f"omega({p.name})^({m}/2)*chi^({m + 1})"
    return SiegelReport(
        m,
        target,
        verdict,
        tuple(constituents),
        tuple(dict.fromkeys(rules_used)),
        exceptional_character=str(exceptional_q) if exceptional_q else None,
        exceptional_character_alt=alt,
        k=top_k,
        r=top_r,
        notes=tuple(notes),
    )


def siegel_scan(
    lo: int,
    hi: int,
    p: BaseCusp | None = None,
    chi: CharWord | None = None,
    ledger: FactLedger | None = None,
) -> list[SiegelReport]:
    """Reports for every m in [lo, hi]."""
    if lo < 0 or hi < lo:
        raise ValueError(f"bad scan range [{lo}, {hi}]")
    if p is None or ledger is None:
        ledger, p, _ = standard_context(ledger)
    return [siegel_report(m, p, chi, ledger) for m in range(lo, hi + 1)]

