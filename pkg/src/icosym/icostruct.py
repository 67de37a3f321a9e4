"""Irreducible representations of icosahedral groups with enlarged center.

The groups treated here are the central products ``G = (G0 x C) / <(-I, -1)>``
where ``G0 = SL2(F5)`` and ``C`` is cyclic of order ``2m``.  An irreducible
of ``G`` is a pair: an irreducible of ``G0`` together with a central
character exponent ``a`` mod ``2m`` whose parity matches the action of
``-I`` in the chosen row (``-I`` and the central element of order 2 are
identified, so the two signs must agree).

Twisting by characters of ``G`` moves the exponent by even amounts and
never changes the ``G0``-row, so "same row" is exactly "twist equivalent";
duality negates the exponent.  Symmetric powers of the 2-dimensional
irreducibles multiply the exponent by ``n`` and decompose on the ``G0`` side
through :mod:`icosym.chartab`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartab import IRREP_NAMES, CharacterTable, default_table
from .report import CheckResult


@dataclass(frozen=True)
class IcoIrrep:
    """An irreducible (row name, central exponent) of the order-120m group."""

    base: str
    exponent: int

    def __str__(self) -> str:
        return f"({self.base}, {self.exponent})"


def base_parity(name: str, tab: CharacterTable | None = None) -> int:
    """1 when -I acts by -1 in the row (spin rows), else 0."""
    tab = tab or default_table()
    row = tab.row(name)
    if row[1] == row[0]:
        return 0
    if row[1] == -row[0]:
        return 1
    raise ValueError(f"row {name} is not a homogeneous central type")


def validate_irrep(r: IcoIrrep, m: int, tab: CharacterTable | None = None) -> None:
    if m < 1:
        raise ValueError("center parameter m must be >= 1")
    if r.base not in IRREP_NAMES:
        raise ValueError(f"unknown row {r.base!r}")
    if not 0 <= r.exponent < 2 * m:
        raise ValueError(f"exponent {r.exponent} out of range for 2m = {2 * m}")
    if r.exponent % 2 != base_parity(r.base, tab):
        raise ValueError(
            f"exponent parity mismatch: {r} needs exponent "
            f"{'odd' if base_parity(r.base, tab) else 'even'} mod 2"
        )


def classify_irreps(m: int, tab: CharacterTable | None = None) -> list[IcoIrrep]:
    """All irreducibles for center of order 2m, row-major then by exponent."""
    if m < 1:
        raise ValueError("center parameter m must be >= 1")
    tab = tab or default_table()
    out = []
    for name in IRREP_NAMES:
        p = base_parity(name, tab)
        out.extend(IcoIrrep(name, a) for a in range(p, 2 * m, 2))
    return out


def dim_irrep(r: IcoIrrep, tab: CharacterTable | None = None) -> int:
    return (tab or default_table()).dim(r.base)


def twist_equivalent(r1: IcoIrrep, r2: IcoIrrep, m: int) -> bool:
    """Characters of the group shift exponents by even steps within a row."""
    validate_irrep(r1, m)
    validate_irrep(r2, m)
    return r1.base == r2.base


def dual_irrep(r: IcoIrrep, m: int, tab: CharacterTable | None = None) -> IcoIrrep:
    """Rows are self-dual (checked), so duality only negates the exponent."""
    tab = tab or default_table()
    validate_irrep(r, m, tab)
    if tab.dual(tab.row(r.base)) != tab.row(r.base):
        raise RuntimeError(f"row {r.base} unexpectedly not self-dual")
    return IcoIrrep(r.base, (-r.exponent) % (2 * m))


def is_self_dual(r: IcoIrrep, m: int, tab: CharacterTable | None = None) -> bool:
    return dual_irrep(r, m, tab) == r


def sym_power_irrep(
    r: IcoIrrep, n: int, m: int, tab: CharacterTable | None = None
) -> dict[IcoIrrep, int]:
    """Decompose sym^n of a 2-dimensional irreducible into IcoIrreps."""
    tab = tab or default_table()
    validate_irrep(r, m, tab)
    if dim_irrep(r, tab) != 2:
        raise ValueError(f"symmetric powers here act on 2-dimensional irreps, not {r}")
    mults = tab.decompose(tab.sym_power(r.base, n))
    exponent = (n * r.exponent) % (2 * m)
    out = {}
    for name, mult in mults.items():
        constituent = IcoIrrep(name, exponent)
        validate_irrep(constituent, m, tab)  # parity must match automatically
        out[constituent] = mult
    return out


def trivial_constituent_of_sym(n: int, tab: CharacterTable | None = None) -> int:
    """Multiplicity of the trivial character in sym^n of the designated row X'."""
    tab = tab or default_table()
    value = tab.inner_product(tab.sym_power("X'", n), tab.trivial())
    if not value.is_integer():
        raise RuntimeError(f"non-integral multiplicity at n = {n}: {value}")
    return value.as_int()


def scan_trivial(max_n: int, tab: CharacterTable | None = None) -> dict[int, int]:
    """n -> multiplicity of the trivial constituent in sym^n(X'), 0 <= n <= max_n."""
    tab = tab or default_table()
    return {n: trivial_constituent_of_sym(n, tab) for n in range(max_n + 1)}


def self_dual_two_dim_report(m: int, tab: CharacterTable | None = None) -> dict:
    """Both readings of the 'no self-dual 2-dimensional irrep' claim.

    The exponent criterion settles it: a 2-dimensional (row, a) has a odd,
    and self-duality needs 2a = 0 mod 2m, i.e. a in {0, m}.  For even m no
    odd exponent qualifies; for odd m exactly (X', m) and (X'', m) do.  The
    blanket claim therefore holds exactly when m is even (equivalently when
    the center's order 2m is divisible by 4); this function reports rather
    than asserts, leaving the intended hypothesis to the caller.
    """
    tab = tab or default_table()
    self_dual = [
        r
        for r in classify_irreps(m, tab)
        if dim_irrep(r, tab) == 2 and is_self_dual(r, m, tab)
    ]
    return {
        "m": m,
        "center_order_divisible_by_4": (2 * m) % 4 == 0,
        "self_dual_two_dim": self_dual,
        "blanket_claim_holds": not self_dual,
    }


def generator_family(
    m: int, tab: CharacterTable | None = None
) -> dict[str, IcoIrrep]:
    """The nine derived objects every irreducible is twist-equivalent to.

    Built from the designated 2-dimensional pair Lam = (X', 1) and
    Lam' = (X'', 1): the trivial character, the pair itself, their squares
    and their product, and the third through fifth symmetric powers of Lam.
    Each must come out irreducible; the nine land in pairwise distinct rows.
    """
    tab = tab or default_table()
    if m < 1:
        raise ValueError("center parameter m must be >= 1")
    lam = IcoIrrep("X'", 1 % (2 * m))
    lam_t = IcoIrrep("X''", 1 % (2 * m))

    def single(mults: dict[IcoIrrep, int], label: str) -> IcoIrrep:
        if len(mults) != 1 or set(mults.values()) != {1}:
            raise RuntimeError(f"{label} is not irreducible: {mults}")
        return next(iter(mults))

    def product(r1: IcoIrrep, r2: IcoIrrep, label: str) -> IcoIrrep:
        mults = tab.decompose(tab.row(r1.base) * tab.row(r2.base))
        exp = (r1.exponent + r2.exponent) % (2 * m)
        return single({IcoIrrep(n, exp): k for n, k in mults.items()}, label)

    return {
        "1": IcoIrrep("U", 0),
        "Lam": lam,
        "Lam'": lam_t,
        "sym^2(Lam)": single(sym_power_irrep(lam, 2, m, tab), "sym^2(Lam)"),
        "sym^2(Lam')": single(sym_power_irrep(lam_t, 2, m, tab), "sym^2(Lam')"),
        "sym^3(Lam)": single(sym_power_irrep(lam, 3, m, tab), "sym^3(Lam)"),
        "Lam*Lam'": product(lam, lam_t, "Lam*Lam'"),
        "sym^4(Lam)": single(sym_power_irrep(lam, 4, m, tab), "sym^4(Lam)"),
        "sym^5(Lam)": single(sym_power_irrep(lam, 5, m, tab), "sym^5(Lam)"),
    }


def verify_generators(m: int, tab: CharacterTable | None = None) -> list[CheckResult]:
    """Counts, twist classes and the generator family for center order 2m."""
    tab = tab or default_table()
    out: list[CheckResult] = []
    irreps = classify_irreps(m, tab)

    out.append(
        CheckResult(
            f"m={m}: irrep count",
            len(irreps) == 9 * m,
            f"{len(irreps)} irreducibles (want {9 * m})",
        )
    )

    by_row: dict[str, int] = {}
    for r in irreps:
        by_row[r.base] = by_row.get(r.base, 0) + 1
    out.append(
        CheckResult(
            f"m={m}: twist classes",
            set(by_row) == set(IRREP_NAMES) and set(by_row.values()) == {m},
            f"9 rows x {m} exponents",
        )
    )

    total = sum(dim_irrep(r, tab) ** 2 for r in irreps)
    out.append(
        CheckResult(
            f"m={m}: degree sum",
            total == 120 * m,
            f"sum of squared degrees = {total} (want {120 * m})",
        )
    )

    try:
        gens = generator_family(m, tab)
        bases = sorted(g.base for g in gens.values())
        distinct = bases == sorted(IRREP_NAMES)
        out.append(
            CheckResult(
                f"m={m}: generator family",
                distinct,
                "nine irreducible generators in pairwise distinct rows",
            )
        )
        covered = all(
            any(r.base == g.base for g in gens.values()) for r in irreps
        )
        out.append(
            CheckResult(
                f"m={m}: coverage",
                covered,
                "every irreducible twist-equivalent to exactly one generator",
            )
        )
    except RuntimeError as err:
        out.append(CheckResult(f"m={m}: generator family", False, str(err)))

    # equivalences among alternative realizations of the same rows
    lam = IcoIrrep("X'", 1 % (2 * m))
    lam_t = IcoIrrep("X''", 1 % (2 * m))
    pairs = [
        ("sym^3(Lam) ~ sym^3(Lam')", sym_power_irrep(lam, 3, m, tab),
         sym_power_irrep(lam_t, 3, m, tab)),
        ("sym^4(Lam) ~ sym^4(Lam')", sym_power_irrep(lam, 4, m, tab),
         sym_power_irrep(lam_t, 4, m, tab)),
        ("sym^5(Lam) ~ sym^5(Lam')", sym_power_irrep(lam, 5, m, tab),
         sym_power_irrep(lam_t, 5, m, tab)),
    ]
    for label, left, right in pairs:
        lrows = {r.base for r in left}
        rrows = {r.base for r in right}
        out.append(
            CheckResult(
                f"m={m}: {label}",
                len(lrows) == 1 and lrows == rrows,
                f"rows {sorted(lrows)} vs {sorted(rrows)}",
            )
        )

    for label, left, right in [
        ("sym^5(Lam) ~ Lam' * sym^2(Lam)", ("X'", 5), ("X''", "W'")),
        ("sym^5(Lam) ~ Lam * sym^2(Lam')", ("X'", 5), ("X'", "W''")),
    ]:
        sym_rows = tab.decompose(tab.sym_power(left[0], left[1]))
        prod_rows = tab.decompose(tab.row(right[0]) * tab.row(right[1]))
        out.append(
            CheckResult(
                f"m={m}: {label}",
                sym_rows == prod_rows and len(sym_rows) == 1,
                f"both land in row {sorted(sym_rows)}",
            )
        )
    return out
