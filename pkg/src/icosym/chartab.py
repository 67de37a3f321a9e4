"""The character table of SL2(F5) and exact character arithmetic.

The binary icosahedral group SL2(F5) has nine irreducible characters.  Four
rows take values in Q(sqrt 5) \\ Q: the two 3-dimensional and the two
2-dimensional ones, which are swapped pairwise by the Galois automorphism
sqrt(5) -> -sqrt(5).  Everything here is exact (:class:`icosym.scalar.Qsqrt5`
entries); the column order is the class order fixed in :mod:`icosym.group`.

Conventions
-----------
* Characters are :class:`ClassFunction` vectors of nine values.
* The invariant pairing is ``<f, g> = (1/120) * sum size(c) f(c) conj(g(c))``
  where ``conj`` is complex conjugation of character values.  All values in
  this table are real, so ``conj`` is the identity and the implementation
  multiplies plainly.  (The Galois twist sqrt(5) -> -sqrt(5) is *not*
  complex conjugation; see :meth:`CharacterTable.galois_tau`.)
* Symmetric powers of a degree-2 character follow the trace recursion
  ``s[n](c) = s[1](c) s[n-1](c) - det(c) s[n-2](c)`` with the determinant
  character recovered from the squaring class map,
  ``det(c) = (s[1](c)**2 - s[1](c^2)) / 2``.
* Duality is evaluation at inverses; every class of SL2(F5) is self-inverse,
  so all rows are self-dual (checked, not assumed).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .group import GroupTable, build_sl2f5
from .report import CheckResult
from .scalar import GOLDEN, GOLDEN_CONJ, ONE, ZERO, Qsqrt5, ScalarLike

IRREP_NAMES: tuple[str, ...] = ("U", "V", "W", "X1", "X2", "W'", "W''", "X'", "X''")

N_CLASSES = 9

_PHI = GOLDEN
_PSI = GOLDEN_CONJ

# rows of the classical table; columns follow group.CLASS_REPS
_TABLE_ROWS: dict[str, tuple[ScalarLike | Qsqrt5, ...]] = {
    "U": (1, 1, 1, 1, 1, 1, 1, 1, 1),
    "V": (5, 5, 0, 0, 0, 0, 1, -1, -1),
    # the 6-dimensional row is a spin representation (A5 has no 6-dimensional
    # irreducible), so its value at the central involution is -6; +6 would
    # break column orthogonality against the first column
    "W": (6, -6, 1, 1, -1, -1, 0, 0, 0),
    # the unique 4-dimensional spin row is sym^3 of the 2-dimensional ones;
    # the trace recursion puts -1 on the order-6 class and +1 on order 3
    "X1": (4, -4, -1, -1, 1, 1, 0, -1, 1),
    "X2": (4, 4, -1, -1, -1, -1, 0, 1, 1),
    "W'": (3, 3, _PHI, _PSI, _PHI, _PSI, -1, 0, 0),
    "W''": (3, 3, _PSI, _PHI, _PSI, _PHI, -1, 0, 0),
    "X'": (2, -2, -_PHI, -_PSI, _PHI, _PSI, 0, 1, -1),
    "X''": (2, -2, -_PSI, -_PHI, _PSI, _PHI, 0, 1, -1),
}

#: rows swapped by the Galois automorphism; the other five are fixed
GALOIS_SWAPS: dict[str, str] = {"W'": "W''", "W''": "W'", "X'": "X''", "X''": "X'"}


class NotACharacterError(ValueError):
    """Raised when a class function is not a nonnegative integral combination
    of irreducible characters; carries the offending multiplicities."""

    def __init__(self, coefficients: dict[str, Qsqrt5]):
        self.coefficients = coefficients
        bad = {n: str(c) for n, c in coefficients.items() if not _is_mult(c)}
        super().__init__(f"not a character; offending multiplicities: {bad}")


def _is_mult(c: Qsqrt5) -> bool:
    return c.is_integer() and c.as_int() >= 0


@dataclass(frozen=True)
class ClassFunction:
    """A class function on SL2(F5), nine exact values in column order."""

    values: tuple[Qsqrt5, ...]

    def __post_init__(self) -> None:
        if len(self.values) != N_CLASSES:
            raise ValueError(f"need {N_CLASSES} values, got {len(self.values)}")

    @classmethod
    def of(cls, values: Iterable[ScalarLike]) -> "ClassFunction":
        return cls(tuple(Qsqrt5.coerce(v) for v in values))

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return ClassFunction(tuple(x + y for x, y in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return ClassFunction(tuple(x - y for x, y in zip(self.values, other.values)))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            return ClassFunction(
                tuple(x * y for x, y in zip(self.values, other.values))
            )
        scaled = Qsqrt5.coerce(other)
        return ClassFunction(tuple(x * scaled for x in self.values))

    __rmul__ = __mul__

    def __getitem__(self, i: int) -> Qsqrt5:
        return self.values[i]

    def dim(self) -> Qsqrt5:
        """Value at the identity class."""
        return self.values[0]


class CharacterTable:
    """The nine irreducible characters with exact pairing and decomposition.

    The default instance carries the classical table; *rows* may be
    overridden (same names, nine values each) to exercise the verification
    checks on deliberately corrupted data.
    """

    def __init__(
        self,
        group: GroupTable | None = None,
        rows: Mapping[str, Sequence[ScalarLike]] | None = None,
    ) -> None:
        self.group = group if group is not None else build_sl2f5()
        source = rows if rows is not None else _TABLE_ROWS
        if set(source) != set(IRREP_NAMES):
            raise ValueError("rows must be given for exactly the nine irreducibles")
        self.rows: dict[str, ClassFunction] = {
            name: ClassFunction.of(source[name]) for name in IRREP_NAMES
        }
        self.sizes: tuple[int, ...] = tuple(c.size for c in self.group.classes)
        self._sym_cache: dict[tuple[tuple[Qsqrt5, ...], int], ClassFunction] = {}

    # -- basic queries ---------------------------------------------------

    def row(self, name: str) -> ClassFunction:
        try:
            return self.rows[name]
        except KeyError:
            raise KeyError(f"unknown irreducible {name!r}; choose from {IRREP_NAMES}")

    def dim(self, name: str) -> int:
        return self.row(name).dim().as_int()

    def trivial(self) -> ClassFunction:
        return self.row("U")

    # -- the invariant pairing -------------------------------------------

    def inner_product(self, f: ClassFunction, g: ClassFunction) -> Qsqrt5:
        """Exact ``(1/120) sum_c size(c) f(c) g(c)`` (values are real)."""
        total = ZERO
        for size, x, y in zip(self.sizes, f.values, g.values):
            total = total + x * y * size
        return total / self.group.order

    def decompose(self, f: ClassFunction) -> dict[str, int]:
        """Multiplicities of *f* in the irreducible basis.

        Raises
        ------
        NotACharacterError
            if any multiplicity is negative, fractional or irrational.
        """
        coeffs = {name: self.inner_product(f, self.row(name)) for name in IRREP_NAMES}
        if not all(_is_mult(c) for c in coeffs.values()):
            raise NotACharacterError(coeffs)
        return {name: c.as_int() for name, c in coeffs.items() if c.as_int()}

    # -- operations on characters ------------------------------------------

    def sym_power(self, f: ClassFunction | str, n: int) -> ClassFunction:
        """Character of the n-th symmetric power of a degree-2 character."""
        if isinstance(f, str):
            f = self.row(f)
        if n < 0:
            raise ValueError("symmetric power wants n >= 0")
        if f.dim() != Qsqrt5(2):
            raise ValueError(f"symmetric-power recursion needs degree 2, got {f.dim()}")
        key = (f.values, n)
        if key in self._sym_cache:
            return self._sym_cache[key]
        det = self._determinant_character(f)
        prev = ClassFunction.of([1] * N_CLASSES)
        cur = f
        if n == 0:
            self._sym_cache[key] = prev
            return prev
        for _ in range(n - 1):
            prev, cur = cur, f * cur - det * prev
        self._sym_cache[key] = cur
        return cur

    def _determinant_character(self, f: ClassFunction) -> ClassFunction:
        two = Qsqrt5(2)
        vals = []
        for i in range(N_CLASSES):
            sq = self.group.class_power(i, 2)
            vals.append((f[i] * f[i] - f[sq]) / two)
        return ClassFunction(tuple(vals))

    def dual(self, f: ClassFunction) -> ClassFunction:
        """Value-at-inverses; the contragredient on characters."""
        return ClassFunction(
            tuple(f[self.group.inverse_class(i)] for i in range(N_CLASSES))
        )

    def galois_tau(self, f: ClassFunction) -> ClassFunction:
        """Entrywise sqrt(5) -> -sqrt(5)."""
        return ClassFunction(tuple(v.conj() for v in f.values))

    # -- verification -------------------------------------------------------

    def verify_table(self) -> list[CheckResult]:
        """Orthogonality, degrees, class data and Galois pairing, all exact."""
        out: list[CheckResult] = []

        bad = [
            (a, b)
            for i, a in enumerate(IRREP_NAMES)
            for b in IRREP_NAMES[i:]
            if self.inner_product(self.row(a), self.row(b))
            != (ONE if a == b else ZERO)
        ]
        out.append(
            CheckResult(
                "row-orthonormality",
                not bad,
                "45 pairs" if not bad else f"failing pairs: {bad}",
            )
        )

        dims_ok = all(self.row(n).dim().is_integer() for n in IRREP_NAMES)
        total = sum(self.dim(n) ** 2 for n in IRREP_NAMES) if dims_ok else -1
        out.append(
            CheckResult(
                "degree-sum",
                dims_ok and total == self.group.order,
                f"sum of squared degrees = {total}",
            )
        )

        col_bad = []
        for i in range(N_CLASSES):
            for j in range(i, N_CLASSES):
                s = ZERO
                for name in IRREP_NAMES:
                    row = self.row(name)
                    s = s + row[i] * row[j]
                want = (
                    Qsqrt5(self.group.order) / self.sizes[i] if i == j else ZERO
                )
                if s != want:
                    col_bad.append((i, j))
        out.append(
            CheckResult(
                "column-orthogonality",
                not col_bad,
                "45 pairs" if not col_bad else f"failing columns: {col_bad}",
            )
        )

        swaps_ok = all(
            self.galois_tau(self.row(a)) == self.row(GALOIS_SWAPS.get(a, a))
            for a in IRREP_NAMES
        )
        out.append(
            CheckResult(
                "galois-pairing",
                swaps_ok,
                "tau swaps W'<->W'' and X'<->X'', fixes the rational rows",
            )
        )

        sizes_ok = list(self.sizes) == [1, 1, 12, 12, 12, 12, 30, 20, 20]
        out.append(CheckResult("class-sizes", sizes_ok, f"sizes {list(self.sizes)}"))

        duals_ok = all(self.dual(self.row(n)) == self.row(n) for n in IRREP_NAMES)
        out.append(
            CheckResult("self-duality", duals_ok, "every class is self-inverse")
        )
        return out

    def verify_section1_identities(self) -> list[CheckResult]:
        """The tensor/symmetric-power identities tying the nine rows together.

        Eleven identities; the two double ones compare several left sides
        against a single decomposition.
        """
        checks: list[tuple[str, list[ClassFunction], dict[str, int]]] = [
            ("sym^2(X') = W'", [self.sym_power("X'", 2)], {"W'": 1}),
            ("sym^2(X'') = W''", [self.sym_power("X''", 2)], {"W''": 1}),
            ("sym^3(X') = X1", [self.sym_power("X'", 3)], {"X1": 1}),
            ("sym^3(X'') = X1", [self.sym_power("X''", 3)], {"X1": 1}),
            ("sym^4(X') = V", [self.sym_power("X'", 4)], {"V": 1}),
            ("sym^4(X'') = V", [self.sym_power("X''", 4)], {"V": 1}),
            ("X' * X'' = X2", [self.row("X'") * self.row("X''")], {"X2": 1}),
            (
                "sym^5(X') = W = sym^5(X'')",
                [self.sym_power("X'", 5), self.sym_power("X''", 5)],
                {"W": 1},
            ),
            (
                "W' * X'' = W = W'' * X'",
                [self.row("W'") * self.row("X''"), self.row("W''") * self.row("X'")],
                {"W": 1},
            ),
            ("sym^6(X') = W'' + X2", [self.sym_power("X'", 6)], {"W''": 1, "X2": 1}),
            ("sym^7(X') = X'' + W", [self.sym_power("X'", 7)], {"X''": 1, "W": 1}),
        ]
        out = []
        for name, sides, want in checks:
            gots = [self._safe_decompose(f) for f in sides]
            ok = all(g == want for g in gots)
            detail = f"got {gots[0]}" if len(gots) == 1 else f"got {gots}"
            out.append(CheckResult(name, ok, detail))
        return out

    def _safe_decompose(self, f: ClassFunction) -> dict[str, int] | str:
        try:
            return self.decompose(f)
        except NotACharacterError as err:
            return str(err)


@lru_cache(maxsize=1)
def default_table() -> CharacterTable:
    """The shared instance carrying the classical table."""
    return CharacterTable()


def format_decomposition(mults: Mapping[str, int]) -> str:
    """Human form like ``U + 2W'`` in table row order; ``0`` when empty."""
    parts = []
    for name in IRREP_NAMES:
        m = mults.get(name, 0)
        if m == 1:
            parts.append(name)
        elif m:
            parts.append(f"{m}{name}")
    return " + ".join(parts) if parts else "0"
