"""Exact arithmetic in the real quadratic field Q(sqrt 5).

Every quantity in this package — character values, inner products,
multiplicities — lives in Q(sqrt 5).  Elements are stored as a pair of
rationals ``a + b*sqrt(5)`` backed by :class:`fractions.Fraction`, so all
arithmetic is exact; no floating point is used anywhere.

The field carries one nontrivial automorphism ``tau : sqrt(5) -> -sqrt(5)``
(:meth:`Qsqrt5.conj`), which swaps the golden ratio with its algebraic
conjugate.  Inversion uses the field norm ``a**2 - 5*b**2``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]
ScalarLike = Union["Qsqrt5", int, Fraction]

_SQRT_TOKEN = "√5"  # √5

_RAT = r"[+-]?\d+(?:/\d+)?"
_COEF = r"\d+(?:/\d+)?"
# the three shapes render() can emit: a ± b√5, ±b√5, a
_FULL_RE = re.compile(
    rf"^\s*(?P<a>{_RAT})\s*(?P<op>[+-])\s*(?P<coef>{_COEF})?\s*√5\s*$"
)
_SURD_RE = re.compile(rf"^\s*(?P<sign>[+-])?\s*(?P<coef>{_COEF})?\s*√5\s*$")
_RAT_RE = re.compile(rf"^\s*(?P<a>{_RAT})\s*$")


class Qsqrt5:
    """An element ``a + b*sqrt(5)`` of Q(sqrt 5) with exact rational ``a, b``.

    Instances are immutable, hashable and support ``+ - * / **`` against
    other elements, ``int`` and ``Fraction``.  Equality against plain
    rationals works when ``b == 0``.

    Parameters
    ----------
    a, b:
        Rational and sqrt(5)-coefficients; anything `Fraction` accepts.
    """

    __slots__ = ("a", "b")

    a: Fraction
    b: Fraction

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0) -> None:
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Qsqrt5 is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def coerce(cls, value: ScalarLike) -> "Qsqrt5":
        """Return *value* as a Qsqrt5, accepting int and Fraction."""
        if isinstance(value, Qsqrt5):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as an element of Q(sqrt 5)")

    # -- structure ----------------------------------------------------

    def conj(self) -> "Qsqrt5":
        """Galois conjugate: the automorphism sqrt(5) -> -sqrt(5)."""
        return Qsqrt5(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm ``self * self.conj() = a**2 - 5*b**2`` (a rational)."""
        return self.a * self.a - 5 * self.b * self.b

    def inv(self) -> "Qsqrt5":
        """Multiplicative inverse; raises ZeroDivisionError at zero."""
        n = self.norm()
        if n == 0:
            # norm vanishes only at 0 since 5 is not a rational square
            raise ZeroDivisionError("inverse of zero in Q(sqrt 5)")
        return Qsqrt5(self.a / n, -self.b / n)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        """True when the element is a rational integer."""
        return self.b == 0 and self.a.denominator == 1

    def as_int(self) -> int:
        """The element as a Python int; raises ValueError if not integral."""
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return int(self.a)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: ScalarLike) -> "Qsqrt5":
        o = _try_coerce(other)
        if o is None:
            return NotImplemented
        return Qsqrt5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "Qsqrt5":
        o = _try_coerce(other)
        if o is None:
            return NotImplemented
        return Qsqrt5(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: ScalarLike) -> "Qsqrt5":
        o = _try_coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: ScalarLike) -> "Qsqrt5":
        o = _try_coerce(other)
        if o is None:
            return NotImplemented
        return Qsqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "Qsqrt5":
        o = _try_coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other: ScalarLike) -> "Qsqrt5":
        o = _try_coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int) -> "Qsqrt5":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        out = Qsqrt5(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __neg__(self) -> "Qsqrt5":
        return Qsqrt5(-self.a, -self.b)

    def __pos__(self) -> "Qsqrt5":
        return self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Qsqrt5):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        # agree with Fraction/int hashing on rational elements
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- rendering -----------------------------------------------------

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Qsqrt5({self.a!r}, {self.b!r})"


def _try_coerce(value: object) -> Qsqrt5 | None:
    if isinstance(value, Qsqrt5):
        return value
    if isinstance(value, (int, Fraction)):
        return Qsqrt5(value)
    return None


def render(x: Qsqrt5) -> str:
    """Render ``a + b√5`` with rationals as ``p/q``; exact round-trip with parse."""
    if x.b == 0:
        return str(x.a)
    coef = "" if abs(x.b) == 1 else f"{abs(x.b)}"
    surd = f"{coef}{_SQRT_TOKEN}"
    if x.a == 0:
        return surd if x.b > 0 else f"-{surd}"
    sign = "+" if x.b > 0 else "-"
    return f"{x.a} {sign} {surd}"


def parse(text: str) -> Qsqrt5:
    """Parse the rendering produced by :func:`render` (``sqrt5`` also accepted).

    Raises ValueError on anything else.
    """
    normalized = text.replace("sqrt5", _SQRT_TOKEN)
    try:
        return _parse_normalized(normalized)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def _parse_normalized(normalized: str) -> Qsqrt5:
    m = _FULL_RE.match(normalized)
    if m is not None:
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        b = -coef if m.group("op") == "-" else coef
        return Qsqrt5(Fraction(m.group("a")), b)
    m = _SURD_RE.match(normalized)
    if m is not None:
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        return Qsqrt5(0, -coef if m.group("sign") == "-" else coef)
    m = _RAT_RE.match(normalized)
    if m is not None:
        return Qsqrt5(Fraction(m.group("a")))
    raise ValueError(f"not a Q(sqrt 5) literal: {normalized!r}")


ZERO = Qsqrt5(0)
ONE = Qsqrt5(1)
SQRT5 = Qsqrt5(0, 1)

#: the golden ratio (1 + sqrt 5)/2, a primitive 10th-root trace
GOLDEN = Qsqrt5(Fraction(1, 2), Fraction(1, 2))
#: its Galois conjugate (1 - sqrt 5)/2
GOLDEN_CONJ = GOLDEN.conj()
