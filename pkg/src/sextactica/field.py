"""Exact arithmetic in K = Q(eps, mu), the degree-6 coordinate field.

eps is a primitive cube root of unity (eps^2 + eps + 1 = 0) and mu is the
real cube root of 2 (mu^3 = 2).  Every element is stored by its coordinates
in the fixed ordered basis (1, eps, mu, eps*mu, mu^2, eps*mu^2) over Q, so
equality is coordinate-wise and "is rational" is a coordinate test.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

BASIS_NAMES = ("1", "eps", "mu", "eps*mu", "mu^2", "eps*mu^2")

_ZERO6 = (Fraction(0),) * 6


def _build_mul_table():
    # Basis index i = e + 2*m encodes eps^e * mu^m.  Products reduce by
    # eps^2 -> -1 - eps and mu^3 -> 2, so each entry is at most two terms.
    table = {}
    for i in range(6):
        e1, m1 = i % 2, i // 2
        for j in range(6):
            e2, m2 = j % 2, j // 2
            e, m = e1 + e2, m1 + m2
            c = 1
            if m >= 3:
                m -= 3
                c = 2
            if e == 2:
                terms = ((2 * m, -c), (1 + 2 * m, -c))
            else:
                terms = ((e + 2 * m, c),)
            table[i, j] = terms
    return table


MUL_TABLE = _build_mul_table()


class FieldElement:
    """An element of K, immutable and hashable."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[Fraction | int]):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != 6:
            raise ValueError("FieldElement needs exactly 6 coordinates")
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, q) -> "FieldElement":
        q = Fraction(q)
        return cls((q,) + _ZERO6[1:])

    @classmethod
    def zero(cls) -> "FieldElement":
        return _FE_ZERO

    @classmethod
    def one(cls) -> "FieldElement":
        return _FE_ONE

    # -- predicates ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def classify(self) -> str:
        """One of 'zero', 'rational_integer', 'rational', 'irrational'."""
        if self.is_zero:
            return "zero"
        if not self.is_rational:
            return "irrational"
        if self.coords[0].denominator == 1:
            return "rational_integer"
        return "rational"

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("element is irrational")
        return self.coords[0]

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(a + b for a, b in zip(self.coords, other.coords))

    __radd__ = __add__

    def __sub__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(a - b for a, b in zip(self.coords, other.coords))

    def __rsub__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "FieldElement":
        return FieldElement(-c for c in self.coords)

    def __mul__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = [Fraction(0)] * 6
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                if b == 0:
                    continue
                ab = a * b
                for k, c in MUL_TABLE[i, j]:
                    out[k] += c * ab
        return FieldElement(out)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse, via the exact 6x6 linear system for
        multiplication-by-self in the fixed basis."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in K")
        # column j of M is self * basis_j
        cols = []
        for j in range(6):
            col = [Fraction(0)] * 6
            for i, a in enumerate(self.coords):
                if a == 0:
                    continue
                for k, c in MUL_TABLE[i, j]:
                    col[k] += c * a
            cols.append(col)
        mat = [[cols[j][i] for j in range(6)] for i in range(6)]
        rhs = [Fraction(1)] + [Fraction(0)] * 5
        sol = _solve_linear(mat, rhs)
        return FieldElement(sol)

    def __truediv__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = _FE_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- equality / hashing / display -----------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FieldElement.from_rational(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for c, name in zip(self.coords, BASIS_NAMES):
            if c == 0:
                continue
            if name == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    # -- serialization ---------------------------------------------------

    def serialize(self) -> list[str]:
        """Six strings "num/den" in basis order; exact round-trip."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coords]

    @classmethod
    def deserialize(cls, items: Sequence[str]) -> "FieldElement":
        if len(items) != 6:
            raise ValueError("expected 6 coordinate strings")
        return cls(Fraction(s) for s in items)


def _coerce(value):
    if isinstance(value, FieldElement):
        return value
    if isinstance(value, (int, Fraction)):
        return FieldElement.from_rational(value)
    return NotImplemented


def _solve_linear(mat, rhs):
    """Solve an exact square linear system over Q by Gaussian elimination."""
    n = len(mat)
    a = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular multiplication matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


_FE_ZERO = FieldElement(_ZERO6)
_FE_ONE = FieldElement((Fraction(1),) + _ZERO6[1:])

ZERO = _FE_ZERO
ONE = _FE_ONE
EPS = FieldElement((0, 1, 0, 0, 0, 0))
MU = FieldElement((0, 0, 1, 0, 0, 0))
MU2 = FieldElement((0, 0, 0, 0, 1, 0))
