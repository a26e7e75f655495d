"""Sparse homogeneous polynomials in x, y, z over K, with the small exact
linear-algebra and calculus operations the curve computations need."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .field import FieldElement, ONE, ZERO

VARS = ("x", "y", "z")


class DegreeMismatchError(ValueError):
    """Raised when adding or subtracting polynomials of different degrees."""


class BadDimensionError(ValueError):
    """Raised for matrices that are not 3x3 or 4x4."""


class ParseError(ValueError):
    """Raised for malformed polynomial text."""


def _coerce_coeff(c) -> FieldElement:
    if isinstance(c, FieldElement):
        return c
    return FieldElement.from_rational(Fraction(c))


class HomPoly:
    """A homogeneous polynomial as a map from exponent triples to nonzero
    coefficients in K.  The zero polynomial is the empty map (degree None)."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms: Mapping[tuple[int, int, int], FieldElement] | None = None):
        clean: dict[tuple[int, int, int], FieldElement] = {}
        degree = None
        if terms:
            for expo, coeff in terms.items():
                coeff = _coerce_coeff(coeff)
                if coeff.is_zero:
                    continue
                i, j, k = expo
                if i < 0 or j < 0 or k < 0:
                    raise ValueError(f"negative exponent in {expo}")
                d = i + j + k
                if degree is None:
                    degree = d
                elif d != degree:
                    raise DegreeMismatchError("inhomogeneous term set")
                clean[(i, j, k)] = coeff
        if not clean:
            degree = None
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "degree", degree)

    def __setattr__(self, name, value):
        raise AttributeError("HomPoly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "HomPoly":
        return cls()

    @classmethod
    def monomial(cls, expo: tuple[int, int, int], coeff=1) -> "HomPoly":
        return cls({expo: _coerce_coeff(coeff)})

    @classmethod
    def variable(cls, name: str) -> "HomPoly":
        expo = [0, 0, 0]
        expo[VARS.index(name)] = 1
        return cls({tuple(expo): ONE})

    @classmethod
    def constant(cls, coeff) -> "HomPoly":
        return cls({(0, 0, 0): _coerce_coeff(coeff)})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, expo: tuple[int, int, int]) -> FieldElement:
        return self.terms.get(expo, ZERO)

    def sorted_terms(self):
        """Terms in graded-lexicographic order with x > y > z."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "HomPoly") -> "HomPoly":
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"cannot add degree {self.degree} and degree {other.degree}")
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            s = out.get(expo)
            out[expo] = coeff if s is None else s + coeff
        return HomPoly(out)

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "HomPoly":
        return HomPoly({e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "HomPoly":
        if isinstance(other, (int, Fraction, FieldElement)):
            c = _coerce_coeff(other)
            if c.is_zero:
                return HomPoly()
            return HomPoly({e: v * c for e, v in self.terms.items()})
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return HomPoly()
        out: dict[tuple[int, int, int], FieldElement] = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                expo = (i1 + i2, j1 + j2, k1 + k2)
                prod = c1 * c2
                s = out.get(expo)
                out[expo] = prod if s is None else s + prod
        return HomPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HomPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = HomPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"HomPoly({poly_to_text(self)!r})"

    def __str__(self):
        return poly_to_text(self)

    # -- calculus ------------------------------------------------------------

    def partial(self, var: str | int) -> "HomPoly":
        """Exact partial derivative; degree drops by one or result is zero."""
        v = VARS.index(var) if isinstance(var, str) else var
        out = {}
        for expo, coeff in self.terms.items():
            e = expo[v]
            if e == 0:
                continue
            new = list(expo)
            new[v] = e - 1
            out[tuple(new)] = coeff * e
        return HomPoly(out)

    def gradient(self) -> tuple["HomPoly", "HomPoly", "HomPoly"]:
        return (self.partial(0), self.partial(1), self.partial(2))

    def evaluate(self, coords: Sequence[FieldElement]) -> FieldElement:
        """Exact value at projective coordinates (any fixed representative)."""
        if len(coords) != 3:
            raise ValueError("need 3 coordinates")
        coords = [_coerce_coeff(c) for c in coords]
        if self.is_zero:
            return ZERO
        d = self.degree
        powers = []
        for c in coords:
            pw = [ONE]
            for _ in range(d):
                pw.append(pw[-1] * c)
            powers.append(pw)
        total = ZERO
        for (i, j, k), coeff in self.terms.items():
            total = total + coeff * powers[0][i] * powers[1][j] * powers[2][k]
        return total


class PolyMatrix:
    """A 3x3 or 4x4 grid of homogeneous polynomials."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[HomPoly]]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n not in (3, 4) or any(len(r) != n for r in rows):
            raise BadDimensionError("matrix must be square of size 3 or 4")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @property
    def size(self) -> int:
        return len(self.rows)

    def det(self) -> HomPoly:
        return _det(self.rows)


def _det(rows) -> HomPoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = HomPoly()
    sign = 1
    for col in range(n):
        entry = rows[0][col]
        if not entry.is_zero:
            minor = [[rows[r][c] for c in range(n) if c != col] for r in range(1, n)]
            piece = entry * _det(minor)
            total = total + (piece if sign > 0 else -piece)
        sign = -sign
    return total


def det(matrix) -> HomPoly:
    """Cofactor-expansion determinant of a 3x3 or 4x4 polynomial matrix."""
    if not isinstance(matrix, PolyMatrix):
        matrix = PolyMatrix(matrix)
    return matrix.det()


def proportional(p: HomPoly, q: HomPoly) -> Optional[FieldElement]:
    """The scalar lam with p = lam * q, if one exists (lam != 0)."""
    if p.is_zero and q.is_zero:
        return ONE
    if p.is_zero or q.is_zero:
        return None
    if set(p.terms) != set(q.terms):
        return None
    expo = next(iter(p.terms))
    lam = p.terms[expo] / q.terms[expo]
    for e, c in q.terms.items():
        if p.terms[e] != lam * c:
            return None
    return lam


def vanishing_order(p: HomPoly, coords: Sequence[FieldElement]) -> int:
    """Smallest m such that some order-m partial of p is nonzero at the point.

    All partials of lower order vanish there.  For nonzero p this terminates
    by order deg(p); exceeding deg(p)+1 signals corrupted input.
    """
    if p.is_zero:
        raise ValueError("vanishing order of the zero polynomial")
    layer = {(0, 0, 0): p}
    for order in range(p.degree + 2):
        for q in layer.values():
            if not q.evaluate(coords).is_zero:
                return order
        nxt = {}
        for multi, q in layer.items():
            for v in range(3):
                m = list(multi)
                m[v] += 1
                key = tuple(m)
                if key not in nxt:
                    nxt[key] = q.partial(v)
        layer = nxt
    raise ArithmeticError("vanishing order exceeded degree guard")


# -- text format ---------------------------------------------------------------
#
# A polynomial is a sum of terms "coeff*x^i*y^j*z^k".  The canonical coefficient
# form is the 6-tuple FieldElement serialization "(n/d,n/d,n/d,n/d,n/d,n/d)";
# integers and single fractions are accepted (and emitted) as shorthand for
# rational coefficients.


def _coeff_to_text(c: FieldElement) -> str:
    if c.is_rational:
        q = c.coords[0]
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    return "(" + ",".join(f"{v.numerator}/{v.denominator}" for v in c.coords) + ")"


def _mono_to_text(expo) -> str:
    parts = []
    for name, e in zip(VARS, expo):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_to_text(p: HomPoly) -> str:
    if p.is_zero:
        return "0"
    chunks = []
    for expo, coeff in p.sorted_terms():
        mono = _mono_to_text(expo)
        ctext = _coeff_to_text(coeff)
        if not mono:
            chunks.append(ctext)
        elif ctext == "1":
            chunks.append(mono)
        elif ctext == "-1":
            chunks.append(f"-{mono}")
        else:
            chunks.append(f"{ctext}*{mono}")
    out = chunks[0]
    for c in chunks[1:]:
        out += f" - {c[1:]}" if c.startswith("-") else f" + {c}"
    return out


def parse_poly(text: str) -> HomPoly:
    """Parse the polynomial text format (integer/fraction shorthand allowed)."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial text")
    if s == "0":
        return HomPoly()
    # split on top-level + and - (not inside coefficient tuples)
    pieces: list[str] = []
    depth = 0
    cur = ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur:
            pieces.append(cur)
            cur = ch if ch == "-" else ""
        else:
            cur += ch
    pieces.append(cur)
    total: dict[tuple[int, int, int], FieldElement] = {}
    for piece in pieces:
        expo, coeff = _parse_term(piece)
        prev = total.get(expo)
        total[expo] = coeff if prev is None else prev + coeff
    try:
        return HomPoly(total)
    except DegreeMismatchError as exc:
        raise ParseError(str(exc)) from None


def _parse_term(piece: str):
    if not piece or piece == "-":
        raise ParseError(f"bad term {piece!r}")
    sign = 1
    if piece.startswith("-"):
        sign = -1
        piece = piece[1:]
    elif piece.startswith("+"):
        piece = piece[1:]
    coeff = ONE
    expo = [0, 0, 0]
    saw_coeff = False
    for factor in _split_factors(piece):
        if factor[0] in VARS:
            name = factor[0]
            rest = factor[1:]
            if rest == "":
                e = 1
            elif rest.startswith("^"):
                try:
                    e = int(rest[1:])
                except ValueError:
                    raise ParseError(f"bad exponent in {factor!r}") from None
            else:
                raise ParseError(f"bad monomial factor {factor!r}")
            if e < 0:
                raise ParseError("negative exponent")
            expo[VARS.index(name)] += e
        elif factor.startswith("("):
            if not factor.endswith(")"):
                raise ParseError(f"unbalanced coefficient tuple {factor!r}")
            items = factor[1:-1].split(",")
            if len(items) != 6:
                raise ParseError("coefficient tuple needs 6 entries")
            try:
                coeff = coeff * FieldElement(Fraction(v) for v in items)
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad coefficient tuple {factor!r}") from None
            saw_coeff = True
        else:
            try:
                coeff = coeff * FieldElement.from_rational(Fraction(factor))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad factor {factor!r}") from None
            saw_coeff = True
    if not saw_coeff and expo == [0, 0, 0]:
        raise ParseError(f"empty term {piece!r}")
    return tuple(expo), coeff * sign


def _split_factors(piece: str):
    factors = []
    depth = 0
    cur = ""
    for ch in piece:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            if cur:
                factors.append(cur)
            cur = ""
        else:
            cur += ch
    if cur:
        factors.append(cur)
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {piece!r}")
    # "3x^2" style without "*" is not accepted; fractions like 1/2 pass through
    return factors


X = HomPoly.variable("x")
Y = HomPoly.variable("y")
Z = HomPoly.variable("z")


def fermat_cubic() -> HomPoly:
    """x^3 + y^3 + z^3."""
    return HomPoly({(3, 0, 0): ONE, (0, 3, 0): ONE, (0, 0, 3): ONE})
