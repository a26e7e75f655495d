"""Projective points, lines and conics over K, and the Fermat-cubic
configurations: flexes, the two Hesse arrangements, and the 27 points cut
out by the second Hessian.

All coordinates are exact; normalization is canonical so equality is
coordinate-wise and objects are usable as dict keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .field import EPS, FieldElement, MU, ONE, ZERO
from .hessians import hessian, second_hessian
from .poly import HomPoly, fermat_cubic, poly_to_text, proportional


class DuplicatePointsError(ValueError):
    """A point set that must be pairwise distinct contains repeats."""


class NonBinomialCubicError(ArithmeticError):
    """A line-curve substitution did not reduce to a*t^3 = b."""


def _coerce(c) -> FieldElement:
    if isinstance(c, FieldElement):
        return c
    return FieldElement.from_rational(Fraction(c))


def _normalize_last(coords: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    coords = tuple(_coerce(c) for c in coords)
    pivot = None
    for c in reversed(coords):
        if not c.is_zero:
            pivot = c
            break
    if pivot is None:
        raise ValueError("all coordinates zero")
    inv = pivot.inverse()
    return tuple(c * inv for c in coords)


def _normalize_first(coords: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    coords = tuple(_coerce(c) for c in coords)
    pivot = next((c for c in coords if not c.is_zero), None)
    if pivot is None:
        raise ValueError("all coordinates zero")
    inv = pivot.inverse()
    return tuple(c * inv for c in coords)


class ProjPoint:
    """A point of P^2 over K, scaled so the last nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[FieldElement]):
        if len(coords) != 3:
            raise ValueError("a projective point has 3 coordinates")
        object.__setattr__(self, "coords", _normalize_last(coords))

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"ProjPoint({self})"

    def __str__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"

    def sort_key(self) -> tuple:
        return tuple(c.coords for c in self.coords)

    def serialize(self) -> list[list[str]]:
        return [c.serialize() for c in self.coords]


class Line:
    """The line a*x + b*y + c*z = 0, normalized like a point."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[FieldElement]):
        if len(coeffs) != 3:
            raise ValueError("a line has 3 coefficients")
        object.__setattr__(self, "coeffs", _normalize_last(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Line is immutable")

    def __eq__(self, other):
        if not isinstance(other, Line):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Line({self})"

    def __str__(self):
        return poly_to_text(self.polynomial())

    def sort_key(self) -> tuple:
        return tuple(c.coords for c in self.coeffs)

    def contains(self, p: ProjPoint) -> bool:
        a, b, c = self.coeffs
        x, y, z = p.coords
        return (a * x + b * y + c * z).is_zero

    def polynomial(self) -> HomPoly:
        return HomPoly({(1, 0, 0): self.coeffs[0],
                        (0, 1, 0): self.coeffs[1],
                        (0, 0, 1): self.coeffs[2]})


def _cross(u: Sequence[FieldElement], v: Sequence[FieldElement]):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def line_through(p: ProjPoint, q: ProjPoint) -> Line:
    if p == q:
        raise DuplicatePointsError("line through a repeated point")
    return Line(_cross(p.coords, q.coords))


def intersect_lines(l1: Line, l2: Line) -> ProjPoint:
    if l1 == l2:
        raise ValueError("lines coincide")
    return ProjPoint(_cross(l1.coeffs, l2.coeffs))


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    cx = _cross(p.coords, q.coords)
    x, y, z = r.coords
    return (cx[0] * x + cx[1] * y + cx[2] * z).is_zero


CONIC_MONOMIALS = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1))


class Conic:
    """A*x^2 + B*y^2 + C*z^2 + D*xy + E*xz + F*yz = 0, scaled so the first
    nonzero coefficient is 1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[FieldElement]):
        if len(coeffs) != 6:
            raise ValueError("a conic has 6 coefficients")
        object.__setattr__(self, "coeffs", _normalize_first(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Conic is immutable")

    def __eq__(self, other):
        if not isinstance(other, Conic):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Conic({self})"

    def __str__(self):
        return poly_to_text(self.polynomial())

    def sort_key(self) -> tuple:
        return tuple(c.coords for c in self.coeffs)

    def polynomial(self) -> HomPoly:
        return HomPoly(dict(zip(CONIC_MONOMIALS, self.coeffs)))

    def sym_matrix(self) -> list[list[FieldElement]]:
        a, b, c, d, e, f = self.coeffs
        half = FieldElement.from_rational(Fraction(1, 2))
        return [[a, d * half, e * half],
                [d * half, b, f * half],
                [e * half, f * half, c]]

    def contains(self, p: ProjPoint) -> bool:
        return self.evaluate(p).is_zero

    def evaluate(self, p: ProjPoint) -> FieldElement:
        x, y, z = p.coords
        a, b, c, d, e, f = self.coeffs
        return a * x * x + b * y * y + c * z * z + d * x * y + e * x * z + f * y * z

    def rank(self) -> int:
        m = self.sym_matrix()
        if not _det3(m).is_zero:
            return 3
        for i in range(3):
            for j in range(3):
                for k in range(i + 1, 3):
                    for l in range(j + 1, 3):
                        if not (m[i][j] * m[k][l] - m[i][l] * m[k][j]).is_zero:
                            return 2
        return 1


def _det3(m) -> FieldElement:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


# -- exact linear algebra over K ------------------------------------------------


def kernel_basis(rows: list[list[FieldElement]]) -> list[list[FieldElement]]:
    """Basis of the right kernel of a small matrix over K (exact)."""
    if not rows:
        return []
    ncols = len(rows[0])
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if not mat[i][col].is_zero), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][col].inverse()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][col].is_zero:
                f = mat[i][col]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ZERO] * ncols
        vec[fc] = ONE
        for prow, pcol in enumerate(pivots):
            vec[pcol] = -mat[prow][fc]
        basis.append(vec)
    return basis


# -- binomial cubic solving ------------------------------------------------------


def _icbrt(n: int) -> Optional[int]:
    if n < 0:
        r = _icbrt(-n)
        return None if r is None else -r
    if n == 0:
        return 0
    r = round(n ** (1 / 3))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c * c * c == n:
            return c
    return None


def _rational_cbrt(q: Fraction) -> Optional[Fraction]:
    num = _icbrt(q.numerator)
    den = _icbrt(q.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def solve_binomial_cubic(a: FieldElement, b: FieldElement) -> tuple[FieldElement, ...]:
    """The three roots t of a*t^3 = b in K.

    Only ratios of the form (rational) * 2^j are solvable here: the real
    root is cbrt(rational) * mu^j and the others are its eps-multiples.
    Anything else raises, rather than approximating.
    """
    if a.is_zero:
        raise NonBinomialCubicError("leading coefficient is zero")
    c = b / a
    if c.is_zero:
        return (ZERO, ZERO, ZERO)
    if not c.is_rational:
        raise NonBinomialCubicError(f"ratio {c} is not rational")
    q = c.rational_value()
    for j in range(3):
        base = _rational_cbrt(q / (2 ** j))
        if base is not None:
            t0 = FieldElement.from_rational(base) * MU ** j
            return (t0, t0 * EPS, t0 * EPS * EPS)
    raise NonBinomialCubicError(f"no cube root of {q} of the form r^3 * 2^j")


def line_basis_points(line: Line) -> tuple[ProjPoint, ProjPoint]:
    """Canonical parametrization basis: solve for the pivot coordinate."""
    coeffs = line.coeffs
    piv = next(i for i, c in enumerate(coeffs) if not c.is_zero)
    inv = coeffs[piv].inverse()
    basis = []
    for free in range(3):
        if free == piv:
            continue
        vec = [ZERO, ZERO, ZERO]
        vec[free] = ONE
        vec[piv] = -coeffs[free] * inv
        basis.append(ProjPoint(vec))
    return basis[0], basis[1]


def line_cubic_points(line: Line, curve: HomPoly) -> list[ProjPoint]:
    """The three intersection points of a line with a cubic, via the
    canonical parametrization; requires the substituted cubic to be binomial."""
    if curve.is_zero or curve.degree != 3:
        raise ValueError("curve must be a cubic")
    p0, p1 = line_basis_points(line)
    # curve(s*p0 + t*p1) = c30 s^3 + c21 s^2 t + c12 s t^2 + c03 t^3
    cs = _restrict_to_line(curve, p0, p1)
    c30, c21, c12, c03 = cs
    if not (c21.is_zero and c12.is_zero):
        raise NonBinomialCubicError("substituted cubic has mixed terms")
    if c30.is_zero or c03.is_zero:
        raise NonBinomialCubicError("substituted cubic is degenerate")
    # s = 1, c03 t^3 = -c30
    points = []
    for t in solve_binomial_cubic(c03, -c30):
        coords = [a + t * b for a, b in zip(p0.coords, p1.coords)]
        points.append(ProjPoint(coords))
    return points


def _restrict_to_line(curve: HomPoly, p0: ProjPoint, p1: ProjPoint):
    """Coefficients (s^3, s^2 t, s t^2, t^3) of curve(s*p0 + t*p1)."""
    out = [ZERO, ZERO, ZERO, ZERO]
    for (i, j, k), coeff in curve.terms.items():
        # expand each coordinate power binomially in (s, t)
        per_var = []
        for idx, e in enumerate((i, j, k)):
            a, b = p0.coords[idx], p1.coords[idx]
            row = [ZERO] * (e + 1)
            for m in range(e + 1):
                row[m] = _binom(e, m) * a ** (e - m) * b ** m
            per_var.append(row)
        conv = per_var[0]
        for row in per_var[1:]:
            nxt = [ZERO] * (len(conv) + len(row) - 1)
            for u, cu in enumerate(conv):
                if cu.is_zero:
                    continue
                for v, cv in enumerate(row):
                    if cv.is_zero:
                        continue
                    nxt[u + v] = nxt[u + v] + cu * cv
            conv = nxt
        for m, cv in enumerate(conv):
            out[m] = out[m] + coeff * cv
    return out


def _binom(n: int, k: int) -> int:
    from math import comb
    return comb(n, k)


# -- arrangements -----------------------------------------------------------------


@dataclass(frozen=True)
class ArrangementSummary:
    line_count: int
    point_count: int
    points_per_line: tuple[int, ...]
    lines_per_point: tuple[int, ...]
    signature: str

    def as_dict(self) -> dict:
        return {
            "line_count": self.line_count,
            "point_count": self.point_count,
            "points_per_line": list(self.points_per_line),
            "lines_per_point": list(self.lines_per_point),
            "signature": self.signature,
        }


def summarize_arrangement(lines: Iterable[Line], points: Iterable[ProjPoint]) -> ArrangementSummary:
    lines = list(lines)
    points = list(points)
    ppl = tuple(sorted(sum(1 for p in points if ln.contains(p)) for ln in lines))
    lpp = tuple(sorted(sum(1 for ln in lines if ln.contains(p)) for p in points))
    if sum(ppl) != sum(lpp):
        raise ArithmeticError("incidence double count mismatch")
    if ppl and lpp and len(set(ppl)) == 1 and len(set(lpp)) == 1:
        sig = f"({len(lines)}_{ppl[0]}, {len(points)}_{lpp[0]})"
    else:
        sig = "irregular"
    return ArrangementSummary(len(lines), len(points), ppl, lpp, sig)


# -- the Fermat configurations -----------------------------------------------------

FERMAT = fermat_cubic()

_OMEGAS = (ONE, EPS, EPS * EPS)


def coordinate_lines() -> list[Line]:
    return [Line((ONE, ZERO, ZERO)), Line((ZERO, ONE, ZERO)), Line((ZERO, ZERO, ONE))]


def flex_points() -> list[ProjPoint]:
    """The 9 common zeros of the Fermat cubic and its Hessian."""
    h = hessian(FERMAT).h
    lam = proportional(h, HomPoly({(1, 1, 1): ONE}))
    if lam is None:
        raise ArithmeticError("Hessian of the Fermat cubic is not xyz")
    points = []
    for line in coordinate_lines():
        on_line = line_cubic_points(line, FERMAT)
        points.extend(on_line)
    seen = set(points)
    if len(seen) != 9:
        raise ArithmeticError("expected 9 distinct flexes")
    for p in points:
        if not FERMAT.evaluate(p.coords).is_zero or not h.evaluate(p.coords).is_zero:
            raise ArithmeticError(f"flex candidate {p} fails the defining equations")
    return points


def hesse_lines(flexes: Optional[Sequence[ProjPoint]] = None) -> list[Line]:
    """All lines through at least two flexes; each carries exactly three."""
    pts = list(flexes) if flexes is not None else flex_points()
    lines = {}
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            ln = line_through(pts[i], pts[j])
            lines[ln] = None
    out = sorted(lines, key=Line.sort_key)
    for ln in out:
        if sum(1 for p in pts if ln.contains(p)) != 3:
            raise ArithmeticError(f"{ln} does not carry exactly 3 flexes")
    return out


def dual_hesse_lines() -> list[Line]:
    """The nine lines x = w*y, y = w*z, z = w*x for cube roots of unity w:
    the linear factors of the difference-of-cubes product."""
    lines = []
    for w in _OMEGAS:
        lines.append(Line((ONE, -w, ZERO)))
    for w in _OMEGAS:
        lines.append(Line((ZERO, ONE, -w)))
    for w in _OMEGAS:
        lines.append(Line((-w, ZERO, ONE)))
    return lines


def witness_polynomial() -> HomPoly:
    """(x^3 - y^3)(y^3 - z^3)(z^3 - x^3), the product of the nine dual-Hesse
    line equations up to a scalar."""
    x3 = HomPoly({(3, 0, 0): ONE})
    y3 = HomPoly({(0, 3, 0): ONE})
    z3 = HomPoly({(0, 0, 3): ONE})
    return (x3 - y3) * (y3 - z3) * (z3 - x3)


def dual_hesse_triple_points(lines: Optional[Sequence[Line]] = None) -> list[ProjPoint]:
    """The 12 intersection points of the dual Hesse lines (all triple)."""
    lns = list(lines) if lines is not None else dual_hesse_lines()
    pts = {}
    for i in range(len(lns)):
        for j in range(i + 1, len(lns)):
            pts[intersect_lines(lns[i], lns[j])] = None
    out = sorted(pts, key=ProjPoint.sort_key)
    for p in out:
        if sum(1 for ln in lns if ln.contains(p)) != 3:
            raise ArithmeticError(f"{p} is not a triple point")
    return out


def sextactic_points() -> list[ProjPoint]:
    """The 27 intersections of the Fermat cubic with its second Hessian,
    obtained line by line from the nine linear factors."""
    h2 = second_hessian(FERMAT).h2
    lines = dual_hesse_lines()
    product = HomPoly.constant(1)
    for ln in lines:
        product = product * ln.polynomial()
    lam = proportional(h2, product)
    if lam is None:
        raise ArithmeticError("second Hessian does not split into the nine lines")
    points = []
    for ln in lines:
        points.extend(line_cubic_points(ln, FERMAT))
    if len(set(points)) != 27:
        raise ArithmeticError("expected 27 distinct sextactic points")
    for p in points:
        if not FERMAT.evaluate(p.coords).is_zero or not h2.evaluate(p.coords).is_zero:
            raise ArithmeticError(f"{p} fails the defining equations")
    return points


# -- conics through point sets ------------------------------------------------------


def conic_rows(points: Sequence[ProjPoint]) -> list[list[FieldElement]]:
    rows = []
    for p in points:
        x, y, z = p.coords
        rows.append([x * x, y * y, z * z, x * y, x * z, y * z])
    return rows


def fit_conic(points: Sequence[ProjPoint]) -> tuple[str, Optional[Conic]]:
    """Conics through six points: ('none', None), ('unique', conic) or
    ('pencil', None) by exact kernel dimension."""
    if len(points) != 6:
        raise ValueError("fit_conic expects 6 points")
    if len(set(points)) != 6:
        raise DuplicatePointsError("points must be pairwise distinct")
    basis = kernel_basis(conic_rows(points))
    if not basis:
        return ("none", None)
    if len(basis) > 1:
        return ("pencil", None)
    return ("unique", Conic(basis[0]))


@dataclass(frozen=True)
class ConicClass:
    kind: str  # smooth | two_lines | double_line
    lines: Optional[tuple[Line, ...]]


_PROBE_POINTS = None


def _probe_points() -> list[ProjPoint]:
    global _PROBE_POINTS
    if _PROBE_POINTS is None:
        pts = [ProjPoint((ONE, ZERO, ZERO)), ProjPoint((ZERO, ONE, ZERO)),
               ProjPoint((ZERO, ZERO, ONE)), ProjPoint((ONE, ONE, ONE)),
               ProjPoint((ONE, -ONE, ZERO)), ProjPoint((ONE, ZERO, -ONE)),
               ProjPoint((ZERO, ONE, -ONE)), ProjPoint((ONE, ONE, ZERO)),
               ProjPoint((ONE, ZERO, ONE)), ProjPoint((ZERO, ONE, ONE))]
        _PROBE_POINTS = pts
    return _PROBE_POINTS


def _second_factor(conic: Conic, first: Line) -> Optional[Line]:
    # solve conic = first * other for the unknown linear form by linear algebra
    a, b, c = first.coeffs
    unknown_rows = []
    rhs = []
    # product (a x + b y + c z)(d x + e y + f z) coefficient map onto conic order
    # x^2: a*d, y^2: b*e, z^2: c*f, xy: a*e + b*d, xz: a*f + c*d, yz: b*f + c*e
    coeff_rows = [
        [a, ZERO, ZERO],
        [ZERO, b, ZERO],
        [ZERO, ZERO, c],
        [b, a, ZERO],
        [c, ZERO, a],
        [ZERO, c, b],
    ]
    for row, target in zip(coeff_rows, conic.coeffs):
        unknown_rows.append(row)
        rhs.append(target)
    # solve least-structure: augmented kernel approach
    aug = [r + [t] for r, t in zip(unknown_rows, rhs)]
    basis = kernel_basis(aug)
    for vec in basis:
        if not vec[3].is_zero:
            inv = -vec[3].inverse()
            cand = [v * inv for v in vec[:3]]
            if any(not v.is_zero for v in cand):
                other = Line(cand)
                if _product_matches(first, other, conic):
                    return other
    return None


def _product_matches(l1: Line, l2: Line, conic: Conic) -> bool:
    prod = l1.polynomial() * l2.polynomial()
    return proportional(prod, conic.polynomial()) is not None


def split_two_lines(conic: Conic,
                    known_points: Optional[Sequence[ProjPoint]] = None) -> Optional[tuple[Line, Line]]:
    """Recover the two lines of a rank-2 conic when they are defined over K.

    A point of the conic away from its singular point pins down one line;
    candidates come from known incident points or a fixed probe list.  The
    recovered pair is verified exactly against the conic.  None means no
    K-rational factorization was found (conjugate lines live in a quadratic
    extension).
    """
    sing = kernel_basis(conic.sym_matrix())
    if len(sing) != 1:
        return None
    vertex = ProjPoint(sing[0])
    candidates = list(known_points) if known_points else []
    candidates.extend(_probe_points())
    for cand in candidates:
        if cand == vertex or not conic.contains(cand):
            continue
        first = line_through(vertex, cand)
        second = _second_factor(conic, first)
        if second is not None:
            return (first, second)
    return None


def conic_classify(conic: Conic,
                   known_points: Optional[Sequence[ProjPoint]] = None) -> ConicClass:
    """smooth / two_lines / double_line by the exact rank of the symmetric
    matrix; line factors recovered where they exist over K."""
    r = conic.rank()
    if r == 3:
        return ConicClass("smooth", None)
    if r == 1:
        # rank 1: the matrix is l^t l up to scale, so any nonzero row is l
        m = conic.sym_matrix()
        row = next(row for row in m if any(not v.is_zero for v in row))
        line = Line(row)
        if proportional(line.polynomial() * line.polynomial(),
                        conic.polynomial()) is None:
            raise ArithmeticError("rank-1 factorization failed")
        return ConicClass("double_line", (line, line))
    pair = split_two_lines(conic, known_points)
    return ConicClass("two_lines", pair)
