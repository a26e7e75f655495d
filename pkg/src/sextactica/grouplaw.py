"""Chord-tangent group law on the Fermat cubic with a flex origin, the
level-6 labeling of the 36 six-torsion points, and the combinatorial
oracles that cross-check every incidence count independently of the
geometric enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .field import FieldElement, ONE, ZERO
from .incidence import (FERMAT, ProjPoint, _cross, _restrict_to_line,
                        flex_points, sextactic_points)


class NotOnCurveError(ValueError):
    """A point fed to the group law does not lie on the cubic."""


class GeneratorSearchError(ArithmeticError):
    """No valid generator pair found; signals corrupted torsion input."""


_DEFAULT_ORIGIN_COORDS = (ONE, -ONE, ZERO)


class FermatGroup:
    """Group structure on the Fermat cubic for a chosen flex origin.

    p + q is the residual of the line through the origin and the chord
    residual of p, q; all arithmetic stays in K via cubic deflation (the two
    known roots divide out, leaving a linear factor).
    """

    def __init__(self, origin: Optional[ProjPoint] = None):
        origin = origin if origin is not None else ProjPoint(_DEFAULT_ORIGIN_COORDS)
        self._check(origin)
        if not _is_flex(origin):
            raise ValueError(f"origin {origin} is not a flex")
        self.origin = origin

    @staticmethod
    def _check(p: ProjPoint):
        if not FERMAT.evaluate(p.coords).is_zero:
            raise NotOnCurveError(f"{p} is not on the cubic")

    def third(self, p: ProjPoint, q: ProjPoint) -> ProjPoint:
        """Residual intersection of the line through p and q (tangent when
        p = q) with the cubic."""
        self._check(p)
        self._check(q)
        if p == q:
            base, other = p, _tangent_companion(p)
        else:
            base, other = p, q
        c30, c21, c12, c03 = _restrict_to_line(FERMAT, base, other)
        if p == q:
            # double root at (1:0); residual factor c12 s + c03 t
            s, t = c03, -c12
        else:
            # roots at (1:0) and (0:1); residual factor c21 s + c12 t
            s, t = c12, -c21
        coords = [s * a + t * b for a, b in zip(base.coords, other.coords)]
        if all(c.is_zero for c in coords):
            raise ArithmeticError("line lies on the cubic; input corrupted")
        r = ProjPoint(coords)
        if __debug__:
            assert FERMAT.evaluate(r.coords).is_zero
        return r

    def add(self, p: ProjPoint, q: ProjPoint) -> ProjPoint:
        return self.third(self.origin, self.third(p, q))

    def neg(self, p: ProjPoint) -> ProjPoint:
        return self.third(self.origin, p)

    def smul(self, n: int, p: ProjPoint) -> ProjPoint:
        if n < 0:
            return self.neg(self.smul(-n, p))
        result = self.origin
        base = p
        while n:
            if n & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            n >>= 1
        return result

    def order(self, p: ProjPoint, bound: int = 6) -> int:
        for n in range(1, bound + 1):
            if self.smul(n, p) == self.origin:
                return n
        raise ArithmeticError(f"order of {p} exceeds {bound}")


def _is_flex(p: ProjPoint) -> bool:
    # flexes of the Fermat cubic are its intersections with xyz = 0
    x, y, z = p.coords
    return (x * y * z).is_zero and FERMAT.evaluate(p.coords).is_zero


def _tangent_companion(p: ProjPoint) -> ProjPoint:
    """A second point on the tangent line at p (gradient is never zero on a
    smooth curve)."""
    g = [q.evaluate(p.coords) for q in FERMAT.gradient()]
    piv = next(i for i, v in enumerate(g) if not v.is_zero)
    for i in range(3):
        if i == piv:
            continue
        vec = [ZERO, ZERO, ZERO]
        vec[i] = g[piv]
        vec[piv] = -g[i]
        if any(not c.is_zero for c in _cross(vec, p.coords)):
            return ProjPoint(vec)
    raise ArithmeticError("tangent line collapsed to a point")


def six_torsion_points() -> list[ProjPoint]:
    """The 36 points of F[6]: the 9 flexes plus the 27 sextactic points."""
    return flex_points() + sextactic_points()


def torsion(group: FermatGroup, n: int,
            six_torsion: Optional[Sequence[ProjPoint]] = None) -> list[ProjPoint]:
    """F[n] for n in {2, 3, 6}, filtered from F[6] by scalar multiplication."""
    if n not in (2, 3, 6):
        raise ValueError("torsion implemented for n in {2, 3, 6}")
    pts = list(six_torsion) if six_torsion is not None else six_torsion_points()
    out = [p for p in pts if group.smul(n, p) == group.origin]
    return sorted(out, key=ProjPoint.sort_key)


@dataclass(frozen=True)
class LevelStructure:
    """A group isomorphism F[6] -> Z6 x Z6 determined by an ordered pair of
    independent order-6 generators."""

    group: FermatGroup
    gen1: ProjPoint
    gen2: ProjPoint
    label_of: dict = field(repr=False)
    point_of: dict = field(repr=False)

    @property
    def origin(self) -> ProjPoint:
        return self.group.origin

    def label(self, p: ProjPoint) -> tuple[int, int]:
        return self.label_of[p]

    def point(self, label: tuple[int, int]) -> ProjPoint:
        return self.point_of[label[0] % 6, label[1] % 6]


def build_level_structure(six_torsion: Optional[Sequence[ProjPoint]] = None,
                          group: Optional[FermatGroup] = None,
                          generators: Optional[tuple[ProjPoint, ProjPoint]] = None,
                          verify: bool = True) -> LevelStructure:
    """Choose canonical order-6 generators (or take a supplied pair), build
    the full 36-entry label table, and verify it is a homomorphic bijection.

    The canonical choice is deterministic: points are scanned in
    lexicographic order of their normalized coordinates.
    """
    group = group if group is not None else FermatGroup()
    pts = list(six_torsion) if six_torsion is not None else six_torsion_points()
    if len(set(pts)) != 36:
        raise GeneratorSearchError("expected the 36 six-torsion points")
    ordered = sorted(pts, key=ProjPoint.sort_key)

    if generators is None:
        gen1 = next((p for p in ordered if group.order(p) == 6), None)
        if gen1 is None:
            raise GeneratorSearchError("no point of order 6")
        cyc1 = _cycle(group, gen1)
        gen2 = None
        for p in ordered:
            if group.order(p) != 6:
                continue
            if _cycle(group, p) & cyc1 == {group.origin}:
                gen2 = p
                break
        if gen2 is None:
            raise GeneratorSearchError("no independent second generator")
    else:
        gen1, gen2 = generators

    label_of: dict[ProjPoint, tuple[int, int]] = {}
    point_of: dict[tuple[int, int], ProjPoint] = {}
    row = group.origin
    for a in range(6):
        cur = row
        for b in range(6):
            label_of[cur] = (a, b)
            point_of[a, b] = cur
            cur = group.add(cur, gen2)
        row = group.add(row, gen1)
    if len(label_of) != 36 or set(label_of) != set(pts):
        raise GeneratorSearchError("generator pair does not span F[6]")

    level = LevelStructure(group, gen1, gen2, label_of, point_of)
    if verify:
        verify_level_structure(level, pts)
    return level


def _cycle(group: FermatGroup, p: ProjPoint) -> set[ProjPoint]:
    out = {group.origin}
    cur = p
    while cur not in out:
        out.add(cur)
        cur = group.add(cur, p)
    return out


def verify_level_structure(level: LevelStructure,
                           six_torsion: Optional[Sequence[ProjPoint]] = None):
    """Exhaustive checks: bijectivity, the homomorphism property on all 36^2
    pairs, origin at (0,0), and flexes exactly on the even sublattice."""
    group = level.group
    pts = list(six_torsion) if six_torsion is not None else list(level.label_of)
    if set(level.label_of) != set(pts) or len(level.point_of) != 36:
        raise GeneratorSearchError("label table is not a bijection")
    if level.label(group.origin) != (0, 0):
        raise GeneratorSearchError("origin label is not (0,0)")
    for p in pts:
        la = level.label(p)
        for q in pts:
            lb = level.label(q)
            expect = ((la[0] + lb[0]) % 6, (la[1] + lb[1]) % 6)
            if level.label(group.add(p, q)) != expect:
                raise GeneratorSearchError(f"not a homomorphism at {p}, {q}")
    for p in pts:
        a, b = level.label(p)
        if _is_flex(p) != (a % 2 == 0 and b % 2 == 0):
            raise GeneratorSearchError("flexes are not the even sublattice")


# -- combinatorial oracles --------------------------------------------------------


def sextactic_with_labels(level: LevelStructure) -> list[tuple[ProjPoint, tuple[int, int]]]:
    """The 27 non-flex six-torsion points with their labels (some odd entry)."""
    out = [(p, lab) for p, lab in level.label_of.items()
           if lab[0] % 2 or lab[1] % 2]
    out.sort(key=lambda t: t[1])
    if len(out) != 27:
        raise ArithmeticError("expected 27 points with an odd label entry")
    return out


def collinear_triples(level: LevelStructure) -> set[frozenset[ProjPoint]]:
    """Unordered triples of distinct sextactic points summing to the origin;
    by the line divisor argument these are exactly the collinear triples."""
    pts = sextactic_with_labels(level)
    out = set()
    for (p, la), (q, lb), (r, lc) in combinations(pts, 3):
        if (la[0] + lb[0] + lc[0]) % 6 == 0 and (la[1] + lb[1] + lc[1]) % 6 == 0:
            out.add(frozenset((p, q, r)))
    return out


def flex_collinear_triples(level: LevelStructure) -> set[frozenset[ProjPoint]]:
    """The triples of flexes summing to the origin (the 12 flex lines)."""
    flx = [(p, lab) for p, lab in level.label_of.items()
           if lab[0] % 2 == 0 and lab[1] % 2 == 0]
    out = set()
    for (p, la), (q, lb), (r, lc) in combinations(flx, 3):
        if (la[0] + lb[0] + lc[0]) % 6 == 0 and (la[1] + lb[1] + lc[1]) % 6 == 0:
            out.add(frozenset((p, q, r)))
    return out


CONIC_PREDICATES = ("sum_zero", "sum_two_torsion", "sum_mod3")


def _predicate_hits(sa: int, sb: int) -> tuple[bool, bool, bool]:
    sum_zero = sa == 0 and sb == 0
    two_torsion = sa in (0, 3) and sb in (0, 3)
    mod3 = sa % 3 == 0 and sb % 3 == 0
    return (sum_zero, two_torsion, mod3)


def conic_predicate_counts(level: LevelStructure) -> dict[str, int]:
    """Count six-subsets of the 27 points whose label sum satisfies each
    candidate conic condition: exactly the identity, any 2-division point,
    or zero mod 3 componentwise (the latter two coincide as predicates)."""
    labels = [lab for _, lab in sextactic_with_labels(level)]
    counts = dict.fromkeys(CONIC_PREDICATES, 0)
    for sub in combinations(labels, 6):
        sa = sum(l[0] for l in sub) % 6
        sb = sum(l[1] for l in sub) % 6
        hz, ht, hm = _predicate_hits(sa, sb)
        if hz:
            counts["sum_zero"] += 1
        if ht:
            counts["sum_two_torsion"] += 1
        if hm:
            counts["sum_mod3"] += 1
    return counts


def conic_subsets(level: LevelStructure,
                  predicate: str = "sum_zero") -> set[frozenset[ProjPoint]]:
    """The six-subsets selected by a conic predicate, as point sets."""
    if predicate not in CONIC_PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}")
    idx = CONIC_PREDICATES.index(predicate)
    pts = sextactic_with_labels(level)
    out = set()
    for sub in combinations(pts, 6):
        sa = sum(lab[0] for _, lab in sub) % 6
        sb = sum(lab[1] for _, lab in sub) % 6
        if _predicate_hits(sa, sb)[idx]:
            out.add(frozenset(p for p, _ in sub))
    return out


def conic_residual(group: FermatGroup, points: Iterable[ProjPoint]) -> ProjPoint:
    """The point closing a conic divisor: minus the group sum of the inputs,
    so that the full six-point divisor sums to the origin."""
    total = group.origin
    for p in points:
        total = group.add(total, p)
    return group.neg(total)
