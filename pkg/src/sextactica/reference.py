"""Published coordinate lists for the Fermat-cubic configurations.

These are the reference values the computed objects are matched against;
output labels (P1..P9, L1..L12, S1..S27) come from the positions here.
"""

from __future__ import annotations

from fractions import Fraction

from .field import EPS, FieldElement, MU, MU2, ONE, ZERO
from .incidence import Line, ProjPoint

_HALF = FieldElement.from_rational(Fraction(1, 2))
_E1 = EPS + ONE  # eps + 1 = -eps^2


def _pt(a, b, c) -> ProjPoint:
    return ProjPoint((a, b, c))


def _ln(a, b, c) -> Line:
    return Line((a, b, c))


FLEXES: tuple[ProjPoint, ...] = (
    _pt(ONE, -ONE, ZERO),
    _pt(ONE, -EPS, ZERO),
    _pt(ONE, -(EPS * EPS), ZERO),
    _pt(ONE, ZERO, -ONE),
    _pt(ONE, ZERO, -EPS),
    _pt(ONE, ZERO, -(EPS * EPS)),
    _pt(ZERO, ONE, -ONE),
    _pt(ZERO, ONE, -EPS),
    _pt(ZERO, ONE, -(EPS * EPS)),
)

FLEX_LABELS = tuple(f"P{i}" for i in range(1, 10))

HESSE_LINES: tuple[Line, ...] = (
    _ln(ONE, ZERO, ZERO),
    _ln(ZERO, ONE, ZERO),
    _ln(ZERO, ZERO, ONE),
    _ln(ONE, ONE, ONE),
    _ln(ONE, EPS, ONE),
    _ln(ONE, EPS * EPS, ONE),
    _ln(ONE, ONE, EPS),
    _ln(ONE, ONE, EPS * EPS),
    _ln(ONE, EPS, EPS),
    _ln(ONE, EPS, EPS * EPS),
    _ln(ONE, EPS * EPS, EPS),
    _ln(ONE, EPS * EPS, EPS * EPS),
)

HESSE_LINE_LABELS = tuple(f"L{i}" for i in range(1, 13))

SEXTACTIC: tuple[ProjPoint, ...] = (
    _pt(-_HALF * EPS * MU2, -_HALF * EPS * MU2, ONE),          # S1
    _pt(ONE, _E1 * MU, ONE),                                   # S2
    _pt(_E1 * MU, ONE, ONE),                                   # S3
    _pt(_HALF * _E1 * MU2, -_HALF * MU2, ONE),                 # S4
    _pt(EPS, -EPS * MU, ONE),                                  # S5
    _pt(-MU, -_E1, ONE),                                       # S6
    _pt(-_HALF * MU2, _HALF * _E1 * MU2, ONE),                 # S7
    _pt(-_E1, -MU, ONE),                                       # S8
    _pt(-EPS * MU, EPS, ONE),                                  # S9
    _pt(-_HALF * MU2, -_HALF * MU2, ONE),                      # S10
    _pt(ONE, -MU, ONE),                                        # S11
    _pt(-MU, ONE, ONE),                                        # S12
    # S13 as published has x = +eps*mu^2/2, which fails x^3+y^3+z^3 = 0
    # (it gives 1/2 - 1/2 + 1); the sign of x is corrected here.
    _pt(-_HALF * EPS * MU2, _HALF * _E1 * MU2, ONE),           # S13
    _pt(EPS, _E1 * MU, ONE),                                   # S14
    _pt(-EPS * MU, -_E1, ONE),                                 # S15
    _pt(_HALF * _E1 * MU2, -_HALF * EPS * MU2, ONE),           # S16
    _pt(-_E1, -EPS * MU, ONE),                                 # S17
    _pt(_E1 * MU, EPS, ONE),                                   # S18
    _pt(_HALF * _E1 * MU2, _HALF * _E1 * MU2, ONE),            # S19
    _pt(ONE, -EPS * MU, ONE),                                  # S20
    _pt(-EPS * MU, ONE, ONE),                                  # S21
    _pt(-_HALF * MU2, -_HALF * EPS * MU2, ONE),                # S22
    _pt(EPS, -MU, ONE),                                        # S23
    _pt(_E1 * MU, -_E1, ONE),                                  # S24
    _pt(-_HALF * EPS * MU2, -_HALF * MU2, ONE),                # S25
    _pt(-_E1, _E1 * MU, ONE),                                  # S26
    _pt(-MU, EPS, ONE),                                        # S27
)

SEXTACTIC_LABELS = tuple(f"S{i}" for i in range(1, 28))

SEXTACTIC_BY_POINT = {p: lab for p, lab in zip(SEXTACTIC, SEXTACTIC_LABELS)}
FLEX_BY_POINT = {p: lab for p, lab in zip(FLEXES, FLEX_LABELS)}


def point_label(p: ProjPoint) -> str:
    """S/P label of a known configuration point, or its coordinates."""
    lab = SEXTACTIC_BY_POINT.get(p) or FLEX_BY_POINT.get(p)
    return lab if lab is not None else str(p)
