"""Exact-arithmetic toolkit for the Fermat cubic: flexes, sextactic points,
the conic census, the 81-line arrangement, and the group-law cross-checks."""

from .field import EPS, FieldElement, MU, ONE, ZERO
from .poly import HomPoly, PolyMatrix, det, fermat_cubic, parse_poly, poly_to_text, proportional, vanishing_order
from .hessians import HessianBundle, SecondHessianParts, extended_fermat_product, hessian, omega_products, psi, second_hessian
from .incidence import (ArrangementSummary, Conic, ConicClass, Line, ProjPoint,
                        conic_classify, dual_hesse_lines, dual_hesse_triple_points,
                        fit_conic, flex_points, hesse_lines, sextactic_points,
                        summarize_arrangement, witness_polynomial)

__version__ = "1.0.0"
