"""Hessian and second-Hessian covariants of a plane curve.

The second Hessian is assembled from three Jacobian terms whose third rows
are the displayed gradient-like triples; the classical constant in the Psi
term is 20 (a long-lived citation error put 40 there, which the override
argument below lets tests reproduce).
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldElement
from .poly import HomPoly, PolyMatrix, det


class DegreeTooLowError(ValueError):
    """Input degree below what the covariant is defined for."""


@dataclass(frozen=True)
class HessianBundle:
    """A curve, its Hesse matrix, H = det Hess, Hess(H), and the 6-entry
    column of 2x2 cofactors of Hess in the locked display order."""

    gamma: HomPoly
    hess_matrix: PolyMatrix
    h: HomPoly
    hess_h_matrix: PolyMatrix
    adjugate_vector: tuple[HomPoly, ...]


@dataclass(frozen=True)
class SecondHessianParts:
    omega: HomPoly
    omega_gamma_grad: tuple[HomPoly, HomPoly, HomPoly]
    omega_h_grad: tuple[HomPoly, HomPoly, HomPoly]
    psi: HomPoly
    h2: HomPoly


def _hess_matrix(p: HomPoly) -> PolyMatrix:
    g = p.gradient()
    return PolyMatrix([[g[i].partial(j) for j in range(3)] for i in range(3)])


def _adjugate_vector(m: PolyMatrix) -> tuple[HomPoly, ...]:
    # Entry order and signs are locked: (yy*zz - yz^2, xx*zz - xz^2,
    # xx*yy - xy^2, xy*xz - xx*yz, xy*yz - yy*xz, xz*yz - zz*xy).
    r = m.rows
    xx, xy, xz = r[0][0], r[0][1], r[0][2]
    yy, yz, zz = r[1][1], r[1][2], r[2][2]
    return (
        yy * zz - yz * yz,
        xx * zz - xz * xz,
        xx * yy - xy * xy,
        xy * xz - xx * yz,
        xy * yz - yy * xz,
        xz * yz - zz * xy,
    )


def _h_column(hess_h: PolyMatrix) -> tuple[HomPoly, ...]:
    # (H_xx, H_yy, H_zz, 2H_yz, 2H_xz, 2H_xy), pairing the adjugate order.
    r = hess_h.rows
    return (r[0][0], r[1][1], r[2][2], r[1][2] * 2, r[0][2] * 2, r[0][1] * 2)


def _dot(u, v) -> HomPoly:
    total = HomPoly()
    for a, b in zip(u, v):
        total = total + a * b
    return total


def hessian(gamma: HomPoly) -> HessianBundle:
    """Hess(gamma), H = det Hess(gamma), Hess(H), and the adjugate column."""
    if gamma.is_zero or gamma.degree < 2:
        raise DegreeTooLowError("hessian needs degree >= 2")
    hm = _hess_matrix(gamma)
    h = hm.det()
    hh = _hess_matrix(h)
    return HessianBundle(gamma, hm, h, hh, _adjugate_vector(hm))


def omega_products(bundle: HessianBundle):
    """Omega and the two families of gradient-like scalar products.

    Omega pairs the adjugate column with (H_xx, H_yy, H_zz, 2H_yz, 2H_xz,
    2H_xy); the Gamma family differentiates the adjugate side, the H family
    differentiates the H side.  Entry order is preserved throughout.
    """
    adj = bundle.adjugate_vector
    hcol = _h_column(bundle.hess_h_matrix)
    omega = _dot(adj, hcol)
    omega_gamma = tuple(
        _dot([a.partial(v) for a in adj], hcol) for v in range(3))
    omega_h = tuple(
        _dot(adj, [b.partial(v) for b in hcol]) for v in range(3))
    return omega, omega_gamma, omega_h


def psi(bundle: HessianBundle) -> HomPoly:
    """Minus the determinant of the Hesse matrix bordered by grad H."""
    hx, hy, hz = bundle.h.gradient()
    g = bundle.hess_matrix.rows
    zero = HomPoly()
    bordered = PolyMatrix([
        [zero, hx, hy, hz],
        [hx, g[0][0], g[0][1], g[0][2]],
        [hy, g[1][0], g[1][1], g[1][2]],
        [hz, g[2][0], g[2][1], g[2][2]],
    ])
    return -bordered.det()


def _jacobian(f: HomPoly, g: HomPoly, third_row) -> HomPoly:
    rows = [list(f.gradient()), list(g.gradient()), list(third_row)]
    return det(rows)


def second_hessian(gamma: HomPoly, psi_coefficient: int = 20) -> SecondHessianParts:
    """The degree 12d-27 covariant cutting out the sextactic points.

    psi_coefficient is 20; passing 40 reproduces the historically corrupted
    constant for mutation testing.
    """
    if gamma.is_zero or gamma.degree < 3:
        raise DegreeTooLowError("second hessian needs degree >= 3")
    d = gamma.degree
    bundle = hessian(gamma)
    omega, omega_gamma, omega_h = omega_products(bundle)
    ps = psi(bundle)

    c1 = 12 * d * d - 54 * d + 57
    c2 = (d - 2) * (12 * d - 27)
    c3 = -psi_coefficient * (d - 2) ** 2

    h = bundle.h
    term1 = h * _jacobian(gamma, h, omega_h) * c1
    term2 = h * _jacobian(gamma, h, omega_gamma) * c2
    term3 = _jacobian(gamma, h, ps.gradient()) * c3
    h2 = term1 + term2 + term3
    if not h2.is_zero and h2.degree != 12 * d - 27:
        raise ArithmeticError("second hessian degree contract violated")
    return SecondHessianParts(omega, omega_gamma, omega_h, ps, h2)


def extended_fermat_product(f: HomPoly) -> HomPoly:
    """H(f) * H2(f); for the Fermat cubic this is the degree-12 product of
    the three coordinate lines and the nine difference-of-cubes lines."""
    return hessian(f).h * second_hessian(f).h2
