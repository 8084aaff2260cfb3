"""Timoshenko beam element matrices, global assembly, boundary conditions.

Each control point carries three degrees of freedom in the fixed order
(u, v, phi): axial displacement, transverse displacement, cross-section
rotation. Global DOF index = 3 * control_point + component.

The element integrands are the isotropic Timoshenko forms

    k = EA * Bm^T Bm + EI * Bf^T Bf + kappa*G*A * Bc^T Bc
    m = rho*A * (N^T N on u and v) + rho*I * (N^T N on phi)

integrated with Gauss-Legendre quadrature over each knot span.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bspline import BasisEval, Curve, eval_nurbs
from .quadrature import QuadratureRule, map_to_span

N_COMPONENTS = 3  # (u, v, phi) per control point

BOUNDARY_CONDITIONS = ("pinned-pinned", "clamped-clamped", "clamped-free", "free-free")


@dataclass(frozen=True)
class Section:
    """Material and cross-section data for a rectangular beam.

    E: Young's modulus, nu: Poisson's ratio, rho: density, kappa: shear
    correction factor, b: breadth, h: thickness, L: span. Derived values:
    A = b*h, I = b*h^3/12, G = E / (2*(1+nu)).
    """

    E: float
    nu: float
    rho: float
    kappa: float
    b: float
    h: float
    L: float

    def __post_init__(self):
        for name in ("E", "rho", "kappa", "b", "h", "L"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if not 0.0 < self.nu < 0.5:
            raise ValueError(f"nu must lie in (0, 0.5), got {self.nu}")

    @property
    def A(self) -> float:
        return self.b * self.h

    @property
    def I(self) -> float:  # noqa: E743 - conventional symbol
        return self.b * self.h**3 / 12.0

    @property
    def G(self) -> float:
        return self.E / (2.0 * (1.0 + self.nu))


@dataclass(frozen=True, eq=False)
class ElementMatrices:
    k: np.ndarray
    m: np.ndarray
    dof_indices: np.ndarray


@dataclass(frozen=True, eq=False)
class GlobalSystem:
    """Assembled (and possibly reduced) stiffness and mass matrices.

    ``retained`` maps the rows of K/M back to full DOF numbering;
    ``constrained`` lists the DOFs removed by boundary conditions.
    """

    K: np.ndarray
    M: np.ndarray
    n_control_points: int
    retained: np.ndarray
    constrained: np.ndarray

    @property
    def n_dofs_full(self) -> int:
        return N_COMPONENTS * self.n_control_points

    @property
    def n_dofs(self) -> int:
        return self.K.shape[0]


def b_matrices(basis: BasisEval, J: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Membrane, bending and shear strain-displacement rows at one point.

    Each is a flat vector over the element DOFs, blocks of (u, v, phi)
    per active control point:

        Bm -> du/dx,  Bf -> dphi/dx,  Bc -> dv/dx + phi.
    """
    if J <= 0.0:
        raise ValueError(f"non-positive Jacobian {J}")
    n_active = basis.values.size
    dN_dx = basis.derivs / J
    Bm = np.zeros(N_COMPONENTS * n_active)
    Bf = np.zeros_like(Bm)
    Bc = np.zeros_like(Bm)
    Bm[0::3] = dN_dx
    Bf[2::3] = dN_dx
    Bc[1::3] = dN_dx
    Bc[2::3] = basis.values
    return Bm, Bf, Bc


def _element_dofs(curve: Curve, span: int) -> np.ndarray:
    p = curve.degree
    cps = np.arange(span - p, span + 1)
    return (N_COMPONENTS * cps[:, None] + np.arange(N_COMPONENTS)).ravel()


def _span_quadrature(curve: Curve, span: int, rule: QuadratureRule):
    U = curve.kv.knots
    a, b = float(U[span]), float(U[span + 1])
    if b <= a:
        raise ValueError(f"degenerate span {span}")
    return map_to_span(rule, a, b)


def element_stiffness(section: Section, curve: Curve, span: int,
                      rule: QuadratureRule) -> np.ndarray:
    """Element stiffness over one knot span; symmetric positive semidefinite."""
    EA = section.E * section.A
    EI = section.E * section.I
    kGA = section.kappa * section.G * section.A
    size = N_COMPONENTS * (curve.degree + 1)
    k = np.zeros((size, size))
    pts, wts = _span_quadrature(curve, span, rule)
    for xi, w in zip(pts, wts):
        be = eval_nurbs(curve, xi)
        J = float(be.derivs @ curve.control_x[be.indices])
        Bm, Bf, Bc = b_matrices(be, J)
        k += (EA * np.outer(Bm, Bm) + EI * np.outer(Bf, Bf)
              + kGA * np.outer(Bc, Bc)) * (J * w)
    return k


def element_mass(section: Section, curve: Curve, span: int,
                 rule: QuadratureRule) -> np.ndarray:
    """Consistent element mass over one knot span; symmetric positive definite."""
    rA = section.rho * section.A
    rI = section.rho * section.I
    inertia = np.array([rA, rA, rI])
    size = N_COMPONENTS * (curve.degree + 1)
    m = np.zeros((size, size))
    pts, wts = _span_quadrature(curve, span, rule)
    for xi, w in zip(pts, wts):
        be = eval_nurbs(curve, xi)
        J = float(be.derivs @ curve.control_x[be.indices])
        NN = np.outer(be.values, be.values) * (J * w)
        for c in range(N_COMPONENTS):
            m[c::3, c::3] += inertia[c] * NN
    return m


def element_matrices(section: Section, curve: Curve, span: int,
                     rule: QuadratureRule) -> ElementMatrices:
    return ElementMatrices(
        k=element_stiffness(section, curve, span, rule),
        m=element_mass(section, curve, span, rule),
        dof_indices=_element_dofs(curve, span),
    )


def assemble(section: Section, curve: Curve, rule: QuadratureRule) -> GlobalSystem:
    """Scatter-add all element matrices into the unconstrained global system."""
    n = curve.n
    N = N_COMPONENTS * n
    K = np.zeros((N, N))
    M = np.zeros((N, N))
    for span in curve.kv.nonzero_spans:
        em = element_matrices(section, curve, span, rule)
        ix = np.ix_(em.dof_indices, em.dof_indices)
        K[ix] += em.k
        M[ix] += em.m
    return GlobalSystem(K=K, M=M, n_control_points=n,
                        retained=np.arange(N), constrained=np.array([], dtype=int))


def _end_constraints(bc: str, n_control_points: int) -> np.ndarray:
    """DOF indices removed at the two ends.

    A pinned end fixes u and v (phi free); a clamped end fixes all three;
    a free end fixes nothing.
    """
    if bc not in BOUNDARY_CONDITIONS:
        raise ValueError(f"unknown boundary condition {bc!r}; "
                         f"expected one of {BOUNDARY_CONDITIONS}")
    left_kind, right_kind = bc.split("-")
    per_end = {"pinned": (0, 1), "clamped": (0, 1, 2), "free": ()}
    last = N_COMPONENTS * (n_control_points - 1)
    fixed = list(per_end[left_kind]) + [last + c for c in per_end[right_kind]]
    return np.asarray(sorted(fixed), dtype=int)


def apply_bc(system: GlobalSystem, bc: str) -> GlobalSystem:
    """Remove constrained rows/columns (exact elimination, no penalties)."""
    if system.constrained.size:
        raise ValueError("boundary conditions already applied")
    fixed = _end_constraints(bc, system.n_control_points)
    keep = np.setdiff1d(system.retained, fixed)
    ix = np.ix_(keep, keep)
    return GlobalSystem(K=system.K[ix], M=system.M[ix],
                        n_control_points=system.n_control_points,
                        retained=keep, constrained=fixed)


def rigid_body_vectors(curve: Curve) -> np.ndarray:
    """The three zero-energy motions of the unconstrained straight beam,
    as columns in full DOF numbering: axial translation, transverse
    translation, and rotation about the left end (v = -x, phi = 1, which
    keeps the shear v' + phi at zero).
    """
    n = curve.n
    out = np.zeros((N_COMPONENTS * n, 3))
    out[0::3, 0] = 1.0
    out[1::3, 1] = 1.0
    out[1::3, 2] = -curve.control_x
    out[2::3, 2] = 1.0
    return out
