"""Generalized symmetric-definite eigensolution and mode handling.

Solves K d = omega^2 M d by Cholesky reduction of M to a standard dense
symmetric problem, non-dimensionalizes the frequencies, classifies the
modes (axial / bending / rigid) and samples mode shapes along the beam.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .assembly import GlobalSystem, Section
from .bspline import Curve, eval_nurbs, geometry_map
from .exceptions import NumericalError

# omega^2 more negative than this (relative to the spectral range) means a
# defective assembly rather than round-off in a rigid mode
RIGID_CLAMP_REL = 1e-8


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Sorted non-dimensional frequencies with mode vectors and tags.

    ``omega_nd`` is omega * L^2 * sqrt(rho A / (E I)); ``lam`` is its
    square root, the frequency-parameter convention of the published
    benchmark tables (n pi for a classical pinned-pinned beam).
    ``modes`` columns are M-orthonormal eigenvectors in full DOF
    numbering with constrained entries zero-filled.
    """

    omega_nd: np.ndarray
    modes: np.ndarray
    kinds: tuple[str, ...]

    @property
    def lam(self) -> np.ndarray:
        return np.sqrt(self.omega_nd)

    @property
    def n_modes(self) -> int:
        return self.omega_nd.size

    def select(self, kind: str) -> np.ndarray:
        """Indices of modes with the given tag, in ascending order."""
        return np.flatnonzero(np.asarray(self.kinds) == kind)


def solve_generalized(K: np.ndarray, M: np.ndarray,
                      n_modes: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Smallest eigenpairs of K d = lambda M d for symmetric K, SPD M.

    Reduces via M = C C^T to the standard symmetric problem on
    C^-1 K C^-T, solves it densely, and maps the vectors back; the
    returned columns are M-orthonormal. Full solve, then the
    ``n_modes`` smallest are returned.
    """
    K = np.asarray(K, dtype=float)
    M = np.asarray(M, dtype=float)
    if K.shape != M.shape or K.ndim != 2 or K.shape[0] != K.shape[1]:
        raise ValueError("K and M must be square matrices of the same size")
    try:
        C = scipy.linalg.cholesky(M, lower=True)
    except scipy.linalg.LinAlgError as exc:
        raise NumericalError("mass matrix is not positive definite") from exc
    # A = C^-1 K C^-T via two triangular solves
    tmp = scipy.linalg.solve_triangular(C, K, lower=True)
    A = scipy.linalg.solve_triangular(C, tmp.T, lower=True).T
    A = 0.5 * (A + A.T)
    try:
        w, Y = scipy.linalg.eigh(A)
    except scipy.linalg.LinAlgError as exc:
        raise NumericalError("symmetric eigensolver did not converge") from exc
    V = scipy.linalg.solve_triangular(C, Y, lower=True, trans="T")
    if n_modes is not None:
        w = w[:n_modes]
        V = V[:, :n_modes]
    return w, V


def nondimensionalize(omega, section: Section):
    """omega_nd = omega * L^2 * sqrt(rho A / (E I))."""
    factor = section.L**2 * np.sqrt(section.rho * section.A / (section.E * section.I))
    return omega * factor


def classify_modes(omega_nd: np.ndarray, modes: np.ndarray,
                   system: GlobalSystem) -> tuple[str, ...]:
    """Tag each mode axial, bending, or rigid.

    Rigid modes are spotted by frequency (below 1e-6 of the first flexible
    frequency); the rest are split by the axial share of the M-weighted
    norm. For a straight beam the u and (v, phi) blocks decouple exactly,
    so anything without a >0.99 dominant share signals an assembly defect.
    """
    omega_nd = np.asarray(omega_nd, dtype=float)
    scale = omega_nd.max(initial=0.0)
    flexible = omega_nd[omega_nd > 1e-6 * scale]
    rigid_cut = 1e-6 * flexible[0] if flexible.size else np.inf

    reduced = modes[system.retained, :]
    axial_rows = system.retained % 3 == 0

    kinds = []
    for j in range(omega_nd.size):
        if omega_nd[j] < rigid_cut:
            kinds.append("rigid")
            continue
        d = reduced[:, j]
        total = float(d @ system.M @ d)
        du = np.where(axial_rows, d, 0.0)
        u_share = float(du @ system.M @ du) / total
        if u_share > 0.99:
            kinds.append("axial")
        elif u_share < 0.01:
            kinds.append("bending")
        else:
            raise NumericalError(
                f"mode {j} mixes axial and transverse blocks "
                f"(axial share {u_share:.3f}); assembly defect for a straight beam"
            )
    return tuple(kinds)


def modal_spectrum(system: GlobalSystem, section: Section,
                   n_modes: int | None = None) -> Spectrum:
    """Solve the constrained system and package the ascending spectrum."""
    w2, V = solve_generalized(system.K, system.M, n_modes)
    scale = max(abs(w2[0]), abs(w2[-1]), 1.0) if w2.size else 1.0
    if w2.size and w2[0] < -RIGID_CLAMP_REL * scale:
        raise NumericalError(
            f"squared frequency {w2[0]:.3e} is too negative for round-off"
        )
    omega = np.sqrt(np.clip(w2, 0.0, None))
    omega_nd = nondimensionalize(omega, section)
    modes = np.zeros((system.n_dofs_full, V.shape[1]))
    modes[system.retained, :] = V
    kinds = classify_modes(omega_nd, modes, system)
    return Spectrum(omega_nd=omega_nd, modes=modes, kinds=kinds)


def sample_mode(curve: Curve, mode: np.ndarray, n_points: int) -> np.ndarray:
    """Evaluate (x, u, v, phi) of one mode at uniform parametric points.

    Normalized so max |v| = 1 (max |u| for axial modes, max component as
    a last resort). Returns an array of shape (n_points, 4).
    """
    mode = np.asarray(mode, dtype=float)
    if mode.size != 3 * curve.n:
        raise ValueError(f"mode has {mode.size} entries, expected {3 * curve.n}")
    out = np.empty((n_points, 4))
    a, b = curve.kv.domain
    for i, xi in enumerate(np.linspace(a, b, n_points)):
        be = eval_nurbs(curve, xi)
        x, _ = geometry_map(curve, xi)
        dofs = mode.reshape(-1, 3)[be.indices]
        out[i, 0] = x
        out[i, 1:] = be.values @ dofs
    for col in (2, 1, 3):
        peak = np.abs(out[:, col]).max()
        if peak > 1e-12 * max(1.0, np.abs(out[:, 1:]).max()):
            out[:, 1:] /= peak
            break
    return out
