"""Closed-form reference frequencies used as independent ground truth.

Two families:

* classical (Euler-Bernoulli) frequency parameters: n pi for a
  pinned-pinned beam and the roots of cos(L) cosh(L) = 1 for a
  clamped-clamped beam;
* exact shear-deformable pinned-pinned frequencies, from substituting the
  sinusoidal mode shape into the coupled Timoshenko equations, which
  leaves a quadratic in omega^2 per wavenumber. The smaller root is the
  bending branch; the larger is the shear (second-spectrum) branch,
  whose k = 0 limit is the cutoff omega^2 = kappa G A / (rho I).

All values are returned as the frequency parameter lambda = sqrt(omega_nd)
with omega_nd = omega L^2 sqrt(rho A / (E I)), the convention of the
published benchmark tables.
"""

from __future__ import annotations

import math

import numpy as np

_CLASSICAL_BCS = ("pinned-pinned", "clamped-clamped")


def _cc_residual(lam: float) -> float:
    # cos(lam) cosh(lam) - 1 = 0 rewritten as cos(lam) - sech(lam) = 0,
    # which neither overflows nor cancels for large lam
    return math.cos(lam) - 1.0 / math.cosh(lam)


def classical_frequency(bc: str, mode: int) -> float:
    """Classical thin-beam frequency parameter for the given mode.

    pinned-pinned: exactly n pi. clamped-clamped: the n-th root of
    cos(L) cosh(L) = 1, found by bisection around the asymptotic guess
    (n + 1/2) pi and polished by Newton to 1e-12.
    """
    if mode < 1:
        raise ValueError(f"mode must be >= 1, got {mode}")
    if bc == "pinned-pinned":
        return mode * math.pi
    if bc != "clamped-clamped":
        raise ValueError(f"no classical roots implemented for bc {bc!r}")

    center = (mode + 0.5) * math.pi
    lo, hi = center - 0.5, center + 0.5
    flo = _cc_residual(lo)
    if flo * _cc_residual(hi) > 0:
        raise RuntimeError(f"root bracket failed for mode {mode}")
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        fm = _cc_residual(mid)
        if flo * fm <= 0:
            hi = mid
        else:
            lo, flo = mid, fm
    lam = 0.5 * (lo + hi)
    for _ in range(8):
        f = _cc_residual(lam)
        df = -math.sin(lam) + math.tanh(lam) / math.cosh(lam)
        step = f / df
        lam -= step
        if abs(step) < 1e-12:
            break
    return lam


def timoshenko_pinned(h_over_L: float, nu: float, kappa: float, mode: int,
                      branch: str = "bending") -> float:
    """Exact pinned-pinned frequency parameter of a shear-deformable beam.

    With v = sin(k x), phi = cos(k x), k = mode * pi / L, the coupled
    equations reduce to

        (rho A rho I) w^4
      - (rho A E I k^2 + rho A kGA + rho I kGA k^2) w^2
      + E I kGA k^4 = 0.

    ``branch`` selects the smaller (bending) or larger (shear) root in
    omega^2; mode 0 is allowed on the shear branch only, where it gives
    the cutoff frequency.
    """
    if not 0.0 < h_over_L <= 0.5:
        raise ValueError(f"h_over_L must lie in (0, 0.5], got {h_over_L}")
    if branch not in ("bending", "shear"):
        raise ValueError(f"branch must be 'bending' or 'shear', got {branch!r}")
    if mode < 1 and branch == "bending":
        raise ValueError(f"mode must be >= 1 on the bending branch, got {mode}")
    if mode < 0:
        raise ValueError(f"mode must be >= 0, got {mode}")

    # normalized section: E = rho = L = b = 1, h = h_over_L
    h = h_over_L
    A = h
    I = h**3 / 12.0
    G = 1.0 / (2.0 * (1.0 + nu))
    kGA = kappa * G * A
    k = mode * math.pi

    a = A * I                       # rho A rho I
    b = A * I * k**2 + A * kGA + I * kGA * k**2
    c = I * kGA * k**4
    disc = math.sqrt(b * b - 4.0 * a * c)
    # smaller root in the cancellation-free product form 2c / (b + disc)
    w2 = 2.0 * c / (b + disc) if branch == "bending" else (b + disc) / (2.0 * a)
    omega_nd = math.sqrt(w2) * math.sqrt(A / I)
    return math.sqrt(omega_nd)


def transverse_spectrum_pinned(h_over_L: float, nu: float, kappa: float,
                               n_modes: int) -> np.ndarray:
    """First ``n_modes`` exact transverse frequency parameters, ascending.

    Merges the bending branch with the shear branch (cutoff included);
    for thick beams the branches interleave, exactly as in the sorted
    output of an eigensolution.
    """
    bending = [timoshenko_pinned(h_over_L, nu, kappa, n) for n in range(1, n_modes + 1)]
    shear = [timoshenko_pinned(h_over_L, nu, kappa, n, branch="shear")
             for n in range(0, n_modes + 1)]
    merged = np.sort(np.concatenate([bending, shear]))
    return merged[:n_modes]
