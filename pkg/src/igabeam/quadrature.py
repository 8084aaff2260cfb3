"""Gauss-Legendre quadrature on [-1, 1] and the affine map to a knot span."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_POINTS = 16


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes in (-1, 1) and positive weights summing to 2."""

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        for name in ("points", "weights"):
            a = np.array(getattr(self, name), dtype=float)
            a.setflags(write=False)
            object.__setattr__(self, name, a)

    @property
    def n(self) -> int:
        return self.points.size


def gauss_legendre(n: int) -> QuadratureRule:
    """Nodes and weights of the n-point Gauss-Legendre rule.

    Roots of the Legendre polynomial P_n by Newton iteration from the
    Chebyshev-based initial guess; converged to 1e-14. Exact for
    polynomials up to degree 2n - 1.
    """
    if not 1 <= n <= MAX_POINTS:
        raise ValueError(f"point count must be in [1, {MAX_POINTS}], got {n}")
    if n == 1:
        return QuadratureRule(np.zeros(1), np.full(1, 2.0))

    x = np.cos(np.pi * (np.arange(1, n + 1) - 0.25) / (n + 0.5))
    for _ in range(100):
        # P_n(x) and P'_n(x) by the three-term recurrence
        p0 = np.ones_like(x)
        p1 = x.copy()
        for k in range(2, n + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x -= dx
        if np.abs(dx).max() < 1e-14:
            break
    else:
        raise RuntimeError("Legendre root iteration failed to converge")

    p0 = np.ones_like(x)
    p1 = x.copy()
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    dp = n * (x * p1 - p0) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)

    order = np.argsort(x)
    return QuadratureRule(x[order], w[order])


def map_to_span(rule: QuadratureRule, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    """Affine image of the rule on [a, b]; weights pick up (b - a) / 2."""
    if a >= b:
        raise ValueError(f"degenerate span [{a}, {b}]")
    half = 0.5 * (b - a)
    return a + half * (rule.points + 1.0), half * rule.weights
