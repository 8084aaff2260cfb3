"""Univariate B-spline / NURBS kernel.

Knot vectors, basis evaluation with first derivatives (Cox-de Boor),
rational (NURBS) basis, the geometry map of a straight beam, and the
three refinement operations: knot insertion, degree elevation, and
k-refinement (elevate first, then insert).

All parametric coordinates live on the knot range (conventionally [0, 1]);
physical length enters only through the control-point abscissae.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def _readonly(a) -> np.ndarray:
    out = np.array(a, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class KnotVector:
    """Open (clamped) knot vector with its polynomial degree.

    The number of basis functions is ``n = len(knots) - degree - 1``;
    end knots must appear exactly ``degree + 1`` times and interior knots
    at most ``degree`` times.
    """

    knots: np.ndarray
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "knots", _readonly(self.knots))
        U, p = self.knots, self.degree
        if p < 1:
            raise ValueError(f"degree must be >= 1, got {p}")
        if U.ndim != 1 or U.size < 2 * (p + 1):
            raise ValueError("knot vector too short for its degree")
        if np.any(np.diff(U) < 0):
            raise ValueError("knots must be non-decreasing")
        if np.count_nonzero(U == U[0]) != p + 1:
            raise ValueError("first knot must have multiplicity exactly degree+1")
        if np.count_nonzero(U == U[-1]) != p + 1:
            raise ValueError("last knot must have multiplicity exactly degree+1")
        interior = U[(U > U[0]) & (U < U[-1])]
        if interior.size:
            _, counts = np.unique(interior, return_counts=True)
            if counts.max() > p:
                raise ValueError("interior knot multiplicity exceeds degree")

    @property
    def n_basis(self) -> int:
        return self.knots.size - self.degree - 1

    @property
    def domain(self) -> tuple[float, float]:
        return float(self.knots[0]), float(self.knots[-1])

    @property
    def nonzero_spans(self) -> np.ndarray:
        """Indices s with knots[s] < knots[s+1]; one per element."""
        U, p, n = self.knots, self.degree, self.n_basis
        spans = [s for s in range(p, n) if U[s + 1] > U[s]]
        return np.asarray(spans, dtype=int)

    @property
    def n_elements(self) -> int:
        return len(self.nonzero_spans)

    def multiplicity(self, value: float) -> int:
        return int(np.count_nonzero(self.knots == value))


@dataclass(frozen=True, eq=False)
class Curve:
    """Control-point abscissae and weights over a knot vector.

    Defines the geometry map xi -> x of a straight beam. With unit
    weights (the shipped analyses) the curve is an ordinary B-spline.
    """

    control_x: np.ndarray
    weights: np.ndarray
    kv: KnotVector

    def __post_init__(self):
        object.__setattr__(self, "control_x", _readonly(self.control_x))
        object.__setattr__(self, "weights", _readonly(self.weights))
        n = self.kv.n_basis
        if self.control_x.size != n or self.weights.size != n:
            raise ValueError(
                f"expected {n} control points/weights, got "
                f"{self.control_x.size}/{self.weights.size}"
            )
        if np.any(self.weights <= 0):
            raise ValueError("weights must be strictly positive")
        if np.any(np.diff(self.control_x) < 0):
            raise ValueError("control abscissae must be non-decreasing")

    @property
    def degree(self) -> int:
        return self.kv.degree

    @property
    def n(self) -> int:
        return self.kv.n_basis

    @property
    def length(self) -> float:
        return float(self.control_x[-1] - self.control_x[0])


@dataclass(frozen=True, eq=False)
class BasisEval:
    """Nonzero basis values and first parametric derivatives at one point.

    ``span`` is the knot-span index; the active basis functions are
    ``span - p .. span`` where ``p + 1 = len(values)``.
    """

    span: int
    values: np.ndarray
    derivs: np.ndarray

    @property
    def indices(self) -> np.ndarray:
        p = self.values.size - 1
        return np.arange(self.span - p, self.span + 1)


def make_open_uniform(p: int, num_elements: int) -> KnotVector:
    """Open knot vector on [0, 1] with ``num_elements`` uniform spans.

    The resulting space has ``num_elements + p`` basis functions.
    """
    if p < 1:
        raise ValueError(f"degree must be >= 1, got {p}")
    if num_elements < 1:
        raise ValueError(f"need at least one element, got {num_elements}")
    interior = np.linspace(0.0, 1.0, num_elements + 1)[1:-1]
    knots = np.concatenate([np.zeros(p + 1), interior, np.ones(p + 1)])
    return KnotVector(knots, p)


def _find_span(U: np.ndarray, p: int, n: int, xi: float) -> int:
    # binary search; xi == U[n] maps to the last non-zero span
    if xi >= U[n]:
        s = n - 1
        while U[s + 1] <= U[s]:
            s -= 1
        return s
    lo, hi = p, n
    mid = (lo + hi) // 2
    while xi < U[mid] or xi >= U[mid + 1]:
        if xi < U[mid]:
            hi = mid
        else:
            lo = mid
        mid = (lo + hi) // 2
    return mid


def find_span(kv: KnotVector, xi: float) -> int:
    """Knot-span index i with knots[i] <= xi < knots[i+1].

    The right endpoint maps to the last non-zero span so the closed
    interval is evaluable.
    """
    a, b = kv.domain
    if not a <= xi <= b:
        raise ValueError(f"xi={xi} outside knot range [{a}, {b}]")
    return _find_span(kv.knots, kv.degree, kv.n_basis, xi)


def eval_basis(kv: KnotVector, xi: float) -> BasisEval:
    """Evaluate the p+1 nonzero B-spline basis functions and their first
    parametric derivatives at ``xi``.

    Values come from the Cox-de Boor recursion; derivatives from the
    standard degree p -> p-1 relation
    ``N'_{i,p} = p (N_{i,p-1}/(U_{i+p}-U_i) - N_{i+1,p-1}/(U_{i+p+1}-U_{i+1}))``
    rather than finite differences, so both are exact up to round-off.
    """
    span = find_span(kv, xi)
    U, p = kv.knots, kv.degree

    N = np.zeros(p + 1)
    N[0] = 1.0
    left = np.zeros(p + 1)
    right = np.zeros(p + 1)
    lower = np.zeros(p)  # degree p-1 values, filled just before the last pass
    for j in range(1, p + 1):
        left[j] = xi - U[span + 1 - j]
        right[j] = U[span + j] - xi
        if j == p:
            lower[:] = N[:p]
        saved = 0.0
        for r in range(j):
            tmp = N[r] / (right[r + 1] + left[j - r])
            N[r] = saved + right[r + 1] * tmp
            saved = left[j - r] * tmp
        N[j] = saved

    # lower[r] is N_{span-p+1+r, p-1}; active function k has global index
    # i = span - p + k and derivative p*(lower[k-1]/(U[i+p]-U[i])
    #                                   - lower[k]/(U[i+p+1]-U[i+1]))
    dN = np.zeros(p + 1)
    for k in range(p + 1):
        i = span - p + k
        d = 0.0
        if k >= 1:
            den = U[i + p] - U[i]
            if den > 0.0:
                d += lower[k - 1] / den
        if k <= p - 1:
            den = U[i + p + 1] - U[i + 1]
            if den > 0.0:
                d -= lower[k] / den
        dN[k] = p * d

    return BasisEval(span=span, values=N, derivs=dN)


def eval_nurbs(curve: Curve, xi: float) -> BasisEval:
    """Rational basis R_i = N_i q_i / sum_j N_j q_j with quotient-rule
    derivatives. Reduces to ``eval_basis`` when all weights are 1.
    """
    be = eval_basis(curve.kv, xi)
    q = curve.weights[be.indices]
    Nq = be.values * q
    dNq = be.derivs * q
    W = Nq.sum()
    dW = dNq.sum()
    if W <= 0.0:
        raise ValueError("weighting function vanished; invalid weights")
    R = Nq / W
    dR = (dNq - R * dW) / W
    return BasisEval(span=be.span, values=R, derivs=dR)


def geometry_map(curve: Curve, xi: float) -> tuple[float, float]:
    """Physical coordinate x(xi) and Jacobian J = dx/dxi."""
    be = eval_nurbs(curve, xi)
    ctrl = curve.control_x[be.indices]
    x = float(be.values @ ctrl)
    J = float(be.derivs @ ctrl)
    if J <= 0.0:
        raise ValueError(f"non-positive Jacobian {J} at xi={xi}")
    return x, J


def greville_abscissae(kv: KnotVector) -> np.ndarray:
    """Greville points: averages of degree-many consecutive interior knots.

    Control points placed at these parametric averages reproduce the
    identity map, so a straight beam built on them has a constant Jacobian.
    """
    U, p, n = kv.knots, kv.degree, kv.n_basis
    return np.array([U[i + 1 : i + p + 1].mean() for i in range(n)])


def straight_line(length: float) -> Curve:
    """Coarsest (single linear element) curve from 0 to ``length``."""
    if length <= 0:
        raise ValueError("length must be positive")
    kv = KnotVector(np.array([0.0, 0.0, 1.0, 1.0]), 1)
    return Curve(np.array([0.0, length]), np.ones(2), kv)


def full_basis(kv: KnotVector, xi: float) -> tuple[np.ndarray, np.ndarray]:
    """All n basis values and derivatives at ``xi`` (zeros off-support)."""
    be = eval_basis(kv, xi)
    vals = np.zeros(kv.n_basis)
    ders = np.zeros(kv.n_basis)
    vals[be.indices] = be.values
    ders[be.indices] = be.derivs
    return vals, ders


def _homogeneous(curve: Curve) -> np.ndarray:
    """(n, 2) array of (w*x, w) rows."""
    return np.column_stack([curve.weights * curve.control_x, curve.weights])


def _from_homogeneous(Pw: np.ndarray, kv: KnotVector) -> Curve:
    w = Pw[:, 1]
    return Curve(Pw[:, 0] / w, w, kv)


def _boehm_insert(U: np.ndarray, p: int, Pw: np.ndarray,
                  xi_new: float) -> tuple[np.ndarray, np.ndarray]:
    """One knot insertion on homogeneous control rows (Boehm's rule)."""
    n = Pw.shape[0]
    k = _find_span(U, p, n, xi_new)
    Qw = np.empty((n + 1, Pw.shape[1]))
    Qw[: k - p + 1] = Pw[: k - p + 1]
    Qw[k + 1 :] = Pw[k:]
    for i in range(k - p + 1, k + 1):
        alpha = (xi_new - U[i]) / (U[i + p] - U[i])
        Qw[i] = alpha * Pw[i] + (1.0 - alpha) * Pw[i - 1]
    U_new = np.insert(U, k + 1, xi_new)
    return U_new, Qw


def insert_knot(curve: Curve, xi_new: float) -> Curve:
    """Insert one knot strictly inside the range; the geometry map is
    pointwise unchanged and n grows by one.
    """
    kv = curve.kv
    a, b = kv.domain
    if not a < xi_new < b:
        raise ValueError(f"insertion point {xi_new} must lie strictly inside ({a}, {b})")
    if kv.multiplicity(xi_new) >= kv.degree:
        raise ValueError(f"multiplicity of {xi_new} would exceed the degree")
    U_new, Qw = _boehm_insert(kv.knots, kv.degree, _homogeneous(curve), xi_new)
    return _from_homogeneous(Qw, KnotVector(U_new, kv.degree))


def _remove_knot_once(U: np.ndarray, q: int, Pw: np.ndarray,
                      z: float) -> tuple[np.ndarray, np.ndarray]:
    """Remove one occurrence of knot z from a degree-q homogeneous curve.

    Valid only when the curve is smooth enough at z for the removal to be
    exact (the case produced by degree elevation); the leftover insertion
    equation is checked and a mismatch raises.
    """
    occurrences = np.flatnonzero(U == z)
    if occurrences.size == 0:
        raise ValueError(f"knot {z} not present")
    r = int(occurrences[-1])
    s = occurrences.size
    n = Pw.shape[0]

    # Inverting Boehm's rule for the insertion of z at span r-1 of the
    # smaller vector: Q_i = a_i P_i + (1-a_i) P_{i-1} for i in [r-q, r-1],
    # with a_i = (z - U[i]) / (U[i+q+1] - U[i]).
    P = np.empty((n - 1, Pw.shape[1]))
    P[: r - q] = Pw[: r - q]
    P[r - 1 :] = Pw[r:]

    def alpha(i):
        return (z - U[i]) / (U[i + q + 1] - U[i])

    fj, bj = r - q, r - 2  # unknown index window
    while fj <= bj and U[fj] < z:  # forward step divides by alpha > 0
        a = alpha(fj)
        P[fj] = (Pw[fj] - (1.0 - a) * P[fj - 1]) / a
        fj += 1
    while bj >= fj:  # backward step divides by 1 - alpha > 0
        a = alpha(bj + 1)
        P[bj] = (Pw[bj + 1] - a * P[bj + 1]) / (1.0 - a)
        bj -= 1

    # leftover equation at i = fj checks exact removability
    a = alpha(fj)
    resid = Pw[fj] - a * P[fj] - (1.0 - a) * P[fj - 1]
    scale = max(1.0, float(np.abs(Pw).max()))
    if np.abs(resid).max() > 1e-9 * scale:
        raise ValueError(f"knot {z} (multiplicity {s}) is not exactly removable")

    return np.delete(U, r), P


def elevate_degree(curve: Curve) -> Curve:
    """Raise the degree by one, increasing every distinct knot's
    multiplicity by one; geometry and continuity are unchanged.

    Works by Bezier extraction: insert knots until every span is a Bezier
    segment, raise each Bernstein segment, reassemble, then remove the
    scaffolding knots to restore the original multiplicities.
    """
    p = curve.degree
    U = curve.kv.knots
    Pw = _homogeneous(curve)

    distinct = np.unique(U)
    interior = distinct[1:-1]
    orig_mult = {z: int(np.count_nonzero(U == z)) for z in interior}

    # 1. decompose: bring every interior knot to multiplicity p
    for z in interior:
        for _ in range(p - orig_mult[z]):
            U, Pw = _boehm_insert(U, p, Pw, z)

    # 2. raise each Bernstein segment from degree p to p+1:
    #    Q_j = j/(p+1) * P_{j-1} + (1 - j/(p+1)) * P_j
    n_seg = distinct.size - 1
    q = p + 1
    Qw = np.empty((n_seg * q + 1, 2))
    for e in range(n_seg):
        seg = Pw[e * p : e * p + p + 1]
        out = Qw[e * q : e * q + q + 1]
        out[0] = seg[0]
        out[q] = seg[p]
        for j in range(1, q):
            f = j / q
            out[j] = f * seg[j - 1] + (1.0 - f) * seg[j]

    U_new = np.concatenate([np.repeat(distinct[:1], q + 1),
                            np.repeat(interior, q),
                            np.repeat(distinct[-1:], q + 1)])

    # 3. remove the decomposition knots: target multiplicity is original+1
    for z in interior:
        for _ in range(q - (orig_mult[z] + 1)):
            U_new, Qw = _remove_knot_once(U_new, q, Qw, z)

    return _from_homogeneous(Qw, KnotVector(U_new, q))


def k_refine(curve: Curve, target_p: int, target_elements: int) -> Curve:
    """Elevate the coarsest curve to ``target_p``, then insert uniform
    interior knots, giving C^(p-1) continuity across every element boundary.

    Order matters: elevating after insertion would raise the interior
    multiplicities and lose continuity, so a pre-refined input is rejected.
    """
    if curve.kv.n_elements != 1:
        raise ValueError(
            "k-refinement must start from the single-element curve; "
            "elevate before inserting knots"
        )
    if target_p < curve.degree:
        raise ValueError(f"cannot lower the degree from {curve.degree} to {target_p}")
    if target_elements < 1:
        raise ValueError("need at least one element")
    out = curve
    while out.degree < target_p:
        out = elevate_degree(out)
    for z in np.linspace(0.0, 1.0, target_elements + 1)[1:-1]:
        out = insert_knot(out, float(z))
    return out
