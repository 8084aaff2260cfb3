"""High-level analyses: single runs, benchmark tables, convergence sweeps,
mode-shape export, and the flat key = value configuration format.

Benchmark normalization: E = rho = L = b = 1 and h = h/L, under which the
non-dimensional frequencies are material-independent.
"""

from __future__ import annotations

import dataclasses
import io
import os
from dataclasses import dataclass

import numpy as np

from . import benchmarks
from .assembly import BOUNDARY_CONDITIONS, GlobalSystem, Section, apply_bc, assemble
from .bspline import Curve, elevate_degree, insert_knot, k_refine, straight_line
from .eigensolve import Spectrum, modal_spectrum, sample_mode
from .quadrature import gauss_legendre
from .reference import classical_frequency, transverse_spectrum_pinned

BC_CODES = {"pp": "pinned-pinned", "cc": "clamped-clamped",
            "cf": "clamped-free", "ff": "free-free"}

REFINEMENTS = ("h", "p", "k")


def normalize_bc(bc: str) -> str:
    bc = BC_CODES.get(bc, bc)
    if bc not in BOUNDARY_CONDITIONS:
        raise ValueError(f"unknown boundary condition {bc!r}")
    return bc


@dataclass
class AnalysisConfig:
    """Everything one free-vibration run needs.

    ``refinement`` chooses how the basis is built: "k" (and "h") elevate
    the single-element curve first and then insert knots, giving C^(p-1)
    interelement continuity; "p" inserts first and elevates afterwards,
    giving the C^0 spaces of classical finite elements.
    """

    bc: str = "pinned-pinned"
    h_over_l: float = 0.01
    degree: int = 3
    elements: int = 64
    refinement: str = "k"
    quadrature_points: int | None = None
    n_modes: int = 10
    nu: float = 0.3
    kappa: float = 5.0 / 6.0

    def __post_init__(self):
        self.bc = normalize_bc(self.bc)
        if self.h_over_l <= 0:
            raise ValueError("h_over_l must be positive")
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        if self.elements < 1:
            raise ValueError("elements must be >= 1")
        if self.refinement not in REFINEMENTS:
            raise ValueError(f"refinement must be one of {REFINEMENTS}")
        if self.n_modes < 1:
            raise ValueError("n_modes must be >= 1")
        if not 0.0 < self.nu < 0.5:
            raise ValueError("nu must lie in (0, 0.5)")
        if self.kappa <= 0:
            raise ValueError("kappa must be positive")
        if self.quadrature_points is not None and not 1 <= self.quadrature_points <= 16:
            raise ValueError("quadrature_points must lie in [1, 16]")


def serialize_config(config: AnalysisConfig) -> str:
    """Flat ``key = value`` text; None fields are omitted."""
    lines = ["# igabeam analysis configuration"]
    for f in dataclasses.fields(config):
        value = getattr(config, f.name)
        if value is None:
            continue
        lines.append(f"{f.name} = {value}")  # str(float) round-trips exactly
    return "\n".join(lines) + "\n"


def parse_config(text: str) -> AnalysisConfig:
    """Inverse of :func:`serialize_config`; '#' starts a comment."""
    field_types = {f.name: f for f in dataclasses.fields(AnalysisConfig)}
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key not in field_types:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        if key in ("bc", "refinement"):
            values[key] = val.strip("'\"")
        elif key in ("degree", "elements", "quadrature_points", "n_modes"):
            values[key] = int(val)
        else:
            values[key] = float(val)
    return AnalysisConfig(**values)


def load_config(path) -> AnalysisConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


def save_config(config: AnalysisConfig, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_config(config))


def build_section(config: AnalysisConfig) -> Section:
    return Section(E=1.0, nu=config.nu, rho=1.0, kappa=config.kappa,
                   b=1.0, h=config.h_over_l, L=1.0)


def build_curve(config: AnalysisConfig) -> Curve:
    curve = straight_line(1.0)
    if config.refinement in ("k", "h"):
        return k_refine(curve, config.degree, config.elements)
    # "p": insert on the linear curve first, elevate afterwards (C^0 spaces)
    for z in np.linspace(0.0, 1.0, config.elements + 1)[1:-1]:
        curve = insert_knot(curve, float(z))
    while curve.degree < config.degree:
        curve = elevate_degree(curve)
    return curve


@dataclass(frozen=True, eq=False)
class AnalysisResult:
    """A solved run: reported (transverse) frequency parameters plus the
    full spectrum and the objects needed to post-process it."""

    config: AnalysisConfig
    section: Section
    curve: Curve
    system: GlobalSystem
    spectrum: Spectrum
    lam: np.ndarray            # first n_modes transverse lambdas, ascending
    bending_indices: np.ndarray
    n_rigid: int

    @property
    def omega_nd(self) -> np.ndarray:
        return self.lam**2

    @property
    def n_dofs(self) -> int:
        return self.system.n_dofs


def run_analysis(config: AnalysisConfig) -> AnalysisResult:
    """Build, refine, assemble, constrain, solve, classify, report.

    The reported modes are the transverse ("bending"-tagged) ones in
    ascending order; axial modes are filtered out and rigid modes are
    counted but excluded from the numbering.
    """
    try:
        section = build_section(config)
        curve = build_curve(config)
        rule = gauss_legendre(config.quadrature_points or config.degree + 1)
        system = apply_bc(assemble(section, curve, rule), config.bc)
        spectrum = modal_spectrum(system, section)
    except Exception as exc:
        if hasattr(exc, "add_note"):
            exc.add_note(f"while running config: {serialize_config(config)!s}")
        raise
    bending = spectrum.select("bending")
    if bending.size < config.n_modes:
        raise ValueError(
            f"only {bending.size} transverse modes available "
            f"({system.n_dofs} DOFs); lower n_modes or refine the mesh"
        )
    bending = bending[: config.n_modes]
    return AnalysisResult(
        config=config, section=section, curve=curve, system=system,
        spectrum=spectrum, lam=spectrum.lam[bending],
        bending_indices=bending, n_rigid=len(spectrum.select("rigid")),
    )


def _fmt(x: float) -> str:
    return format(float(x), ".9g")


def _write_csv(rows, header) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(cell if isinstance(cell, str) else _fmt(cell)
                           for cell in row) + "\n")
    return buf.getvalue()


@dataclass(frozen=True, eq=False)
class TableResult:
    """A reproduced benchmark table with deviations from the published one."""

    which: int
    bc: str
    ratios: tuple[float, ...]
    values: np.ndarray       # (10, 7) computed lambdas
    classical: np.ndarray    # (10,) thin-beam reference column
    benchmark: np.ndarray    # (10, 7) published values
    deviations: np.ndarray   # (10, 7) |computed - published| / published

    def to_csv(self) -> str:
        header = (["mode", "classical"]
                  + [f"hL={r:g}" for r in self.ratios]
                  + ["max_rel_dev_benchmark"])
        rows = []
        for i in range(self.values.shape[0]):
            rows.append([i + 1, self.classical[i], *self.values[i],
                         self.deviations[i].max()])
        return _write_csv(rows, header)


def reproduce_table(which: int, degree: int = 3, elements: int = 64) -> TableResult:
    """Recompute benchmark table 1 (pinned-pinned) or 2 (clamped-clamped):
    ten transverse modes at seven thickness ratios."""
    if which not in benchmarks.TABLES:
        raise ValueError(f"which must be 1 or 2, got {which}")
    bc, published = benchmarks.TABLES[which]
    ratios = benchmarks.H_OVER_L
    n_modes = benchmarks.N_MODES
    values = np.empty((n_modes, len(ratios)))
    for j, h in enumerate(ratios):
        result = run_analysis(AnalysisConfig(
            bc=bc, h_over_l=h, degree=degree, elements=elements,
            n_modes=n_modes))
        values[:, j] = result.lam
    classical = np.array([classical_frequency(bc, m) for m in range(1, n_modes + 1)])
    deviations = np.abs(values - published) / published
    return TableResult(which=which, bc=bc, ratios=ratios, values=values,
                       classical=classical, benchmark=published,
                       deviations=deviations)


@dataclass(frozen=True, eq=False)
class ConvergenceResult:
    """Frequency parameters across a refinement sweep.

    ``ratio_to_exact`` holds lambda / lambda_exact against the closed-form
    pinned-pinned solution and is None for other boundary conditions.
    ``monotone`` is None when the sweep is not nested.
    """

    config: AnalysisConfig
    levels: tuple[int, ...]
    dofs: np.ndarray
    lam: np.ndarray                     # (n_levels, n_modes)
    ratio_to_exact: np.ndarray | None
    nested: bool
    monotone: bool | None

    def to_csv(self) -> str:
        k = self.lam.shape[1]
        header = ["elements", "dofs"] + [f"lam_{i+1}" for i in range(k)]
        if self.ratio_to_exact is not None:
            header += [f"ratio_{i+1}" for i in range(k)]
        rows = []
        for r, ne in enumerate(self.levels):
            row = [ne, int(self.dofs[r]), *self.lam[r]]
            if self.ratio_to_exact is not None:
                row += list(self.ratio_to_exact[r])
            rows.append(row)
        return _write_csv(rows, header)


def convergence_study(config: AnalysisConfig, levels) -> ConvergenceResult:
    """Run the configuration at each element count in ``levels``.

    A nested sweep (each count divides the next, so the spline spaces are
    nested) gets its frequencies checked for monotone non-increase, the
    signature of a conforming Rayleigh-Ritz refinement.
    """
    levels = tuple(int(x) for x in levels)
    if len(levels) < 2 or any(x < 1 for x in levels):
        raise ValueError("need at least two positive element counts")
    nested = all(b % a == 0 for a, b in zip(levels, levels[1:]))

    lam = np.empty((len(levels), config.n_modes))
    dofs = np.empty(len(levels))
    for r, ne in enumerate(levels):
        cfg = dataclasses.replace(config, elements=ne)
        result = run_analysis(cfg)
        lam[r] = result.lam
        dofs[r] = result.n_dofs

    ratio = None
    if config.bc == "pinned-pinned":
        exact = transverse_spectrum_pinned(config.h_over_l, config.nu,
                                           config.kappa, config.n_modes)
        ratio = lam / exact
    monotone = bool(np.all(np.diff(lam, axis=0) <= 1e-12 * lam[:-1])) if nested else None
    return ConvergenceResult(config=config, levels=levels, dofs=dofs, lam=lam,
                             ratio_to_exact=ratio, nested=nested, monotone=monotone)


def export_modes(config: AnalysisConfig, modes, n_points: int, out_dir) -> list:
    """Write one CSV per requested transverse mode (columns x, u, v, phi).

    Mode numbers follow the reported (transverse) numbering, 1-based.
    Returns the written paths.
    """
    modes = [int(m) for m in modes]
    result = run_analysis(config)
    if any(not 1 <= m <= result.lam.size for m in modes):
        raise ValueError(f"requested modes {modes} outside solved range "
                         f"1..{result.lam.size}")
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for m in modes:
        column = result.bending_indices[m - 1]
        samples = sample_mode(result.curve, result.spectrum.modes[:, column], n_points)
        csv = _write_csv(samples, ["x", "u", "v", "phi"])
        path = os.path.join(out_dir, f"mode_{m:02d}.csv")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(csv)
        paths.append(path)
    return paths
