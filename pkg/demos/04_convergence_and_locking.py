"""Convergence under nested refinement, and shear locking.

Two experiments on a pinned-pinned beam:

* a nested h-sweep at fixed degree: frequencies decrease monotonically
  (conforming Rayleigh-Ritz) toward the closed-form dispersion values;
* the classic locking contrast on a very thin beam (h/L = 0.002) with a
  coarse mesh: the linear basis is orders of magnitude too stiff, the
  cubic basis is already at engineering accuracy.
"""

from igabeam import AnalysisConfig, convergence_study, run_analysis, timoshenko_pinned

# --- nested convergence sweep -----------------------------------------------
config = AnalysisConfig(bc="pp", h_over_l=0.01, degree=3, n_modes=3)
sweep = convergence_study(config, levels=[4, 8, 16, 32, 64])
print(f"h/L = {config.h_over_l}, degree {config.degree}, "
      f"nested = {sweep.nested}, monotone non-increasing = {sweep.monotone}")
print(f"{'elems':>6} {'DOFs':>6} {'lambda_1':>12} {'ratio to exact':>15}")
for r, ne in enumerate(sweep.levels):
    print(f"{ne:>6} {int(sweep.dofs[r]):>6} {sweep.lam[r, 0]:>12.8f} "
          f"{sweep.ratio_to_exact[r, 0]:>15.10f}")

# --- locking ---------------------------------------------------------------
exact = timoshenko_pinned(0.002, 0.3, 5 / 6, 1)
print(f"\nthin beam h/L = 0.002, 16 elements, exact lambda_1 = {exact:.6f}")
for p in (1, 2, 3):
    lam = run_analysis(AnalysisConfig(bc="pp", h_over_l=0.002, degree=p,
                                      elements=16, n_modes=1)).lam[0]
    err = abs(lam - exact) / exact
    print(f"  p = {p}: lambda_1 = {lam:10.6f}, relative error {err:.2e}")
print("the higher-order basis shows no locking; "
      "the linear one overshoots by orders of magnitude")
