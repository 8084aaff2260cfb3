"""Tests for configurations, single analyses, table reproduction,
convergence sweeps and mode export."""

import dataclasses

import numpy as np
import pytest

from igabeam.analysis import (AnalysisConfig, build_curve, convergence_study,
                              export_modes, parse_config, reproduce_table,
                              run_analysis, serialize_config)
from igabeam.reference import timoshenko_pinned, transverse_spectrum_pinned


class TestAnalysisConfig:
    def test_defaults_match_benchmark_captions(self):
        cfg = AnalysisConfig()
        assert cfg.nu == 0.3
        assert cfg.kappa == pytest.approx(5.0 / 6.0)

    def test_bc_codes_normalize(self):
        assert AnalysisConfig(bc="pp").bc == "pinned-pinned"
        assert AnalysisConfig(bc="cc").bc == "clamped-clamped"
        assert AnalysisConfig(bc="cf").bc == "clamped-free"
        assert AnalysisConfig(bc="ff").bc == "free-free"

    def test_round_trip(self):
        cfg = AnalysisConfig(bc="cc", h_over_l=0.037, degree=4, elements=12,
                             refinement="p", quadrature_points=6, n_modes=7,
                             nu=0.25, kappa=0.9)
        assert parse_config(serialize_config(cfg)) == cfg

    def test_round_trip_with_none_field(self):
        cfg = AnalysisConfig()
        assert cfg.quadrature_points is None
        assert parse_config(serialize_config(cfg)) == cfg

    def test_parse_comments_and_errors(self):
        cfg = parse_config("# comment\nbc = pp   # trailing\n\nh_over_l = 0.05\n")
        assert cfg.bc == "pinned-pinned"
        assert cfg.h_over_l == 0.05
        with pytest.raises(ValueError):
            parse_config("bc pp\n")
        with pytest.raises(ValueError):
            parse_config("thickness = 0.1\n")

    def test_validation(self):
        with pytest.raises(ValueError):
            AnalysisConfig(h_over_l=-0.1)
        with pytest.raises(ValueError):
            AnalysisConfig(degree=0)
        with pytest.raises(ValueError):
            AnalysisConfig(refinement="q")
        with pytest.raises(ValueError):
            AnalysisConfig(bc="simply")


class TestBuildCurve:
    def test_k_refinement_keeps_simple_knots(self):
        curve = build_curve(AnalysisConfig(degree=3, elements=8))
        assert curve.kv.multiplicity(0.5) == 1

    def test_p_refinement_gives_c0_multiplicities(self):
        curve = build_curve(AnalysisConfig(degree=3, elements=4, refinement="p"))
        assert curve.kv.multiplicity(0.5) == 3

    def test_dof_counts(self):
        cfg = AnalysisConfig(degree=3, elements=8)
        assert build_curve(cfg).n == 8 + 3


class TestRunAnalysis:
    def test_pinned_thin_first_mode(self):
        result = run_analysis(AnalysisConfig(bc="pp", h_over_l=0.002, degree=3,
                                             elements=64, n_modes=10))
        assert result.lam[0] == pytest.approx(3.1416, abs=2e-4)

    def test_clamped_thick_first_mode_matches_benchmark(self):
        result = run_analysis(AnalysisConfig(bc="cc", h_over_l=0.2, degree=3,
                                             elements=64, n_modes=1))
        assert result.lam[0] == pytest.approx(4.24201, rel=2e-4)

    def test_free_free_reports_and_excludes_rigid_modes(self):
        result = run_analysis(AnalysisConfig(bc="ff", h_over_l=0.05, degree=3,
                                             elements=8, n_modes=4))
        assert result.n_rigid == 3
        assert np.all(result.lam > 1.0)  # numbering starts past the rigid modes

    def test_dof_count_formula(self):
        # 3 (elements + p) minus the constrained end DOFs
        cfg = AnalysisConfig(bc="cc", h_over_l=0.05, degree=3, elements=16,
                             n_modes=3)
        result = run_analysis(cfg)
        assert result.n_dofs == 3 * (16 + 3) - 6

    def test_too_many_modes_requested(self):
        with pytest.raises(ValueError):
            run_analysis(AnalysisConfig(bc="pp", elements=2, degree=1, n_modes=50))


@pytest.fixture(scope="module")
def table1():
    return reproduce_table(1, degree=3, elements=16)


class TestReproduceTable:

    def test_shape_and_monotone_columns(self, table1):
        assert table1.values.shape == (10, 7)
        assert np.all(np.diff(table1.values, axis=0) > 0)

    def test_classical_column(self, table1):
        np.testing.assert_allclose(table1.classical,
                                   [n * np.pi for n in range(1, 11)], rtol=1e-12)

    def test_csv_layout(self, table1):
        lines = table1.to_csv().splitlines()
        assert lines[0].startswith("mode,classical,hL=0.002")
        assert lines[0].endswith("max_rel_dev_benchmark")
        assert len(lines) == 11
        first = lines[1].split(",")
        assert first[0] == "1"
        assert float(first[1]) == pytest.approx(np.pi, rel=1e-8)

    def test_invalid_table_number(self):
        with pytest.raises(ValueError):
            reproduce_table(3)


class TestConvergenceStudy:
    def test_nested_sweep_is_monotone_and_converges(self):
        cfg = AnalysisConfig(bc="pp", h_over_l=0.01, degree=3, n_modes=3)
        result = convergence_study(cfg, [4, 8, 16, 32])
        assert result.nested
        assert result.monotone
        exact = timoshenko_pinned(0.01, cfg.nu, cfg.kappa, 1)
        assert result.lam[-1, 0] == pytest.approx(exact, rel=1e-7)
        assert result.ratio_to_exact[-1, 0] == pytest.approx(1.0, abs=1e-6)

    def test_non_nested_sweep_omits_monotonicity(self):
        cfg = AnalysisConfig(bc="pp", h_over_l=0.05, degree=2, n_modes=2)
        result = convergence_study(cfg, [4, 6, 8])
        assert not result.nested
        assert result.monotone is None

    def test_dofs_column(self):
        cfg = AnalysisConfig(bc="pp", h_over_l=0.05, degree=3, n_modes=2)
        result = convergence_study(cfg, [4, 8])
        np.testing.assert_array_equal(result.dofs, [3 * (4 + 3) - 4, 3 * (8 + 3) - 4])

    def test_locking_ordering_p1_vs_p3(self):
        # thin beam on a coarse mesh: the linear basis locks, the cubic
        # basis does not; the error ratio is the assertion
        exact = timoshenko_pinned(0.002, 0.3, 5 / 6, 1)
        lam = {}
        for p in (1, 3):
            cfg = AnalysisConfig(bc="pp", h_over_l=0.002, degree=p,
                                 elements=16, n_modes=1)
            lam[p] = run_analysis(cfg).lam[0]
        err1 = abs(lam[1] - exact) / exact
        err3 = abs(lam[3] - exact) / exact
        assert err1 > 10 * err3

    def test_clamped_sweep_has_no_oracle_ratio(self):
        cfg = AnalysisConfig(bc="cc", h_over_l=0.05, degree=3, n_modes=2)
        result = convergence_study(cfg, [4, 8])
        assert result.ratio_to_exact is None
        assert "ratio_1" not in result.to_csv().splitlines()[0]


class TestExportModes:
    def test_pinned_mode1_symmetric(self, tmp_path):
        cfg = AnalysisConfig(bc="pp", h_over_l=0.05, degree=3, elements=16,
                             n_modes=2)
        paths = export_modes(cfg, [1], 101, tmp_path)
        data = np.loadtxt(paths[0], delimiter=",", skiprows=1)
        v = data[:, 2]
        assert np.abs(v - v[::-1]).max() <= 1e-8
        assert np.abs(v).max() == pytest.approx(1.0, abs=1e-12)

    def test_clamped_mode2_antisymmetric(self, tmp_path):
        cfg = AnalysisConfig(bc="cc", h_over_l=0.05, degree=3, elements=16,
                             n_modes=2)
        paths = export_modes(cfg, [2], 101, tmp_path)
        data = np.loadtxt(paths[0], delimiter=",", skiprows=1)
        v = data[:, 2]
        assert np.abs(v + v[::-1]).max() <= 1e-8

    def test_essential_bcs_exact_at_ends(self, tmp_path):
        cfg = AnalysisConfig(bc="cc", h_over_l=0.05, degree=3, elements=8,
                             n_modes=1)
        (path,) = export_modes(cfg, [1], 51, tmp_path)
        data = np.loadtxt(path, delimiter=",", skiprows=1)
        for col in (1, 2, 3):  # u, v, phi all clamped
            assert data[0, col] == 0.0
            assert data[-1, col] == 0.0

    def test_rejects_out_of_range_mode(self, tmp_path):
        cfg = AnalysisConfig(bc="pp", h_over_l=0.05, degree=2, elements=4,
                             n_modes=2)
        with pytest.raises(ValueError):
            export_modes(cfg, [3], 11, tmp_path)


class TestSortedSpectrumAgainstDispersion:
    def test_thick_pinned_matches_merged_branches(self):
        # h/L = 0.2: the reported modes 7..10 come from the shear branch
        # and its cutoff, in exactly the order the dispersion curves give
        cfg = AnalysisConfig(bc="pp", h_over_l=0.2, degree=3, elements=32,
                             n_modes=10)
        lam = run_analysis(cfg).lam
        exact = transverse_spectrum_pinned(0.2, cfg.nu, cfg.kappa, 10)
        np.testing.assert_allclose(lam, exact, rtol=1e-5)
