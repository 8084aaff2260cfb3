"""Isogeometric free-vibration analysis of Timoshenko beams.

NURBS basis machinery with h/p/k refinement, Gauss-Legendre quadrature,
consistent stiffness/mass assembly, a dense generalized eigensolver, and
closed-form reference solutions for verification.
"""

from .analysis import (AnalysisConfig, AnalysisResult, convergence_study,
                       export_modes, load_config, parse_config, reproduce_table,
                       run_analysis, save_config, serialize_config)
from .assembly import (GlobalSystem, Section, apply_bc, assemble, b_matrices,
                       element_mass, element_matrices, element_stiffness,
                       rigid_body_vectors)
from .bspline import (BasisEval, Curve, KnotVector, elevate_degree, eval_basis,
                      eval_nurbs, find_span, full_basis, geometry_map,
                      greville_abscissae, insert_knot, k_refine,
                      make_open_uniform, straight_line)
from .eigensolve import (Spectrum, classify_modes, modal_spectrum,
                         nondimensionalize, sample_mode, solve_generalized)
from .exceptions import NumericalError
from .quadrature import QuadratureRule, gauss_legendre, map_to_span
from .reference import (classical_frequency, timoshenko_pinned,
                        transverse_spectrum_pinned)

__version__ = "0.1.0"
