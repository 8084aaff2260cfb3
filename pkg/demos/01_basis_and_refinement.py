"""NURBS basics: knot vectors, basis evaluation, and the three refinements.

Walks through the building blocks the beam analyses stand on: open knot
vectors, Cox-de Boor basis values and derivatives, and the h/p/k
refinement operations, checking on the way that refinement never moves
the geometry.
"""

import numpy as np

from igabeam import (elevate_degree, eval_basis, geometry_map, insert_knot,
                     k_refine, make_open_uniform, straight_line)

# --- open knot vectors -----------------------------------------------------
# A degree-2 basis on two uniform elements: end knots repeated p+1 times
# make the basis interpolatory at the ends.
kv = make_open_uniform(p=2, num_elements=2)
print("knot vector:", kv.knots)
print("basis functions:", kv.n_basis, "| elements:", kv.n_elements)

# --- basis evaluation ------------------------------------------------------
# At any point exactly p+1 functions are nonzero, they sum to one, and
# their derivatives sum to zero.
for xi in (0.1, 0.5, 0.9):
    be = eval_basis(kv, xi)
    print(f"xi={xi}: span {be.span}, values {np.round(be.values, 6)}, "
          f"sum {be.values.sum():.15f}")

# --- knot insertion (h-refinement) ----------------------------------------
# More elements, same curve: control points follow the convex-combination
# rule and x(xi) does not move.
curve = straight_line(1.0)
refined = insert_knot(elevate_degree(curve), 0.5)
worst = max(abs(geometry_map(refined, xi)[0] - xi) for xi in np.linspace(0, 1, 100))
print(f"\nafter insertion: {refined.n} control points, "
      f"max geometry drift {worst:.2e}")

# --- degree elevation (p-refinement) ---------------------------------------
# Raises every knot's multiplicity by one; continuity is preserved.
elevated = elevate_degree(refined)
print(f"after elevation:  degree {elevated.degree}, "
      f"multiplicity of 0.5: {elevated.kv.multiplicity(0.5)}")

# --- k-refinement ----------------------------------------------------------
# Elevate FIRST, insert second: interior knots stay simple, so a cubic
# basis is C^2 across every element boundary. The reversed order would
# pile up multiplicity and drop to C^0 - that is why k_refine refuses
# pre-refined input.
smooth = k_refine(straight_line(1.0), target_p=3, target_elements=8)
print(f"\nk-refined cubic on 8 elements: n = {smooth.n}, "
      f"interior multiplicities all "
      f"{ {smooth.kv.multiplicity(z) for z in np.unique(smooth.kv.knots)[1:-1]} }")
worst = max(abs(geometry_map(smooth, xi)[0] - xi) for xi in np.linspace(0, 1, 100))
print(f"geometry still exact to {worst:.2e}")
