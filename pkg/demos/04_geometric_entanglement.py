"""Geometric entanglement over the coherent-state sphere.

The closest product state of a symmetric state is itself symmetric, so the
optimization runs over two angles.  The script reproduces the standard
values, shows the closest-product-point rings, compares against the Dicke
closed form, and writes one landscape as CSV for external plotting.
"""

import math

import numpy as np

import majorep as mj
from majorep.serialize import landscape_to_csv

print("Geometric measure of the classics")
for name, state in [
    ("Bell psi+", mj.dicke_state(2, 1)),
    ("GHZ 3", mj.ghz_state(3)),
    ("GHZ 8", mj.ghz_state(8)),
    ("W 3", mj.w_state(3)),
]:
    rep = mj.geometric_measure(state)
    ring = " (ring of optima)" if rep.ring else ""
    cpp = rep.cpps[0]
    print(f"  {name:<10} eg = {rep.eg:.9f}  log = {rep.log_eg:.6f}  "
          f"cpp beta = {cpp.beta:.4f}{ring}")

print("\nW state detail: tan(beta/2) at the optimum =",
      f"{math.tan(mj.geometric_measure(mj.w_state(3)).cpps[0].beta / 2):.6f}",
      " (sqrt 2 =", f"{math.sqrt(2):.6f})")

print("\nDicke family against the closed form, n = 7:")
print("   l   optimized       closed form     |diff|")
for l in range(8):
    rep = mj.geometric_measure(mj.dicke_state(7, l))
    exact, _ = mj.dicke_closed_form(7, l)
    print(f"   {l}   {rep.eg:.10f}  {exact:.10f}  {abs(rep.eg - exact):.1e}")

print("\nBalanced Dicke states beat GHZ (which stays at 1/2):")
for n in range(3, 9):
    eg = mj.geometric_measure(mj.dicke_state(n, n // 2)).eg
    print(f"  n={n}: eg(dicke) = {eg:.6f}")

# Landscape export for plotting
state = mj.ghz_state(3)
alphas = np.linspace(0, 2 * np.pi, 64, endpoint=False)
betas = np.linspace(0, np.pi, 64)
grid = mj.overlap_landscape(state, alphas, betas)
with open("ghz3_landscape.csv", "w") as fh:
    fh.write(landscape_to_csv(alphas, betas, grid))
print("\nWrote ghz3_landscape.csv "
      f"({grid.size} samples, max F = {grid.max():.6f} on the grid)")
