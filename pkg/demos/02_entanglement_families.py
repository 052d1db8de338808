"""Entanglement families from point multiplicities.

Identical invertible operations on every qubit move the constellation by a
Mobius map, so the sorted multiplicities (the degeneracy configuration) are
an SLOCC family label.  The script classifies the standard states, converts
the W superposition into GHZ with an explicit local operation, and shows
that random operations never change the label.
"""

import numpy as np

import majorep as mj

print("Classification of standard states")
for name, state in [
    ("product |0...0>", mj.dicke_state(5, 0)),
    ("W of 5 qubits", mj.w_state(5)),
    ("Dicke weight 2 of 5", mj.dicke_state(5, 2)),
    ("GHZ of 5 qubits", mj.ghz_state(5)),
]:
    config = mj.classify(state)
    print(f"  {name:<22} -> {config.label()}  (diversity {config.diversity})")

# GHZ and the W + Wbar superposition sit in the same family and are in fact
# connected by one identical invertible operation on all three qubits.
eta = mj.SymmetricState(3, np.array([0, 1, 1, 0]) / np.sqrt(2))
omega = np.exp(2j * np.pi / 3)
a = np.array([[1, omega], [1, omega**2]])
image = mj.apply_ilo(eta, a)
print("\n(W + Wbar)/sqrt2 under A = [[1, w],[1, w^2]]:")
print("  family of eta:    ", mj.classify(eta).label())
print("  family of GHZ:    ", mj.classify(mj.ghz_state(3)).label())
print("  fidelity to GHZ:  ", f"{mj.fidelity(image, mj.ghz_state(3)):.12f}")
print("  same_family(eta, GHZ):", mj.same_family(eta, mj.ghz_state(3)))

# Families are invariant under random invertible maps
rng = np.random.default_rng(0)
state = mj.dicke_state(6, 2)
before = mj.classify(state)
unchanged = sum(
    mj.classify(mj.apply_ilo(state, mj.random_ilo(rng))) == before for _ in range(50)
)
print(f"\nDicke(6,2) kept {before.label()} under {unchanged}/50 random operations")

# One family per partition of N
print("\nFamilies realized for N = 4 (one per partition):")
sites = [0.4 + 0.2j, -1.3 + 0.7j, 0.9 - 1.0j, -0.2 - 0.6j]
for part in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]:
    points = tuple(
        (mj.ProjectiveRoot.from_complex(sites[i]), m) for i, m in enumerate(part)
    )
    s = mj.state_from_constellation(mj.MajoranaConstellation(4, points))
    print(f"  built {part} -> classified {mj.classify(s).label()}")
