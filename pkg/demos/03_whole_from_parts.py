"""How much of the whole state do the marginals know?

GHZ states are the famous exception: their parts carry no trace of the
relative phase.  The two-distinct-spinor family and its non-symmetric
generalization sit at the other extreme: two of the (N-1)-qubit marginals
already pin the whole state down, and the reconstruction here finds it by
fitting the purification gauge.
"""

import math

import numpy as np

import majorep as mj

eta = mj.SymmetricState(3, np.array([0, 1, 1, 0]) / np.sqrt(2))
ghz = mj.ghz_state(3)

print("Witness values for GHZ vs the W + Wbar superposition")
for name, s in [("GHZ", ghz), ("eta", eta)]:
    full = mj.expand_to_full(s)
    pair = mj.concurrence(mj.rdm_full(full, (1, 2)))
    tangle = mj.three_tangle(full)
    print(f"  {name}: pair concurrence = {pair:.6f}, three-tangle = {tangle:.6f}")

print("\nRank of the (N-1)-qubit marginal of eta:",
      mj.rdm_symmetric(eta, 2).rank())

# Reconstruction of a two-spinor-family state from two marginals
s = mj.dnk_state(6, 2, 0.6, 0.8j)
full = mj.expand_to_full(s)
rho_a = mj.rdm_full(full, (1, 2, 3, 4, 5))
rho_b = mj.rdm_full(full, (2, 3, 4, 5, 6))
result = mj.reconstruct_from_two_marginals(rho_a, rho_b)
print("\nTwo-spinor state of 6 qubits from two 5-qubit marginals:")
print("  status:", result.status)
print("  fidelity to the original:", f"{mj.fidelity(result.state, full):.12f}")

# The same procedure on GHZ cannot decide the phase
full = mj.expand_to_full(mj.ghz_state(4))
result = mj.reconstruct_from_two_marginals(
    mj.rdm_full(full, (1, 2, 3)), mj.rdm_full(full, (2, 3, 4))
)
print("\nGHZ of 4 qubits from two 3-qubit marginals:")
print("  status:", result.status, f"({len(result.candidates)} distinct fits found)")

# A non-symmetric generalized state is also recovered
n, k = 5, 2
rng = np.random.default_rng(3)
alphas = rng.standard_normal(k + 1) + 1j * rng.standard_normal(k + 1)
a = [rng.standard_normal(math.comb(n, r)) + 1j * rng.standard_normal(math.comb(n, r))
     for r in range(k + 1)]
print("\nGeneralized (non-symmetric) state, uniqueness conditions:",
      mj.uniqueness_conditions(n, k, a))
g = mj.generalized_dicke_state(n, k, alphas, a)
result = mj.reconstruct_from_two_marginals(
    mj.rdm_full(g, (1, 2, 3, 4)), mj.rdm_full(g, (2, 3, 4, 5))
)
print("  status:", result.status,
      " fidelity:", f"{mj.fidelity(result.state, g):.12f}")

# Four qubits where three marginals agree and the fourth differs
chi1 = np.zeros(16, dtype=complex)
chi1[[0b0000, 0b0001, 0b1111]] = 1 / np.sqrt(3)
chi2 = chi1.copy()
chi2[0b1111] *= -1
f1, f2 = mj.FullState(4, chi1), mj.FullState(4, chi2)
print("\nA pair of states sharing three of their four 3-qubit marginals:")
for keep in [(2, 3, 4), (1, 3, 4), (1, 2, 4), (1, 2, 3)]:
    diff = np.linalg.norm(mj.rdm_full(f1, keep).mat - mj.rdm_full(f2, keep).mat)
    print(f"  keep {keep}: marginal difference {diff:.2e}")

# Direct falsification search over the full state space
targets = [((1, 2), mj.rdm_full(mj.expand_to_full(eta), (1, 2))),
           ((1, 3), mj.rdm_full(mj.expand_to_full(eta), (1, 3)))]
matches = mj.marginal_match_search(targets, 3, restarts=24)
print(f"\nStates matching two 2-qubit marginals of eta: {len(matches)} class(es),"
      f" fidelity {mj.fidelity(matches[0], mj.expand_to_full(eta)):.9f}")
