"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.
"""

import itertools
import math
import time

import numpy as np

import majorep as mj
from majorep.cli import main as cli_main
from majorep.table1 import check_rows
from oracles import brute_symmetrize, dense_partial_trace

OMEGA = np.exp(2j * np.pi / 3)


def report(name, ok, elapsed, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"{status}  {name}  ({elapsed:.2f}s)  {detail}")
    assert ok, f"{name}: {detail}"


def eta():
    return mj.SymmetricState(3, np.array([0.0, 1.0, 1.0, 0.0]) / math.sqrt(2.0))


def test_criterion_1_reference_table():
    start = time.perf_counter()
    results = check_rows(tol=1e-9)
    elapsed = time.perf_counter() - start
    worst = max(
        max(r["poly_err"], r["roots_err"], r["expansion_err"]) for r in results
    )
    ok = all(r["ok"] for r in results) and elapsed < 1.0
    assert cli_main(["table1"]) == 0
    report("criterion 1: reference-table reproduction", ok, elapsed, f"worst err {worst:.2e}")


def test_criterion_2_roundtrip_thousand_states():
    rng = np.random.default_rng(42)
    start = time.perf_counter()
    worst = 0.0
    count = 0
    for i in range(800):
        n = 2 + i % 9
        s = mj.random_symmetric_state(n, rng)
        worst = max(worst, mj.state_from_constellation(mj.majorana_points(s)).distance(s))
        count += 1
    for i in range(100):
        n = 2 + i % 9
        s = mj.random_symmetric_state(n, rng, zero_head=1 + i % 2)
        worst = max(worst, mj.state_from_constellation(mj.majorana_points(s)).distance(s))
        count += 1
    for i in range(100):
        n = 2 + i % 9
        s = mj.random_symmetric_state(n, rng, zero_tail=1 + i % 2)
        worst = max(worst, mj.state_from_constellation(mj.majorana_points(s)).distance(s))
        count += 1
    elapsed = time.perf_counter() - start
    ok = count == 1000 and worst <= 1e-9 and elapsed < 10.0
    report("criterion 2: 1000-state constellation roundtrip", ok, elapsed,
           f"worst distance {worst:.2e}")


def test_criterion_3_slocc_invariance():
    rng = np.random.default_rng(43)
    start = time.perf_counter()
    ok = True
    for n in range(3, 9):
        s = mj.random_symmetric_state(n, rng)
        before = mj.classify(s)
        for _ in range(100):
            a = mj.random_ilo(rng)
            if mj.classify(mj.apply_ilo(s, a)) != before:
                ok = False
    explicit = np.array([[1.0, OMEGA], [1.0, OMEGA**2]])
    fid = mj.fidelity(mj.apply_ilo(eta(), explicit), mj.ghz_state(3))
    ok = ok and fid >= 1 - 1e-9
    elapsed = time.perf_counter() - start
    report("criterion 3: SLOCC family invariance", ok, elapsed,
           f"eta->GHZ fidelity deficit {1 - fid:.2e}")


def test_criterion_4_entanglement_values():
    start = time.perf_counter()
    ok = True
    detail = []
    for n in range(2, 11):
        eg = mj.geometric_measure(mj.ghz_state(n)).eg
        if abs(eg - 0.5) > 1e-6:
            ok = False
            detail.append(f"GHZ{n} eg={eg}")
    w_eg = mj.geometric_measure(mj.w_state(3)).eg
    ok &= abs(w_eg - 5 / 9) <= 1e-6
    bell_eg = mj.geometric_measure(mj.dicke_state(2, 1)).eg
    ok &= abs(bell_eg - 0.5) <= 1e-6
    worst_dicke = 0.0
    worst_angle = 0.0
    for n in range(2, 11):
        for l in range(n + 1):
            rep = mj.geometric_measure(mj.dicke_state(n, l))
            exact, cpp = mj.dicke_closed_form(n, l)
            worst_dicke = max(worst_dicke, abs(rep.eg - exact))
            if 0 < l < n:
                target = math.sqrt((n - l) / l)
                best = min(
                    abs(math.tan(p.beta / 2) - target) for p in rep.cpps
                )
                worst_angle = max(worst_angle, best)
    ok &= worst_dicke <= 1e-6 and worst_angle <= 1e-5
    elapsed = time.perf_counter() - start
    ok &= elapsed < 30.0
    report("criterion 4: geometric-measure values", ok, elapsed,
           f"worst dicke diff {worst_dicke:.2e}, worst CPP angle {worst_angle:.2e} "
           + " ".join(detail))


def test_criterion_5_witness_values():
    start = time.perf_counter()
    ghz_full = mj.expand_to_full(mj.ghz_state(3))
    eta_full = mj.expand_to_full(eta())
    ok = True
    for keep in [(1, 2), (1, 3), (2, 3)]:
        ok &= mj.concurrence(mj.rdm_full(ghz_full, keep)) <= 1e-9
        ok &= abs(mj.concurrence(mj.rdm_full(eta_full, keep)) - 1 / 3) <= 1e-8
    ok &= abs(mj.three_tangle(ghz_full) - 1.0) <= 1e-8
    ok &= abs(mj.three_tangle(eta_full) - 1 / 3) <= 1e-8
    elapsed = time.perf_counter() - start
    report("criterion 5: concurrence and tangle witnesses", ok, elapsed)


def test_criterion_6_reconstruction():
    rng = np.random.default_rng(44)
    start = time.perf_counter()
    ok = True
    worst_infidelity = 0.0

    def marginals(full):
        n = full.n
        return (
            mj.rdm_full(full, tuple(range(1, n))),
            mj.rdm_full(full, tuple(range(2, n + 1))),
        )

    combos = [(n, k) for n in range(4, 9) for k in range(1, n // 2 + 1)]
    trials = list(itertools.islice(itertools.cycle(combos), 200))
    for idx, (n, k) in enumerate(trials):
        z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        z /= np.linalg.norm(z)
        if abs(z[1]) < 0.05:
            z = np.array([0.6, 0.8])
        full = mj.expand_to_full(mj.dnk_state(n, k, z[0], z[1]))
        result = mj.reconstruct_from_two_marginals(*marginals(full), seed=idx)
        if result.is_ambiguous:
            ok = False
            continue
        worst_infidelity = max(worst_infidelity, 1 - mj.fidelity(result.state, full))

    for idx in range(50):
        n = int(rng.integers(4, 9))
        k = int(rng.integers(1, n // 2 + 1))
        alphas = rng.standard_normal(k + 1) + 1j * rng.standard_normal(k + 1)
        a = [
            rng.standard_normal(math.comb(n, r)) + 1j * rng.standard_normal(math.comb(n, r))
            for r in range(k + 1)
        ]
        if not mj.uniqueness_conditions(n, k, a):
            ok = False
            continue
        full = mj.generalized_dicke_state(n, k, alphas, a)
        result = mj.reconstruct_from_two_marginals(*marginals(full), seed=1000 + idx)
        if result.is_ambiguous:
            ok = False
            continue
        worst_infidelity = max(worst_infidelity, 1 - mj.fidelity(result.state, full))

    ok &= worst_infidelity <= 1e-8

    for n in range(3, 9):
        result = mj.reconstruct_from_two_marginals(
            *marginals(mj.expand_to_full(mj.ghz_state(n))), seed=n
        )
        ok &= result.is_ambiguous

    chi1 = np.zeros(16, dtype=complex)
    chi1[[0b0000, 0b0001, 0b1111]] = 1 / math.sqrt(3)
    chi2 = chi1.copy()
    chi2[0b1111] *= -1
    f1, f2 = mj.FullState(4, chi1), mj.FullState(4, chi2)
    shared = [(2, 3, 4), (1, 3, 4), (1, 2, 4)]
    for keep in shared:
        diff = np.linalg.norm(mj.rdm_full(f1, keep).mat - mj.rdm_full(f2, keep).mat)
        ok &= diff <= 1e-10
    diff = np.linalg.norm(mj.rdm_full(f1, (1, 2, 3)).mat - mj.rdm_full(f2, (1, 2, 3)).mat)
    ok &= diff >= 0.1

    elapsed = time.perf_counter() - start
    ok &= elapsed < 60.0
    report("criterion 6: two-marginal reconstruction", ok, elapsed,
           f"worst infidelity {worst_infidelity:.2e}")


def test_criterion_7_oracle_equivalence():
    rng = np.random.default_rng(45)
    start = time.perf_counter()
    worst_rdm = 0.0
    for n in range(2, 9):
        s = mj.random_symmetric_state(n, rng)
        rho = np.outer(mj.expand_to_full(s).amp, mj.expand_to_full(s).amp.conj())
        for k in range(1, n):
            sym = mj.to_computational(mj.rdm_symmetric(s, k)).mat
            for keep in itertools.combinations(range(1, n + 1), k):
                worst_rdm = max(
                    worst_rdm, float(np.max(np.abs(sym - dense_partial_trace(rho, n, keep))))
                )
    worst_sym = 0.0
    for n in range(2, 7):
        spinors = [
            mj.Spinor.from_angles(rng.uniform(0, 2 * np.pi), rng.uniform(0, np.pi))
            for _ in range(n)
        ]
        fast = mj.symmetrize(spinors)
        dense = brute_symmetrize([sp.vec() for sp in spinors])
        slow, _ = mj.project_to_symmetric(mj.FullState(n, dense))
        worst_sym = max(worst_sym, fast.distance(slow))
    elapsed = time.perf_counter() - start
    ok = worst_rdm <= 1e-10 and worst_sym <= 1e-9
    report("criterion 7: oracle equivalence", ok, elapsed,
           f"rdm {worst_rdm:.2e}, symmetrize {worst_sym:.2e}")
