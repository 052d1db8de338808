"""Reference constellation data for the canonical two- and three-qubit states.

Each row records a symmetric state, its root polynomial (up to scale), the
root multiset with multiplicities, and the symmetrized computational-basis
expansion.  ``check_rows`` recomputes everything and diffs against the
embedded values; it backs the ``table1`` CLI command.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import SymmetricState, canonical_distance, expand_to_full
from .stellar import (
    MajoranaConstellation,
    ProjectiveRoot,
    majorana_points,
    majorana_polynomial,
    state_from_constellation,
)

_S2 = 1.0 / math.sqrt(2.0)
_S3 = 1.0 / math.sqrt(3.0)
_S6 = 1.0 / math.sqrt(6.0)
_PI = math.pi


@dataclass(frozen=True)
class ReferenceRow:
    name: str
    n: int
    coeffs: tuple            # weight-basis amplitudes
    polynomial: tuple        # expected coefficients, ascending powers, up to scale
    points: tuple            # (alpha, beta, multiplicity); beta = pi is infinity
    amplitudes: dict         # bitstring -> amplitude of the symmetrized expansion


ROWS = (
    ReferenceRow(
        "bell_plus", 2, (_S2, 0, _S2),
        (1, 0, 1),
        ((_PI / 2, _PI / 2, 1), (3 * _PI / 2, _PI / 2, 1)),
        {"00": _S2, "11": _S2},
    ),
    ReferenceRow(
        "bell_minus", 2, (_S2, 0, -_S2),
        (-1, 0, 1),
        ((0.0, _PI / 2, 1), (_PI, _PI / 2, 1)),
        {"00": _S2, "11": -_S2},
    ),
    ReferenceRow(
        "triplet_zero", 2, (0, 1, 0),
        (0, 1, 0),
        ((0.0, 0.0, 1), (0.0, _PI, 1)),
        {"01": _S2, "10": _S2},
    ),
    ReferenceRow(
        "ghz3_plus", 3, (_S2, 0, 0, _S2),
        (1, 0, 0, -1),
        ((0.0, _PI / 2, 1), (2 * _PI / 3, _PI / 2, 1), (4 * _PI / 3, _PI / 2, 1)),
        {"000": _S2, "111": _S2},
    ),
    ReferenceRow(
        "ghz3_minus", 3, (_S2, 0, 0, -_S2),
        (1, 0, 0, 1),
        ((_PI / 3, _PI / 2, 1), (_PI, _PI / 2, 1), (5 * _PI / 3, _PI / 2, 1)),
        {"000": _S2, "111": -_S2},
    ),
    ReferenceRow(
        "w_superposition_plus", 3, (0, _S2, _S2, 0),
        (0, -1, 1, 0),
        ((0.0, _PI / 2, 1), (0.0, 0.0, 1), (0.0, _PI, 1)),
        {"001": _S6, "010": _S6, "100": _S6, "011": _S6, "101": _S6, "110": _S6},
    ),
    ReferenceRow(
        "w_superposition_minus", 3, (0, _S2, -_S2, 0),
        (0, 1, 1, 0),
        ((_PI, _PI / 2, 1), (0.0, 0.0, 1), (0.0, _PI, 1)),
        {"001": _S6, "010": _S6, "100": _S6, "011": -_S6, "101": -_S6, "110": -_S6},
    ),
    ReferenceRow(
        "dicke_3_2", 3, (0, 0, 1, 0),
        (0, 1, 0, 0),
        ((0.0, 0.0, 1), (0.0, _PI, 2)),
        {"011": _S3, "101": _S3, "110": _S3},
    ),
)


def _expected_amp(row: ReferenceRow) -> np.ndarray:
    amp = np.zeros(2**row.n, dtype=complex)
    for bits, value in row.amplitudes.items():
        amp[int(bits, 2)] = value
    return amp


def check_row(row: ReferenceRow, tol: float = 1e-9) -> dict:
    """Recompute one row; returns per-item errors and an overall flag."""
    state = SymmetricState(row.n, np.asarray(row.coeffs, dtype=complex))

    poly = majorana_polynomial(state)
    poly_err = canonical_distance(poly, np.asarray(row.polynomial, dtype=complex))

    expected_points = tuple(
        (ProjectiveRoot.from_angles(a, b), m) for a, b, m in row.points
    )
    expected_const = MajoranaConstellation(row.n, expected_points)
    const = majorana_points(state)
    try:
        roots_err = const.matched_distance(expected_const)
    except ValueError:
        roots_err = math.inf
    mults_ok = const.multiplicities == expected_const.multiplicities

    rebuilt = expand_to_full(state_from_constellation(const))
    amp_err = canonical_distance(rebuilt.amp, _expected_amp(row))
    direct_err = canonical_distance(expand_to_full(state).amp, _expected_amp(row))

    ok = poly_err <= tol and roots_err <= tol and mults_ok and amp_err <= tol and direct_err <= tol
    return {
        "name": row.name,
        "ok": ok,
        "poly_err": poly_err,
        "roots_err": roots_err,
        "mults_ok": mults_ok,
        "expansion_err": max(amp_err, direct_err),
    }


def check_rows(tol: float = 1e-9) -> list[dict]:
    return [check_row(row, tol) for row in ROWS]
