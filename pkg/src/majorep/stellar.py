"""Majorana constellations: root extraction, reconstruction, collective rotations.

A symmetric N-qubit state with weight coefficients c_l is encoded by the
polynomial

    P(z) = sum_m (-1)^m sqrt(C(N, m)) c_{N-m} z^m,

whose roots z = tan(beta/2) e^{i alpha} are the orientations of the N
constituent spinors (z = 0 is |0>, the north pole).  When deg P = D < N the
remaining N - D spinors sit at the point at infinity (|1>, beta = pi), as the
inverted-coordinate polynomial shows.  Reconstruction multiplies the root
factors back together; collective single-qubit maps act on the coefficients
through the exact Mobius substitution, so degenerate roots and roots at
infinity never need to be located to rotate a state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .states import (
    DEFAULT_TOL,
    Spinor,
    SymmetricState,
    binom,
    canonical_distance,
)

CLUSTER_TOL = 1e-6
DEGREE_RTOL = 1e-12
REBUILD_TOL = 1e-10


@dataclass(frozen=True)
class ProjectiveRoot:
    """Point (z : w) of the projective line; w = 0 is the point at infinity.

    Stored with the larger-magnitude component scaled to 1.
    """

    z: complex
    w: complex

    def __post_init__(self):
        z, w = complex(self.z), complex(self.w)
        if z == 0 and w == 0:
            raise ValueError("(0 : 0) is not a projective point")
        if abs(z) >= abs(w):
            z, w = 1.0 + 0.0j, w / z
        else:
            z, w = z / w, 1.0 + 0.0j
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "w", w)

    @classmethod
    def from_complex(cls, value: complex) -> "ProjectiveRoot":
        return cls(complex(value), 1.0)

    @classmethod
    def infinity(cls) -> "ProjectiveRoot":
        return cls(1.0, 0.0)

    @classmethod
    def zero(cls) -> "ProjectiveRoot":
        return cls(0.0, 1.0)

    @classmethod
    def from_angles(cls, alpha: float, beta: float) -> "ProjectiveRoot":
        return cls(math.sin(beta / 2) * np.exp(1j * alpha), math.cos(beta / 2))

    @property
    def is_infinity(self) -> bool:
        return self.w == 0

    def value(self) -> complex:
        """Affine coordinate z/w; raises at infinity."""
        if self.is_infinity:
            raise ValueError("point at infinity has no affine coordinate")
        return self.z / self.w

    def angles(self) -> tuple[float, float]:
        """(alpha, beta) of the spinor this root encodes; alpha = 0 at the poles."""
        beta = 2.0 * math.atan2(abs(self.z), abs(self.w))
        if abs(self.z) < 1e-15 or abs(self.w) < 1e-15:
            return 0.0, beta
        alpha = float(np.angle(self.z * np.conj(self.w))) % (2 * math.pi)
        return alpha, beta

    def spinor(self) -> Spinor:
        alpha, beta = self.angles()
        return Spinor.from_angles(alpha, beta)

    def xyz(self) -> np.ndarray:
        """Cartesian point on the unit sphere."""
        alpha, beta = self.angles()
        return np.array(
            [
                math.sin(beta) * math.cos(alpha),
                math.sin(beta) * math.sin(alpha),
                math.cos(beta),
            ]
        )


def chordal_distance(p: ProjectiveRoot, q: ProjectiveRoot) -> float:
    """Scale-free metric |z_p w_q - z_q w_p| / (|p| |q|); treats infinity symmetrically."""
    num = abs(p.z * q.w - q.z * p.w)
    return num / (math.hypot(abs(p.z), abs(p.w)) * math.hypot(abs(q.z), abs(q.w)))


def _root_from_xyz(v: np.ndarray) -> ProjectiveRoot:
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise ValueError("degenerate direction")
    x, y, z = v / norm
    beta = math.acos(max(-1.0, min(1.0, z)))
    alpha = math.atan2(y, x)
    return ProjectiveRoot.from_angles(alpha, beta)


@dataclass(frozen=True)
class MajoranaConstellation:
    """Unordered multiset of projective points with multiplicities summing to n."""

    n: int
    points: tuple

    def __post_init__(self):
        pts = tuple((p, int(m)) for p, m in self.points)
        total = sum(m for _, m in pts)
        if total != self.n:
            raise ValueError(f"multiplicities sum to {total}, expected {self.n}")
        object.__setattr__(self, "points", pts)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(sorted((m for _, m in self.points), reverse=True))

    def spinors(self) -> list[Spinor]:
        """Constituent spinors, each repeated by its multiplicity."""
        out = []
        for p, m in self.points:
            out.extend([p.spinor()] * m)
        return out

    def matched_distance(self, other: "MajoranaConstellation") -> float:
        """Max chordal distance under the best pairing of expanded point lists."""
        mine = [p for p, m in self.points for _ in range(m)]
        theirs = [p for p, m in other.points for _ in range(m)]
        if len(mine) != len(theirs):
            raise ValueError("point counts differ")
        worst = 0.0
        remaining = list(theirs)
        for p in mine:
            dists = [chordal_distance(p, q) for q in remaining]
            j = int(np.argmin(dists))
            worst = max(worst, dists[j])
            remaining.pop(j)
        return worst


def majorana_polynomial(s: SymmetricState) -> np.ndarray:
    """Coefficients p_0 .. p_N (ascending powers) of the root polynomial."""
    n = s.n
    m = np.arange(n + 1)
    signs = (-1.0) ** m
    weights = np.array([math.sqrt(binom(n, int(k))) for k in m])
    return signs * weights * s.c[::-1]


def _newton_polish(coeffs: np.ndarray, z: complex, max_move: float = math.inf,
                   steps: int = 20) -> complex:
    """Newton refinement on a simple root, keeping the best residual seen.

    Total displacement is capped by ``max_move``: inside the noise floor of a
    nearly multiple root the residual keeps "improving" along an aimless
    walk, and the cap stops that walk from leaving the root's neighborhood.
    """
    dcoeffs = npoly.polyder(coeffs)
    start = z
    best = z
    p0 = abs(npoly.polyval(z, coeffs))
    for _ in range(steps):
        p = complex(npoly.polyval(z, coeffs))
        dp = complex(npoly.polyval(z, dcoeffs))
        if dp == 0:
            break
        step = p / dp
        if not np.isfinite(step) or abs(step) > 1.0 + abs(z):
            break
        z = z - step
        if abs(z - start) > max_move:
            break
        pn = abs(npoly.polyval(z, coeffs))
        if pn < p0:
            best, p0 = z, pn
        if abs(step) < 1e-15 * (1.0 + abs(z)):
            break
    return best


def _refine_multiple_root(core: np.ndarray, z_values, mult: int) -> complex:
    """Locate an m-fold root of ``core`` near the scattered estimates.

    An m-fold root of P is a simple, well-conditioned root of the (m-1)-th
    derivative, so Newton on that derivative recovers it to machine precision
    even though the individual eigenvalue estimates scatter like eps^(1/m).
    Clusters sitting outside the unit disk are refined in the inverted
    coordinate.  Falls back to the plain mean if the iteration runs away.
    """
    start = complex(np.mean(np.asarray(z_values)))
    if mult == 1:
        return _newton_polish(core, start)
    diam = max(
        (abs(a - b) for a in z_values for b in z_values), default=0.0
    )
    if abs(start) <= 1.0:
        refined = _newton_polish(npoly.polyder(core, mult - 1), start)
    else:
        rev = core[::-1]
        w = _newton_polish(npoly.polyder(rev, mult - 1), 1.0 / start)
        if w == 0:
            return start
        refined = 1.0 / w
    if abs(refined - start) > 4.0 * diam + 1e-6:
        return start
    return refined


def _cluster_groups(points: list[ProjectiveRoot], tol: float) -> list[list[ProjectiveRoot]]:
    """Single-linkage groups under the chordal metric."""
    k = len(points)
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            if chordal_distance(points[i], points[j]) <= tol:
                parent[find(i)] = find(j)

    groups: dict[int, list[ProjectiveRoot]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(points[i])
    return list(groups.values())


@dataclass(frozen=True)
class _PolyContext:
    """Root-finding context: full coefficients plus the detected degree span."""

    p: np.ndarray
    low: int
    deg: int
    n: int

    @property
    def core(self) -> np.ndarray:
        return self.p[self.low : self.deg + 1]

    @property
    def low_chart(self) -> np.ndarray:
        """Coefficients with sub-threshold leading digits kept, zeros stripped."""
        return self.p[: self.deg + 1]

    @property
    def inverted_chart(self) -> np.ndarray:
        """Coefficients in w = 1/z with sub-threshold trailing digits kept."""
        return self.p[self.low :][::-1]


def _refine_mixed_group(members: list[ProjectiveRoot], ctx: _PolyContext) -> ProjectiveRoot:
    """Representative for a scattered group touching a structural point.

    A group absorbing the forced infinity points is a single multiple root
    near w = 0 of the inverted-coordinate polynomial (whose sub-threshold
    digits still carry its position); symmetrically for forced zeros.
    """
    mult = len(members)
    if any(p.is_infinity for p in members):
        w_values = [0.0 if p.is_infinity else 1.0 / p.value() for p in members]
        coeffs = ctx.inverted_chart
        start = complex(np.mean(np.asarray(w_values)))
        w = _refine_multiple_root(coeffs, w_values, mult) if len(coeffs) >= 2 else start
        return ProjectiveRoot(1.0, w)
    z_values = [p.value() for p in members]
    coeffs = ctx.low_chart
    z = _refine_multiple_root(coeffs, z_values, mult) if len(coeffs) >= 2 else 0.0
    return ProjectiveRoot.from_complex(z)


def _cluster_representatives(
    groups: list[list[ProjectiveRoot]], ctx: _PolyContext
) -> list[tuple[ProjectiveRoot, int]]:
    """One refined representative per group.

    Groups consisting of identical structural points (exact zeros or the
    point at infinity) pass through untouched; scattered groups are refined
    against the core polynomial at their combined multiplicity.  Singleton
    refinement is displacement-capped by the distance to the nearest other
    group so it cannot wander across basins.
    """
    core = ctx.core
    finite_values = [
        p.value() for g in groups for p in g if not p.is_infinity
    ]
    out = []
    for members in groups:
        first = members[0]
        if all(chordal_distance(first, p) == 0.0 for p in members[1:]):
            out.append((first, len(members)))
            continue
        if any(p.is_infinity or p.z == 0 for p in members):
            out.append((_refine_mixed_group(members, ctx), len(members)))
            continue
        values = [p.value() for p in members]
        if len(members) == 1:
            z0 = values[0]
            gaps = [abs(z0 - v) for v in finite_values if v != z0]
            cap = 0.25 * min(gaps) if gaps else 0.1
            z = _newton_polish(core, z0, max_move=min(cap, 0.1))
        else:
            z = _refine_multiple_root(core, values, len(members))
        out.append((ProjectiveRoot.from_complex(z), len(members)))
    return out


def _blob_split_candidates(core: np.ndarray, values, mult: int):
    """Two-root splittings of an over-merged cluster.

    When two multiple roots sit closer than their eigenvalue scatter, no
    clustering tolerance separates them; but an m1-fold root is still an
    exact simple root of the (m1-1)-th derivative, so candidate positions for
    every split m = m1 + m2 are read off the derivative root sets.
    """
    zc = complex(np.mean(np.asarray(values)))
    spread = max((abs(v - zc) for v in values), default=0.1)
    move_cap = 2.0 * spread + 1e-6
    candidates = []
    for m1 in range(mult - 1, (mult + 1) // 2 - 1, -1):
        m2 = mult - m1
        d1 = npoly.polyder(core, m1 - 1)
        if len(d1) < 2:
            continue
        r1 = np.roots(d1[::-1])
        if r1.size == 0:
            continue
        # an m1-fold root appears among the d1 roots, but interior critical
        # points can sit closer to the blob centroid; try every distinct one
        z1_candidates: list[complex] = []
        for z1_raw in sorted((complex(z) for z in r1), key=lambda z: abs(z - zc)):
            if abs(z1_raw - zc) > 3.0 * spread + 1e-3:
                break
            z1 = _newton_polish(d1, z1_raw, max_move=move_cap)
            if all(abs(z1 - q) > 1e-8 for q in z1_candidates):
                z1_candidates.append(z1)
        for z1 in z1_candidates:
            quotient = core
            for _ in range(m1):
                quotient, _rem = npoly.polydiv(quotient, np.array([-z1, 1.0 + 0.0j]))
            if len(quotient) < 2:
                continue
            r2 = np.roots(quotient[::-1])
            if r2.size == 0:
                continue
            near = sorted((complex(z) for z in r2), key=lambda z: abs(z - zc))[:m2]
            z2 = complex(np.mean(near))
            if m2 > 1:
                z2 = _newton_polish(npoly.polyder(core, m2 - 1), z2, max_move=move_cap)
            else:
                z2 = _newton_polish(core, z2, max_move=1e-3)
            if abs(z2 - z1) > 1e-8:
                candidates.append(((z1, m1), (z2, m2)))
    return candidates


def _coef_map(n: int) -> np.ndarray:
    m = np.arange(n + 1)
    return ((-1.0) ** m) / np.array([math.sqrt(binom(n, int(k))) for k in m])


def _joint_polish_positions(n: int, fixed, free, target_c, iters: int = 15):
    """Gauss-Newton refinement of free root positions against the target.

    Per-root derivative refinement bottoms out at eps/sep^m when multiple
    roots sit close together, but the joint positions-to-coefficients map
    stays well conditioned.  The residual c(z)/<t, c(z)> - t is holomorphic
    in the positions, so its Jacobian is exact (one polynomial division per
    root) and the least-squares iteration reaches machine precision.

    ``fixed`` are (ProjectiveRoot, mult) pairs held in place; ``free`` are
    (complex position, mult) pairs to refine.  Returns refined positions and
    the final canonical residual norm.
    """
    weights = _coef_map(n)
    base = np.array([1.0 + 0.0j])
    for root, mult in fixed:
        if root.is_infinity:
            continue
        factor = np.array([-root.value(), 1.0 + 0.0j])
        for _ in range(mult):
            base = npoly.polymul(base, factor)
    mults = [m for _, m in free]
    zs = np.array([z for z, _ in free], dtype=complex)
    t = target_c

    def coefs_and_derivs(positions):
        poly = base
        for z, mult in zip(positions, mults):
            factor = np.array([-z, 1.0 + 0.0j])
            for _ in range(mult):
                poly = npoly.polymul(poly, factor)
        p = np.zeros(n + 1, dtype=complex)
        p[: len(poly)] = poly
        c = (weights * p)[::-1]
        derivs = []
        for z, mult in zip(positions, mults):
            quotient, _ = npoly.polydiv(poly, np.array([-z, 1.0 + 0.0j]))
            dp = np.zeros(n + 1, dtype=complex)
            dp[: len(quotient)] = -mult * quotient
            derivs.append((weights * dp)[::-1])
        return c, derivs

    def canonical_norm(positions):
        if not np.all(np.isfinite(positions)):
            return math.inf
        c, _ = coefs_and_derivs(positions)
        if not np.all(np.isfinite(c)) or np.linalg.norm(c) == 0.0:
            return math.inf
        return canonical_distance(c, t)

    best = zs.copy()
    best_norm = canonical_norm(zs)
    for _ in range(iters):
        if not np.all(np.isfinite(zs)):
            break
        c, derivs = coefs_and_derivs(zs)
        norm_c = np.linalg.norm(c)
        if not np.isfinite(norm_c) or norm_c == 0.0:
            break
        alpha = np.vdot(t, c)
        if abs(alpha) < 1e-12 * norm_c:
            break
        r = c / alpha - t
        cols = []
        for d in derivs:
            cols.append(d / alpha - c * np.vdot(t, d) / alpha**2)
        jc = np.column_stack(cols)
        jac = np.block([[jc.real, -jc.imag], [jc.imag, jc.real]])
        rhs = -np.concatenate([r.real, r.imag])
        sol, *_ = np.linalg.lstsq(jac, rhs, rcond=None)
        if not np.all(np.isfinite(sol)):
            break
        k = len(zs)
        step = sol[:k] + 1j * sol[k:]
        if np.max(np.abs(step)) > 10.0 * (1.0 + np.max(np.abs(zs))):
            break
        zs = zs + step
        norm = canonical_norm(zs)
        if norm < best_norm:
            best, best_norm = zs.copy(), norm
        if norm < 1e-15 or np.max(np.abs(step)) < 1e-15:
            break
    return best, float(best_norm)


def _polish_constellation(const: MajoranaConstellation, s: SymmetricState):
    """Jointly refine every finite non-structural point of a constellation."""
    fixed = []
    free = []
    for root, mult in const.points:
        if root.is_infinity or root.z == 0:
            fixed.append((root, mult))
        else:
            free.append((root.value(), mult))
    if not free:
        return const, canonical_distance(state_from_constellation(const).c, s.c)
    zs, norm = _joint_polish_positions(const.n, fixed, free, s.c)
    points = tuple(fixed) + tuple(
        (ProjectiveRoot.from_complex(complex(z)), m) for z, (_, m) in zip(zs, free)
    )
    return MajoranaConstellation(const.n, points), norm


def _derivative_root_candidates(core, mult, zc, spread):
    """Distinct roots of the (mult-1)-th derivative near the blob center."""
    d = npoly.polyder(core, mult - 1)
    if len(d) < 2:
        return []
    roots = np.roots(d[::-1])
    out: list[complex] = []
    for z in sorted((complex(r) for r in roots), key=lambda z: abs(z - zc)):
        if abs(z - zc) > 3.0 * spread + 1e-3:
            break
        if all(abs(z - q) > 1e-8 for q in out):
            out.append(z)
        if len(out) == 4:
            break
    return out


def _three_part_partitions(m):
    for m1 in range(m - 2, 0, -1):
        for m2 in range(min(m1, m - m1 - 1), 0, -1):
            m3 = m - m1 - m2
            if 1 <= m3 <= m2:
                yield m1, m2, m3


def _salvage_split3(groups, ctx: _PolyContext, s: SymmetricState):
    """Last resort: three multiple roots whose scatters all interpenetrate."""
    n = ctx.n
    blob_idx = [
        i
        for i, g in enumerate(groups)
        if len(g) >= 3 and all((not p.is_infinity) and p.z != 0 for p in g)
    ]
    if len(blob_idx) != 1:
        return None
    i = blob_idx[0]
    others = [groups[j] for j in range(len(groups)) if j != i]
    fixed = tuple(_cluster_representatives(others, ctx)) if others else ()
    values = [p.value() for p in groups[i]]
    mult = len(values)
    if mult < 3:
        return None
    zc = complex(np.mean(np.asarray(values)))
    spread = max((abs(v - zc) for v in values), default=0.1)

    ranked = []
    cand_cache: dict[int, list[complex]] = {}
    for m1, m2, m3 in _three_part_partitions(mult):
        for mi in (m1, m2, m3):
            if mi not in cand_cache:
                cand_cache[mi] = _derivative_root_candidates(ctx.core, mi, zc, spread)
        for z1 in cand_cache[m1]:
            for z2 in cand_cache[m2]:
                if abs(z2 - z1) < 1e-8:
                    continue
                for z3 in cand_cache[m3]:
                    if abs(z3 - z1) < 1e-8 or abs(z3 - z2) < 1e-8:
                        continue
                    free = [(z1, m1), (z2, m2), (z3, m3)]
                    start = _joint_polish_positions(n, fixed, free, s.c, iters=0)[1]
                    if start <= 3e-2:
                        ranked.append((start, free))
    ranked.sort(key=lambda t: t[0])
    for _, free in ranked[:8]:
        zs, norm = _joint_polish_positions(n, fixed, free, s.c)
        if norm <= REBUILD_TOL:
            points = tuple(fixed) + tuple(
                (ProjectiveRoot.from_complex(complex(z)), m)
                for z, (_, m) in zip(zs, free)
            )
            return MajoranaConstellation(n, points)
    return None


def _salvage_split(groups, ctx: _PolyContext, s: SymmetricState):
    """Try to split a single failed blob into two refined multiple roots."""
    n = ctx.n
    blob_idx = [
        i
        for i, g in enumerate(groups)
        if len(g) >= 3 and all((not p.is_infinity) and p.z != 0 for p in g)
    ]
    if len(blob_idx) != 1:
        return None
    i = blob_idx[0]
    others = [groups[j] for j in range(len(groups)) if j != i]
    fixed = tuple(_cluster_representatives(others, ctx)) if others else ()
    values = [p.value() for p in groups[i]]

    # wrong splits can land surprisingly close to the acceptance gate, so
    # polish every plausible candidate and keep the overall best fit
    best = None
    best_norm = math.inf
    for (z1, m1), (z2, m2) in _blob_split_candidates(ctx.core, values, len(values)):
        free = [(z1, m1), (z2, m2)]
        zs = np.array([z1, z2])
        start = _joint_polish_positions(n, fixed, free, s.c, iters=0)[1]
        if start <= REBUILD_TOL:
            norm = start
        elif start <= 3e-2:
            zs, norm = _joint_polish_positions(n, fixed, free, s.c)
        else:
            continue
        if norm < best_norm:
            best_norm = norm
            best = tuple(fixed) + (
                (ProjectiveRoot.from_complex(complex(zs[0])), m1),
                (ProjectiveRoot.from_complex(complex(zs[1])), m2),
            )
    if best is not None and best_norm <= REBUILD_TOL:
        return MajoranaConstellation(n, best)
    return None


def majorana_points(s: SymmetricState, cluster_tol: float = CLUSTER_TOL) -> MajoranaConstellation:
    """Roots of the state polynomial with multiplicities, including infinity.

    Exact zero and infinity multiplicities are read off the coefficient
    pattern before any eigenvalue work.  Companion-matrix eigenvalues scatter
    like eps^(1/m) around an m-fold root (up to ~1e-1 for the largest
    multiplicities), so clustering is attempted on an escalating tolerance
    ladder and every candidate constellation is verified by rebuilding the
    state; the most merged clustering that still reproduces the input within
    1e-8 wins.  Merging genuinely distinct roots fails that same check, so
    escalation cannot collapse a legitimate near-degenerate pair.
    """
    n = s.n
    p = majorana_polynomial(s)
    thresh = DEGREE_RTOL * np.max(np.abs(p))
    sig = np.flatnonzero(np.abs(p) > thresh)
    ctx = _PolyContext(p=p, low=int(sig[0]), deg=int(sig[-1]), n=n)
    n_inf = n - ctx.deg

    finite = []
    if ctx.deg - ctx.low >= 1:
        finite = [complex(z) for z in np.roots(ctx.core[::-1])]

    points = (
        [ProjectiveRoot.zero()] * ctx.low
        + [ProjectiveRoot.from_complex(z) for z in finite]
        + [ProjectiveRoot.infinity()] * n_inf
    )

    ladder = [cluster_tol]
    while ladder[-1] < 0.15:
        ladder.append(min(ladder[-1] * 10.0, 0.15))

    accepted: dict[int, MajoranaConstellation] = {}
    fallback = None
    fallback_dist = math.inf
    near_miss = math.inf
    prev_sizes = None
    for tol in ladder:
        groups = _cluster_groups(points, tol)
        sizes = tuple(sorted(len(g) for g in groups))
        if sizes == prev_sizes:
            continue
        prev_sizes = sizes
        const = MajoranaConstellation(n, tuple(_cluster_representatives(groups, ctx)))
        dist = canonical_distance(state_from_constellation(const).c, s.c)
        if REBUILD_TOL < dist <= 1e-6:
            # representatives refined one cluster at a time can sit just
            # outside the gate when clusters crowd each other
            const, dist = _polish_constellation(const, s)
        if dist <= REBUILD_TOL:
            accepted[len(groups)] = const
        else:
            near_miss = min(near_miss, dist)
            salvaged = _salvage_split(groups, ctx, s)
            if salvaged is not None:
                accepted.setdefault(len(salvaged.points), salvaged)
        if dist < fallback_dist:
            fallback, fallback_dist = const, dist
        if len(groups) == 1:
            break

    n_structural = (1 if ctx.low > 0 else 0) + (1 if n_inf > 0 else 0)
    if len(finite) >= 3 and (not accepted or min(accepted) > n_structural + 2):
        whole_blob: list[list[ProjectiveRoot]] = []
        if ctx.low > 0:
            whole_blob.append([ProjectiveRoot.zero()] * ctx.low)
        if n_inf > 0:
            whole_blob.append([ProjectiveRoot.infinity()] * n_inf)
        whole_blob.append([ProjectiveRoot.from_complex(z) for z in finite])
        salvaged = _salvage_split(whole_blob, ctx, s)
        if salvaged is None and near_miss <= 3e-2:
            # a failed merge that almost rebuilt the state is the signature
            # of interpenetrating scatter; only then is the exhaustive
            # three-way enumeration worth its cost
            salvaged = _salvage_split3(whole_blob, ctx, s)
        nz = np.flatnonzero(np.abs(p) > 1e-15 * np.max(np.abs(p)))
        low_exact, deg_exact = int(nz[0]), int(nz[-1])
        if salvaged is None and ctx.low > low_exact:
            # a multiple root close to (but not at) the origin can push the
            # low coefficients under the degree threshold; retry with those
            # digits restored and the forced zeros folded into the blob
            ctx_low = _PolyContext(p=p, low=low_exact, deg=ctx.deg, n=n)
            raw_full = np.roots(ctx_low.core[::-1])
            if raw_full.size == ctx.deg - low_exact:
                groups_full: list[list[ProjectiveRoot]] = []
                if low_exact > 0:
                    groups_full.append([ProjectiveRoot.zero()] * low_exact)
                if n_inf > 0:
                    groups_full.append([ProjectiveRoot.infinity()] * n_inf)
                groups_full.append(
                    [ProjectiveRoot.from_complex(complex(z)) for z in raw_full]
                )
                salvaged = _salvage_split(groups_full, ctx_low, s)
        if salvaged is None and ctx.deg < deg_exact:
            # symmetrically, a multiple root far from the origin can push the
            # leading coefficients under the threshold; fold the forced
            # infinities back in and retry with the full high end
            ctx_high = _PolyContext(p=p, low=ctx.low, deg=deg_exact, n=n)
            raw_full = np.roots(ctx_high.core[::-1])
            if raw_full.size == deg_exact - ctx.low:
                groups_full = []
                if ctx.low > 0:
                    groups_full.append([ProjectiveRoot.zero()] * ctx.low)
                if n - deg_exact > 0:
                    groups_full.append([ProjectiveRoot.infinity()] * (n - deg_exact))
                groups_full.append(
                    [ProjectiveRoot.from_complex(complex(z)) for z in raw_full]
                )
                salvaged = _salvage_split(groups_full, ctx_high, s)
        if salvaged is not None:
            accepted.setdefault(len(salvaged.points), salvaged)

    if accepted:
        return accepted[min(accepted)]
    return fallback


def state_from_constellation(c: MajoranaConstellation) -> SymmetricState:
    """Symmetric state whose root multiset is the given constellation."""
    n = c.n
    coeffs = np.array([1.0 + 0.0j])
    for root, mult in c.points:
        if root.is_infinity:
            continue
        factor = np.array([-root.value(), 1.0 + 0.0j])
        for _ in range(mult):
            coeffs = npoly.polymul(coeffs, factor)
    p = np.zeros(n + 1, dtype=complex)
    p[: len(coeffs)] = coeffs
    m = np.arange(n + 1)
    weights = np.array([math.sqrt(binom(n, int(k))) for k in m])
    coef = ((-1.0) ** m) * p / weights
    return SymmetricState(n, coef[::-1])


def symmetrize(spinors, method: str = "polynomial") -> SymmetricState:
    """Normalized symmetrization of a list of spinors.

    ``polynomial`` multiplies the root factors (any N); ``permutations`` sums
    the N! tensor products literally and is the slow cross-check.
    """
    spinors = list(spinors)
    if not spinors:
        raise ValueError("need at least one spinor")
    if method == "permutations":
        from .states import symmetrize_by_permutations

        return symmetrize_by_permutations(spinors)
    if method != "polynomial":
        raise ValueError(f"unknown method {method!r}")
    points = []
    for sp in spinors:
        points.append((ProjectiveRoot(sp.b, sp.a), 1))
    return state_from_constellation(MajoranaConstellation(len(spinors), tuple(points)))


def constellation_from_spinors(spinors) -> MajoranaConstellation:
    """Constellation with one point per spinor (no clustering)."""
    spinors = list(spinors)
    return MajoranaConstellation(
        len(spinors), tuple((ProjectiveRoot(sp.b, sp.a), 1) for sp in spinors)
    )


def mobius_root(root: ProjectiveRoot, a: np.ndarray) -> ProjectiveRoot:
    """Image of a projective root under an invertible single-qubit map."""
    a = np.asarray(a, dtype=complex)
    w_new = a[0, 0] * root.w + a[0, 1] * root.z
    z_new = a[1, 0] * root.w + a[1, 1] * root.z
    return ProjectiveRoot(z_new, w_new)


def _mobius_polynomial(p: np.ndarray, a: np.ndarray, n: int) -> np.ndarray:
    """Coefficients of the state polynomial after the map a on every spinor.

    Exact substitution: Q(w) = sum_l p_l (a10 - a00 w)^l (a01 w - a11)^{n-l},
    which carries roots (including degenerate ones and infinity) to their
    Mobius images without locating them.
    """
    a = np.asarray(a, dtype=complex)
    top = np.array([a[1, 0], -a[0, 0]])
    bot = np.array([-a[1, 1], a[0, 1]])
    top_pows = [np.array([1.0 + 0.0j])]
    bot_pows = [np.array([1.0 + 0.0j])]
    for _ in range(n):
        top_pows.append(npoly.polymul(top_pows[-1], top))
        bot_pows.append(npoly.polymul(bot_pows[-1], bot))
    q = np.zeros(n + 1, dtype=complex)
    for l in range(n + 1):
        if p[l] == 0:
            continue
        term = p[l] * npoly.polymul(top_pows[l], bot_pows[n - l])
        q[: len(term)] += term
    return q


def _state_from_polynomial(p: np.ndarray, n: int) -> SymmetricState:
    m = np.arange(n + 1)
    weights = np.array([math.sqrt(binom(n, int(k))) for k in m])
    coef = ((-1.0) ** m) * p / weights
    return SymmetricState(n, coef[::-1])


def apply_single_qubit_map(s: SymmetricState, a: np.ndarray) -> SymmetricState:
    """State after applying the same invertible 2x2 map to every qubit."""
    a = np.asarray(a, dtype=complex)
    if a.shape != (2, 2):
        raise ValueError("map must be 2x2")
    if abs(np.linalg.det(a)) < 1e-12 * np.linalg.norm(a) ** 2:
        raise ValueError("map is singular")
    q = _mobius_polynomial(majorana_polynomial(s), a, s.n)
    return _state_from_polynomial(q, s.n)


def su2_rotate(s: SymmetricState, u: np.ndarray, tol: float = DEFAULT_TOL) -> SymmetricState:
    """Collective rotation of a symmetric state by an SU(2) matrix."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2) or np.max(np.abs(u.conj().T @ u - np.eye(2))) > math.sqrt(tol):
        raise ValueError("matrix is not unitary")
    if abs(np.linalg.det(u) - 1.0) > math.sqrt(tol):
        raise ValueError("matrix is not special unitary")
    return apply_single_qubit_map(s, u)


def euler_su2(alpha: float, beta: float, gamma: float) -> np.ndarray:
    """SU(2) rotation Rz(alpha) Ry(beta) Rz(gamma)."""
    rz1 = np.diag([np.exp(-0.5j * alpha), np.exp(0.5j * alpha)])
    ry = np.array(
        [
            [math.cos(beta / 2), -math.sin(beta / 2)],
            [math.sin(beta / 2), math.cos(beta / 2)],
        ],
        dtype=complex,
    )
    rz2 = np.diag([np.exp(-0.5j * gamma), np.exp(0.5j * gamma)])
    return rz1 @ ry @ rz2


def wigner_d_column(n: int, l: int, alpha: float, beta: float) -> complex:
    """Rotation-matrix element sqrt(C(n,l)) cos^{n-l}(b/2) (-sin(b/2))^l e^{i(l-n/2)a}.

    ``l`` indexes the collective ladder from the all-|1> end, i.e. it counts
    |0> qubits; the entry pairing the weight-w coefficient is l = n - w.
    """
    if not 0 <= l <= n:
        raise ValueError(f"index {l} outside 0..{n}")
    return (
        math.sqrt(binom(n, l))
        * math.cos(beta / 2) ** (n - l)
        * (-math.sin(beta / 2)) ** l
        * complex(np.exp(1j * (l - n / 2) * alpha))
    )


def majorana_projection(s: SymmetricState, alpha: float, beta: float) -> complex:
    """Amplitude of |1...1> after rotating the direction (alpha, beta) to +z.

    Vanishes exactly when (alpha, beta) is the orientation of any Majorana
    point of the state.
    """
    return complex(
        sum(s.c[s.n - l] * wigner_d_column(s.n, l, alpha, beta) for l in range(s.n + 1))
    )
