"""Brute-force verification of clips rules against explicit matrix groups.

For a pair of finite classes the verifier intersects one fixed realization
with conjugated copies of the other over many frames and compares the set of
observed intersection classes with the symbolic rule output:

* random frames can only ever produce classes that the rule predicts
  (soundness);
* a curated family of alignment frames, axis-to-axis with twist angles
  solved so that secondary axes coincide, must reach every predicted class
  (completeness witnesses); a targeted subgroup-embedding search backs this
  up for stubborn cells.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import atan2, pi
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..clips import clips_pair
from ..groups import ClassSet, Context, SubgroupClass, render_class
from .classify import classify, rotation_axis_angle
from .kernels import batch_membership, mult_table
from .realize import MATCH_TOL, MatrixGroup, intersect, realize, rotation

_GENERIC_TWISTS = (0.0, 0.6180339887498949, 1.8392867552141612)


def random_rotations(count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform random rotation matrices via normalized quaternions."""
    q = rng.normal(size=(count, 4))
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    w, x, y, z = q.T
    return np.stack(
        [
            np.stack([1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)], axis=-1),
            np.stack([2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)], axis=-1),
            np.stack([2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)], axis=-1),
        ],
        axis=1,
    )


def rotation_between(v: np.ndarray, u: np.ndarray) -> np.ndarray:
    """A rotation sending unit vector v to unit vector u."""
    c = float(np.clip(v @ u, -1.0, 1.0))
    if c > 1.0 - 1e-12:
        return np.eye(3)
    if c < -1.0 + 1e-12:
        # Half turn about any axis perpendicular to v.
        perp = np.cross(v, [1.0, 0.0, 0.0])
        if np.linalg.norm(perp) < 1e-8:
            perp = np.cross(v, [0.0, 1.0, 0.0])
        return rotation(perp, pi)
    axis = np.cross(v, u)
    return rotation(axis, float(np.arccos(c)))


def characteristic_axes(g: MatrixGroup) -> np.ndarray:
    """Distinct axes of the rotation images det(x) x of all elements."""
    axes: List[np.ndarray] = []
    for R in g.pi_image():
        if np.abs(R - np.eye(3)).max() <= MATCH_TOL:
            continue
        u, _ = rotation_axis_angle(np.ascontiguousarray(R))
        if not any(abs(float(u @ v)) > 1.0 - 1e-7 for v in axes):
            axes.append(u)
    if not axes:
        axes.append(np.array([0.0, 0.0, 1.0]))
    return np.array(axes)


def _axis_orbit_reps(axes: np.ndarray, rotations: np.ndarray) -> np.ndarray:
    """One axis per orbit under the given rotation action (axes up to sign)."""
    reps = []
    seen = np.zeros(len(axes), dtype=bool)
    images = np.einsum("rij,aj->rai", rotations, axes)
    for i in range(len(axes)):
        if seen[i]:
            continue
        reps.append(axes[i])
        dots = np.abs(images @ axes[i])
        seen |= (dots > 1.0 - 1e-7).any(axis=0)
    return np.array(reps)


def _azimuth(w: np.ndarray, u: np.ndarray, e1: np.ndarray, e2: np.ndarray) -> Optional[float]:
    p1, p2 = float(w @ e1), float(w @ e2)
    if p1 * p1 + p2 * p2 < 1e-14:
        return None
    return atan2(p2, p1)


def alignment_frames(A: MatrixGroup, B: MatrixGroup, max_frames: int = 20000) -> List[np.ndarray]:
    """Curated frames: axis-to-axis alignments with twist angles that make
    secondary axes coincide, plus generic twists that isolate single shared
    axes."""
    axes_a = characteristic_axes(A)
    axes_b = characteristic_axes(B)
    reps_a = _axis_orbit_reps(axes_a, A.pi_image())
    reps_b = _axis_orbit_reps(axes_b, B.pi_image())
    frames: List[np.ndarray] = [np.eye(3)]
    for u in reps_a:
        # Reference frame perpendicular to u for azimuth computations.
        ref = np.array([1.0, 0.0, 0.0])
        if abs(float(u @ ref)) > 0.9:
            ref = np.array([0.0, 1.0, 0.0])
        e1 = ref - float(ref @ u) * u
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(u, e1)
        cos_a, az_a = [], []
        for w in axes_a:
            for sw in (w, -w):
                az = _azimuth(sw, u, e1, e2)
                if az is not None:
                    cos_a.append(float(sw @ u))
                    az_a.append(az)
        for v in reps_b:
            for sv in (v, -v):
                base = rotation_between(sv, u)
                rotated = axes_b @ base.T
                twists = set(_GENERIC_TWISTS)
                for w in rotated:
                    for sw in (w, -w):
                        c = float(sw @ u)
                        az = _azimuth(sw, u, e1, e2)
                        if az is None:
                            continue
                        for ca, aa in zip(cos_a, az_a):
                            if abs(ca - c) < 1e-6:
                                twists.add(round((aa - az) % (2 * pi), 9))
                for t in sorted(twists):
                    frames.append(rotation(u, t) @ base)
                    if len(frames) >= max_frames:
                        return frames
    return frames


# ---------------------------------------------------------------------------
# Subgroup enumeration for targeted witness search.

@functools.lru_cache(maxsize=None)
def _subgroups_by_class(cls: SubgroupClass) -> Dict[SubgroupClass, List[np.ndarray]]:
    """All subgroups of the canonical realization, grouped by class."""
    g = realize(cls)
    n = g.order
    table = mult_table(np.ascontiguousarray(g.elements), MATCH_TOL)
    if (table < 0).any():
        raise ValueError("multiplication table incomplete")

    def close(seed: Tuple[int, ...]) -> frozenset:
        members = set(seed) | {int(np.argmin(
            np.abs(g.elements - np.eye(3)).max(axis=(1, 2))))}
        frontier = list(members)
        while frontier:
            i = frontier.pop()
            for j in list(members):
                for k in (table[i, j], table[j, i]):
                    if k not in members:
                        members.add(int(k))
                        frontier.append(int(k))
        return frozenset(members)

    subs = {close((i,)) for i in range(n)}
    for pair in itertools.combinations(range(n), 2):
        subs.add(close(pair))
    out: Dict[SubgroupClass, List[np.ndarray]] = {}
    for s in subs:
        mats = np.ascontiguousarray(g.elements[sorted(s)])
        c = classify(MatrixGroup(mats))
        out.setdefault(c, []).append(mats)
    return out


def _group_frame_candidates(mats: np.ndarray) -> List[np.ndarray]:
    """Orthonormal frames (e1, e2, primary) adapted to a small group."""
    g = MatrixGroup(mats)
    best: Tuple[float, np.ndarray] = (0.0, np.array([0.0, 0.0, 1.0]))
    axes = []
    for R in g.pi_image():
        if np.abs(R - np.eye(3)).max() <= MATCH_TOL:
            continue
        u, ang = rotation_axis_angle(np.ascontiguousarray(R))
        axes.append(u)
        if ang > best[0] + 1e-9:
            best = (ang, u)
    # Primary axis: the axis with the highest element count (largest cyclic
    # order); ties broken by any representative.
    counts: Dict[int, int] = {}
    uniq: List[np.ndarray] = []
    for u in axes:
        for i, v in enumerate(uniq):
            if abs(float(u @ v)) > 1.0 - 1e-7:
                counts[i] += 1
                break
        else:
            uniq.append(u)
            counts[len(uniq) - 1] = 1
    if not uniq:
        return [np.eye(3)]
    max_count = max(counts.values())
    primaries = [uniq[i] for i, c in counts.items() if c == max_count]
    frames = []
    for p in primaries:
        secondaries = [w for w in uniq if abs(float(w @ p)) < 1.0 - 1e-7]
        if not secondaries:
            ref = np.array([1.0, 0.0, 0.0])
            if abs(float(p @ ref)) > 0.9:
                ref = np.array([0.0, 1.0, 0.0])
            secondaries = [ref]
        for w in secondaries:
            for sp in (p, -p):
                e1 = w - float(w @ sp) * sp
                e1 /= np.linalg.norm(e1)
                frames.append(np.column_stack([e1, np.cross(sp, e1), sp]))
    return frames


def _axial_axis(mats: np.ndarray) -> Optional[np.ndarray]:
    """The common axis if every element is a (roto)rotation about one axis."""
    axis = None
    for R in MatrixGroup(mats).pi_image():
        if np.abs(R - np.eye(3)).max() <= MATCH_TOL:
            continue
        u, _ = rotation_axis_angle(np.ascontiguousarray(R))
        if axis is None:
            axis = u
        elif abs(float(u @ axis)) < 1.0 - 1e-7:
            return None
    return axis


def find_witness(A: MatrixGroup, B: MatrixGroup, target: SubgroupClass,
                 tol: float = MATCH_TOL) -> Optional[np.ndarray]:
    """Search for a frame f with classify(A n fBf^-1) == target."""
    subs_a = _subgroups_by_class(A.claimed).get(target, [])
    subs_b = _subgroups_by_class(B.claimed).get(target, [])
    for ca in subs_a[:12]:
        frames_a = _group_frame_candidates(ca)
        for cb in subs_b[:12]:
            axis_b = _axial_axis(cb)
            for fa in frames_a:
                for fb in _group_frame_candidates(cb):
                    f0 = fa @ fb.T
                    twists = _GENERIC_TWISTS if axis_b is not None else (0.0,)
                    for t in twists:
                        f = f0 @ rotation(axis_b, t) if axis_b is not None else f0
                        try:
                            got = classify(intersect(A, B.conjugate(f), tol))
                        except ValueError:
                            continue
                        if got == target:
                            return f
    return None


# ---------------------------------------------------------------------------
# Reports.

def frame_axis_angle(f: np.ndarray) -> dict:
    if np.abs(f - np.eye(3)).max() <= 1e-12:
        return {"axis": [0.0, 0.0, 1.0], "angle": 0.0}
    u, ang = rotation_axis_angle(np.ascontiguousarray(f))
    return {"axis": [round(float(c), 12) for c in u], "angle": round(float(ang), 12)}


@dataclass
class VerificationReport:
    """Outcome of the brute-force check of one clips cell."""

    pair: Tuple[SubgroupClass, SubgroupClass]
    table: ClassSet
    observed: ClassSet
    witnesses: Dict[SubgroupClass, np.ndarray]
    samples: int
    seed: int
    extra: ClassSet
    missing: ClassSet

    @property
    def verdict(self) -> str:
        return "pass" if self.observed == self.table else "fail"

    def to_json(self) -> dict:
        return {
            "pair": [render_class(self.pair[0]), render_class(self.pair[1])],
            "table": [render_class(c) for c in self.table],
            "observed": [render_class(c) for c in self.observed],
            "witnesses": {
                render_class(c): frame_axis_angle(f)
                for c, f in sorted(self.witnesses.items(), key=lambda t: t[0].sort_key())
            },
            "samples": self.samples,
            "seed": self.seed,
            "extra": [render_class(c) for c in self.extra],
            "missing": [render_class(c) for c in self.missing],
            "verdict": self.verdict,
        }


def _classify_cached(A: MatrixGroup, BC_f: np.ndarray, member_mask: np.ndarray,
                     tol: float, cache: Dict[tuple, SubgroupClass]) -> SubgroupClass:
    from .kernels import closure_ok, membership

    idx = tuple(np.nonzero(member_mask)[0])
    if idx not in cache:
        mats = np.ascontiguousarray(A.elements[list(idx)])
        if not closure_ok(mats, tol):
            # A frame near (but not on) an alignment manifold can match only
            # part of a coset.  Genuine matches sit far below tol, so retry
            # with a tightened tolerance before giving up.
            tight = membership(np.ascontiguousarray(A.elements), BC_f, tol / 100.0)
            mats = np.ascontiguousarray(A.elements[tight])
            if not closure_ok(mats, tol):
                raise ValueError(
                    "intersection is not closed at either tolerance; "
                    "frame sits on a degenerate alignment"
                )
            cache[idx] = classify(MatrixGroup(mats))
        else:
            cache[idx] = classify(MatrixGroup(mats))
    return cache[idx]


def verify_clips(a: SubgroupClass, b: SubgroupClass, samples: int = 200,
                 seed: int = 0, alignments: Optional[Sequence[np.ndarray]] = None,
                 tol: float = MATCH_TOL) -> VerificationReport:
    """Compare the symbolic clips set of (a, b) with observed intersections."""
    if not (a.is_finite and b.is_finite):
        raise ValueError("oracle verification needs finite classes")
    ctx = Context.O3 if (a.is_type_iii or b.is_type_iii or a.is_type_ii
                         or b.is_type_ii) else Context.SO3
    table = clips_pair(ctx, a, b)
    A, B = realize(a), realize(b)
    auto = alignments is None
    curated = list(alignments) if alignments is not None else alignment_frames(A, B)
    rng = np.random.default_rng(seed)
    randoms = list(random_rotations(samples, rng))
    frames = curated + randoms

    F = np.array(frames)
    BC = np.einsum("fab,nbc,fdc->fnad", F, B.elements, F)
    masks = batch_membership(
        np.ascontiguousarray(A.elements), np.ascontiguousarray(BC), tol
    )
    witnesses: Dict[SubgroupClass, np.ndarray] = {}
    cache: Dict[tuple, SubgroupClass] = {}
    for f_idx in range(len(frames)):
        c = _classify_cached(
            A, np.ascontiguousarray(BC[f_idx]), masks[f_idx], tol, cache
        )
        if c not in witnesses:
            witnesses[c] = frames[f_idx]
    if auto:
        for target in table:
            if target not in witnesses:
                f = find_witness(A, B, target, tol)
                if f is not None:
                    witnesses[target] = f
    observed = ClassSet(witnesses.keys())
    extra = ClassSet(c for c in observed if c not in table)
    missing = ClassSet(c for c in table if c not in observed)
    return VerificationReport(
        pair=(a, b), table=table, observed=observed, witnesses=witnesses,
        samples=samples, seed=seed, extra=extra, missing=missing,
    )
