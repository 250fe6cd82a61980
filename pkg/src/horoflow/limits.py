"""Finite-depth evidence about how a boundary point sits relative to an orbit.

True limit-point taxonomy is an asymptotic notion; a finite word ball can only
supply evidence. Except for an exact parabolic witness, every verdict tag here
carries an "-evidence" suffix to make that explicit, and verdicts can move as
the depth grows.

The operational tests mirror three classical criteria: heights along the orbit
that keep growing witness horocyclic approach; bounded heights accumulating at
a positive level argue against discreteness of the approach; a parabolic
element fixing the point settles the matter exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .group import (CLASS_TOL, GroupElement, GroupSpec, IsometryClass,
                    ball_arrays, classify_isometry, enumerate_ball)
from .halfplane import GEOM_TOL, BoundaryPoint, apply_boundary, bp

UNBOUNDED_FACTOR = 10.0  # growth factor over the depth-1 sup for the unbounded call
UNBOUNDED_RUN = 3        # consecutive strictly-increasing depth steps required
ACCUM_COUNT = 5          # distinct height values forming a cluster
ACCUM_WINDOW = 1e-3      # cluster width, relative to the cluster level
ACCUM_FLOOR = 1e-3       # clusters must sit at least this far above 0


class LimitVerdict(enum.Enum):
    HOROCYCLIC_EVIDENCE = "horocyclic-evidence"
    DISCRETE_EVIDENCE = "discrete-evidence"
    PARABOLIC = "parabolic"
    IRREGULAR_EVIDENCE = "irregular-evidence"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class LimitPointEvidence:
    point: BoundaryPoint
    depth: int
    sup_height: float
    height_accumulation: float | None
    parabolic_witness: GroupElement | None
    verdict: LimitVerdict


def _orbit_heights_raw(arrs, xi: BoundaryPoint) -> np.ndarray:
    # Orbit points of deep words can degenerate in float arithmetic (their
    # imaginary part underflows while they collide with xi); such samples are
    # returned as nan for the callers to drop rather than treated as signal.
    a, b, c, d = arrs.a, arrs.b, arrs.c, arrs.d
    with np.errstate(invalid="ignore", divide="ignore", over="ignore",
                     under="ignore"):
        w = (1j * a + b) / (1j * c + d)
        if xi.is_infinity:
            h = w.imag.copy()
        else:
            dz = w - xi.value
            h = w.imag / (dz.real * dz.real + dz.imag * dz.imag)
    h[~np.isfinite(h)] = np.nan
    return h


def _identity_height(xi: BoundaryPoint) -> float:
    if xi.is_infinity:
        return 1.0
    return 1.0 / (xi.value * xi.value + 1.0)


def orbit_heights(spec: GroupSpec, xi, depth: int | None = None) -> np.ndarray:
    """Orbit heights height_xi(g(i)) over the depth ball, descending.

    The orbit point i itself (the identity) is included.
    """
    xi = bp(xi)
    if depth is None:
        depth = spec.max_word_length
    if depth > spec.max_word_length:
        raise ValueError(f"depth {depth} exceeds the spec's max_word_length {spec.max_word_length}")
    h = np.append(_orbit_heights_raw(ball_arrays(spec, depth), xi),
                  _identity_height(xi))
    return np.sort(h[~np.isnan(h)])[::-1]


def _find_cluster(heights: np.ndarray) -> float | None:
    """Mean of the first cluster of ACCUM_COUNT distinct values whose spread
    is within ACCUM_WINDOW relative to their level, all at least ACCUM_FLOOR.

    The window is relative because orbit heights decay geometrically toward
    0 at every scale: an absolute window always finds spurious clusters just
    above any floor, and a relative one is also invariant under the global
    rescaling that moving the base point of the height function causes.
    """
    vals = np.unique(heights)
    vals = vals[vals >= ACCUM_FLOOR]
    if vals.size < ACCUM_COUNT:
        return None
    for i in range(vals.size - ACCUM_COUNT + 1):
        window = vals[i:i + ACCUM_COUNT]
        level = float(window.mean())
        if window[-1] - window[0] <= ACCUM_WINDOW * level:
            return level
    return None


def classify_boundary_point(spec: GroupSpec, xi, depth: int | None = None,
                            tol: float = GEOM_TOL) -> LimitPointEvidence:
    """Finite-depth classification of a boundary point, in fixed test order.

    1. exact parabolic witness (a parabolic ball element fixing the point);
    2. unbounded-height growth (sup strictly rising over the last
       UNBOUNDED_RUN depth steps and past UNBOUNDED_FACTOR times the depth-1
       sup) -> horocyclic-evidence;
    3. bounded heights with a cluster at a positive level -> irregular-evidence;
    4. bounded heights without one -> discrete-evidence;
    otherwise inconclusive (depth too shallow to judge growth, or growth that
    has not yet cleared the factor).
    """
    xi = bp(xi)
    if depth is None:
        depth = spec.max_word_length
    if not (1 <= depth <= spec.max_word_length):
        raise ValueError(
            f"depth must lie in [1, {spec.max_word_length}], got {depth}")
    arrs = ball_arrays(spec, depth)
    heights = np.append(_orbit_heights_raw(arrs, xi), _identity_height(xi))
    lengths = np.append(arrs.word_lengths, 0)
    finite = ~np.isnan(heights)
    heights, lengths = heights[finite], lengths[finite]
    sup_height = float(heights.max())

    # parabolic candidates by the vectorized trace test, then exact checks
    near_parabolic = np.abs(np.abs(arrs.a + arrs.d) - 2.0) <= CLASS_TOL
    if near_parabolic.any():
        ball = enumerate_ball(spec, depth)
        for i in np.nonzero(near_parabolic)[0]:
            e = ball[i]
            if classify_isometry(e) is not IsometryClass.PARABOLIC:
                continue
            img = apply_boundary(e.mobius, xi)
            if xi.is_infinity:
                fixed = img.is_infinity
            else:
                fixed = (not img.is_infinity) and abs(img.value - xi.value) <= tol
            if fixed:
                return LimitPointEvidence(xi, depth, sup_height, None, e,
                                          LimitVerdict.PARABOLIC)

    sup_by_depth = [float(heights[lengths <= k].max()) for k in range(1, depth + 1)]

    if depth >= UNBOUNDED_RUN + 1:
        rising = all(sup_by_depth[-j] > sup_by_depth[-j - 1]
                     for j in range(1, UNBOUNDED_RUN + 1))
        if rising:
            if sup_by_depth[-1] >= UNBOUNDED_FACTOR * sup_by_depth[0]:
                return LimitPointEvidence(xi, depth, sup_height, None, None,
                                          LimitVerdict.HOROCYCLIC_EVIDENCE)
            return LimitPointEvidence(xi, depth, sup_height, None, None,
                                      LimitVerdict.INCONCLUSIVE)
        cluster = _find_cluster(heights)
        if cluster is not None:
            return LimitPointEvidence(xi, depth, sup_height, cluster, None,
                                      LimitVerdict.IRREGULAR_EVIDENCE)
        return LimitPointEvidence(xi, depth, sup_height, None, None,
                                  LimitVerdict.DISCRETE_EVIDENCE)
    return LimitPointEvidence(xi, depth, sup_height, None, None,
                              LimitVerdict.INCONCLUSIVE)
