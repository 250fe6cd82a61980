"""Geodesic and horocycle flows on unit tangent vectors, and injectivity profiles.

A unit tangent vector is recorded as a frame: the Moebius map carrying the
reference vector (based at i, pointing straight up) to it. Flows act by right
multiplication of the frame, so they commute with the group acting on the left.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._parallel import worker_count
from .errors import EmptyBall, NegativeTime
from .group import GroupSpec, ball_arrays
from .halfplane import INFINITY, POINT_I, BoundaryPoint, Mobius, PointH, apply, apply_boundary

TAIL_FRACTION = 0.25  # share of trailing samples feeding the liminf estimate

_CHUNK_ROWS = 4096


@dataclass(frozen=True)
class UnitTangent:
    """Unit tangent vector, stored as the frame mapping the reference vector to it."""

    frame: Mobius

    def base_point(self) -> PointH:
        return apply(self.frame, POINT_I)

    def forward_endpoint(self) -> BoundaryPoint:
        return apply_boundary(self.frame, INFINITY)

    def transform(self, m: Mobius) -> "UnitTangent":
        return UnitTangent(m @ self.frame)


BASE_TANGENT = UnitTangent(Mobius.identity())


def geodesic_flow(u: UnitTangent, t: float) -> UnitTangent:
    """Flow for time t along the geodesic the vector points along."""
    e = math.exp(t / 2.0)
    return UnitTangent(u.frame @ Mobius(e, 0.0, 0.0, 1.0 / e))


def horocycle_flow(u: UnitTangent, s: float) -> UnitTangent:
    """Flow for time s along the horocycle the vector is perpendicular to."""
    return UnitTangent(u.frame @ Mobius(1.0, float(s), 0.0, 1.0))


def ray_point(u: UnitTangent, t: float) -> PointH:
    """Point at time t >= 0 along the forward geodesic ray of u."""
    if t < 0.0:
        raise NegativeTime(f"ray time must be >= 0, got {t}")
    return apply(u.frame, PointH(0.0, math.exp(t)))


def orbit_points(u: UnitTangent, kind: str, times: np.ndarray) -> np.ndarray:
    """Base points of the flowed vector at each time, as a complex array."""
    m = u.frame
    if kind == "geodesic":
        z = 1j * np.exp(np.asarray(times, dtype=float))
    elif kind == "horocycle":
        z = np.asarray(times, dtype=float) + 1j
    else:
        raise ValueError(f"unknown flow kind {kind!r}")
    return (m.a * z + m.b) / (m.c * z + m.d)


@dataclass(frozen=True)
class RayProfile:
    """Sampled injectivity-radius estimates along a geodesic ray.

    Estimates are computed against a finite word ball, so they only ever
    OVER-estimate the true injectivity radius: deepening the ball can lower
    them, never raise them.
    """

    times: np.ndarray
    inj_estimates: np.ndarray
    liminf_estimate: float


def _dist_to_images(z: np.ndarray, a, b, c, d) -> np.ndarray:
    """Min over the given elements of dist(z_t, g(z_t)), vectorized over t."""
    za = z[None, :]
    w = (a[:, None] * za + b[:, None]) / (c[:, None] * za + d[:, None])
    disp = 2.0 * np.arcsinh(np.abs(za - w) / (2.0 * np.sqrt(z.imag[None, :] * w.imag)))
    return disp.min(axis=0)


def _min_displacements(z: np.ndarray, coeffs) -> np.ndarray:
    a, b, c, d = coeffs[0], coeffs[1], coeffs[2], coeffs[3]
    chunks = [(i, min(i + _CHUNK_ROWS, a.size)) for i in range(0, a.size, _CHUNK_ROWS)]
    workers = worker_count()
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(
                lambda ij: _dist_to_images(z, a[ij[0]:ij[1]], b[ij[0]:ij[1]],
                                           c[ij[0]:ij[1]], d[ij[0]:ij[1]]), chunks))
    else:
        parts = [_dist_to_images(z, a[i:j], b[i:j], c[i:j], d[i:j]) for i, j in chunks]
    return np.minimum.reduce(parts)


def injectivity_profile(spec: GroupSpec, u: UnitTangent = BASE_TANGENT,
                        t_max: float = 10.0, step: float = 0.1,
                        depth: int | None = None,
                        tail_fraction: float = TAIL_FRACTION) -> RayProfile:
    """Injectivity-radius estimates along the forward ray of u.

    At each sample time t the estimate is half the minimal displacement
    dist(x_t, g(x_t)) over the non-identity word ball; the liminf estimate is
    the minimum over the trailing ``tail_fraction`` of the samples.
    """
    if not (t_max >= 0.0 and step > 0.0):
        raise ValueError(f"need t_max >= 0 and step > 0, got {t_max}, {step}")
    coeffs = ball_arrays(spec, depth)
    if coeffs.a.size == 0:
        raise EmptyBall("injectivity profile needs a non-empty word ball")
    n = int(math.floor(t_max / step + 1e-9)) + 1
    times = step * np.arange(n)
    m = u.frame
    z0 = 1j * np.exp(times)
    z = (m.a * z0 + m.b) / (m.c * z0 + m.d)
    inj = 0.5 * _min_displacements(z, coeffs)
    tail = max(1, int(math.ceil(tail_fraction * n)))
    return RayProfile(times=times, inj_estimates=inj,
                      liminf_estimate=float(inj[-tail:].min()))
