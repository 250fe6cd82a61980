"""Recurrence-versus-non-minimality diagnostics for horocycle orbits.

The pipeline mirrors a limiting argument at finite depth: hunt the word ball
for a sequence of elements whose orbit points i -> g_n(i) keep heights inside
a fixed band while escaping in modulus, then watch two numeric streams formed
from that sequence: the boundary images g_n^{-1}(inf), which must escape to
infinity, and the Busemann values B_inf(g_n(i), i) = ln(c_n^2 + d_n^2), which
must settle. A settled value near 0 is evidence the horocycle orbit returns
to itself (recurrence); a settled value t away from 0 is evidence the time-t
geodesic translate lies in the orbit closure, which rules out minimality of
the complement. Everything is finite-depth evidence, never proof, and the
verdict tags say so.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoSequenceFound
from .flows import BASE_TANGENT, UnitTangent
from .group import (DEDUP_TOL, GroupElement, GroupSpec, _dedup_key,
                    ball_arrays, conjugate_spec, enumerate_ball,
                    word_sort_key)
from .halfplane import (INFINITY, POINT_I, BoundaryPoint, Mobius, PointH,
                        apply, apply_boundary, busemann, dist)

EPS = 1e-6          # default convergence tolerance for the settle rules
WINDOW = 5          # trailing terms that must sit below eps to settle
MIN_SEQ_LEN = 8     # shortest usable escaping sequence

RECURRENCE = "recurrence-evidence"
NON_MINIMALITY = "non-minimality-evidence"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SequenceCandidate:
    """A bounded escaping sequence drawn from (or injected into) a group.

    ``heights_nonconstant`` records whether the height list actually varies;
    constant-height sequences (e.g. pure translation chains) are admitted but
    flagged, since some of the classical criteria want non-constant heights.
    """

    elements: tuple[GroupElement, ...]
    heights: tuple[float, ...]
    height_band: tuple[float, float]
    endpoint_images: tuple[BoundaryPoint, ...]
    coefficients: tuple[tuple[float, float, float, float], ...]
    heights_nonconstant: bool

    def __post_init__(self):
        m, M = self.height_band
        if not (0.0 < m < M):
            raise ValueError(f"height band needs 0 < m < M, got ({m}, {M})")
        n = len(self.elements)
        if not (len(self.heights) == len(self.endpoint_images)
                == len(self.coefficients) == n):
            raise ValueError("field lengths disagree")
        slack = 1e-12 * max(1.0, M)
        for h in self.heights:
            if not (m - slack <= h <= M + slack):
                raise ValueError(f"height {h} falls outside the band ({m}, {M})")
        moduli = [abs(apply(e.mobius, POINT_I).z) for e in self.elements]
        for r0, r1 in zip(moduli, moduli[1:]):
            if not r1 > r0:
                raise ValueError("moduli |g(i)| must strictly increase")
        words = [e.word for e in self.elements]
        if all(w is not None for w in words):
            for w0, w1 in zip(words, words[1:]):
                if not len(w1) > len(w0):
                    raise ValueError("word lengths must strictly increase")

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class ConvergenceVerdict:
    """Outcome of a two-stream settle test.

    ``residuals`` is the elementwise max of the two streams' residuals (the
    endpoint residual against its target, and the consecutive differences of
    the Busemann values); ``values`` keeps the Busemann stream itself. The
    limit is reported only when both streams settled.
    """

    converged: bool
    limit: float | None
    residuals: tuple[float, ...]
    values: tuple[float, ...] | None = None


@dataclass(frozen=True)
class CoefficientAsymptotics:
    """Report on the coefficient behavior of an escaping sequence.

    Includes the displacement probe: distances from i*e^{t_n} to its image at
    t_n = ln|b_n|, which the coefficient identity predicts to be
    2*argsinh(sqrt(b^2 c^2 + d^2 + a^2 - 1)/2).
    """

    a_abs: tuple[float, ...]
    c_values: tuple[float, ...]
    d_values: tuple[float, ...]
    a_diverging: bool
    c_limit_zero: bool
    d_limit: float
    min_cd_norm: float
    cd_bound_ok: bool
    probe_times: tuple[float, ...]
    probe_distances: tuple[float, ...]
    probe_expected: tuple[float, ...]
    probe_max_residual: float
    probe_diverging: bool


@dataclass(frozen=True)
class DichotomyVerdict:
    kind: str
    t: float | None = None


@dataclass(frozen=True)
class DiagnosticsReport:
    sequence: SequenceCandidate | None
    coefficients: CoefficientAsymptotics | None
    busemann_limit: ConvergenceVerdict
    candidate_times: tuple[float, ...]
    verdict: DichotomyVerdict
    note: str | None = None


# ---------------------------------------------------------------------------
# sequence search


def _longest_escaping_chain(order, moduli, lengths):
    """Longest subsequence of ``order`` strictly increasing in both modulus
    and word length; earliest such chain in the given order."""
    if not order:
        return []
    max_len = max(lengths[i] for i in order) + 2
    # F[i] = longest admissible chain starting at i; computed by scanning
    # blocks of equal modulus from the right so equal moduli never chain.
    F = {}
    best_from_len = [0] * (max_len + 1)  # max F over committed elements per word length
    blocks = []
    start = 0
    for k in range(1, len(order) + 1):
        if k == len(order) or moduli[order[k]] != moduli[order[start]]:
            blocks.append(order[start:k])
            start = k
    for block in reversed(blocks):
        vals = {}
        for i in block:
            li = lengths[i]
            vals[i] = 1 + max(best_from_len[li + 1:], default=0)
        for i in block:
            F[i] = vals[i]
            li = lengths[i]
            if vals[i] > best_from_len[li]:
                best_from_len[li] = vals[i]
    remaining = max(F.values())
    chain = []
    last = None
    for i in order:
        if F[i] != remaining:
            continue
        if last is not None and not (moduli[i] > moduli[last]
                                     and lengths[i] > lengths[last]):
            continue
        chain.append(i)
        last = i
        remaining -= 1
        if remaining == 0:
            break
    return chain


def find_bounded_escaping_sequence(spec: GroupSpec, band: tuple[float, float],
                                   depth: int | None = None,
                                   min_len: int = MIN_SEQ_LEN) -> SequenceCandidate:
    """Search the word ball for a height-banded sequence escaping in modulus.

    Elements with height_inf(g(i)) inside [m, M] are taken in increasing
    |g(i)| order (ties by word length, then lexicographic word), thinned to
    the longest subsequence with strictly increasing modulus and word length,
    and stripped of a leading constant-height run when later heights vary.
    Raises NoSequenceFound (carrying the achieved count) below ``min_len``.
    """
    m, M = band
    if not (0.0 < m < M):
        raise ValueError(f"height band needs 0 < m < M, got ({m}, {M})")
    ball = enumerate_ball(spec, depth)
    arrs = ball_arrays(spec, depth if depth is not None else spec.max_word_length)
    w = (1j * arrs.a + arrs.b) / (1j * arrs.c + arrs.d)
    heights = w.imag
    moduli = np.abs(w)
    idx = [int(i) for i in np.nonzero((heights >= m) & (heights <= M))[0]]
    idx.sort(key=lambda i: (moduli[i], word_sort_key(ball[i].word)))
    lengths = arrs.word_lengths
    chain = _longest_escaping_chain(idx, moduli, lengths)
    hs = [float(heights[i]) for i in chain]
    if len(set(hs)) > 1:
        while len(hs) >= 2 and hs[0] == hs[1]:
            chain.pop(0)
            hs.pop(0)
    if len(chain) < min_len:
        raise NoSequenceFound(
            f"only {len(chain)} qualifying elements (need {min_len}) "
            f"in the depth-{depth if depth is not None else spec.max_word_length} ball",
            found=len(chain))
    elements = tuple(ball[i] for i in chain)
    return SequenceCandidate(
        elements=elements,
        heights=tuple(hs),
        height_band=(float(m), float(M)),
        endpoint_images=tuple(apply_boundary(e.mobius, INFINITY) for e in elements),
        coefficients=tuple((e.mobius.a, e.mobius.b, e.mobius.c, e.mobius.d)
                           for e in elements),
        heights_nonconstant=len(set(hs)) > 1,
    )


def synthetic_candidate(matrices, band: tuple[float, float]) -> SequenceCandidate:
    """Wrap explicit Moebius values as an injected sequence (words unknown)."""
    ms = [m if isinstance(m, Mobius) else Mobius.from_matrix(m) for m in matrices]
    elements = tuple(GroupElement(m, None) for m in ms)
    hs = tuple(apply(m, POINT_I).im for m in ms)
    return SequenceCandidate(
        elements=elements,
        heights=hs,
        height_band=(float(band[0]), float(band[1])),
        endpoint_images=tuple(apply_boundary(m, INFINITY) for m in ms),
        coefficients=tuple((m.a, m.b, m.c, m.d) for m in ms),
        heights_nonconstant=len(set(hs)) > 1,
    )


# ---------------------------------------------------------------------------
# coefficient asymptotics


def _strictly_increasing_tail(values, window: int) -> bool:
    steps = min(window, len(values) - 1)
    if steps < 1:
        return False
    return all(values[-j] > values[-j - 1] for j in range(1, steps + 1))


def check_coefficient_asymptotics(seq: SequenceCandidate, eps: float = EPS,
                                  window: int = WINDOW) -> CoefficientAsymptotics:
    """Coefficient-stream evidence: |a_n| divergence, c_n -> 0, the bound
    c_n^2 + d_n^2 >= 1/M, and the ln|b_n| displacement probe."""
    coeffs = np.array(seq.coefficients, dtype=float)
    a, b, c, d = coeffs[:, 0], coeffs[:, 1], coeffs[:, 2], coeffs[:, 3]
    n = len(seq.elements)
    a_abs = np.abs(a)
    a_div = _strictly_increasing_tail(a_abs, window)
    c_zero = n >= window and bool(np.all(np.abs(c[-window:]) < eps))
    cd = c * c + d * d
    M = seq.height_band[1]
    bound = 1.0 / M
    min_cd = float(cd.min())
    cd_ok = min_cd >= bound - 1e-12 * max(1.0, bound)

    times = np.full(n, np.nan)
    measured = np.full(n, np.nan)
    expected = np.full(n, np.nan)
    for k in range(n):
        if b[k] == 0.0:
            continue
        times[k] = math.log(abs(b[k]))
        z = PointH(0.0, abs(b[k]))
        measured[k] = dist(z, apply(seq.elements[k].mobius, z))
        rad = max(b[k] * b[k] * c[k] * c[k] + d[k] * d[k] + a[k] * a[k] - 1.0, 0.0)
        expected[k] = 2.0 * math.asinh(math.sqrt(rad) / 2.0)
    valid = ~np.isnan(measured)
    resid = float(np.max(np.abs(measured[valid] - expected[valid]))) if valid.any() else math.nan
    probe_div = _strictly_increasing_tail(measured[valid], window) if valid.any() else False

    return CoefficientAsymptotics(
        a_abs=tuple(a_abs), c_values=tuple(c), d_values=tuple(d),
        a_diverging=a_div, c_limit_zero=c_zero, d_limit=float(d[-1]),
        min_cd_norm=min_cd, cd_bound_ok=bool(cd_ok),
        probe_times=tuple(times), probe_distances=tuple(measured),
        probe_expected=tuple(expected), probe_max_residual=resid,
        probe_diverging=probe_div,
    )


# ---------------------------------------------------------------------------
# convergence tests


def _unwrap(g) -> Mobius:
    return g.mobius if isinstance(g, GroupElement) else g


def _residual_to(p: BoundaryPoint, target: BoundaryPoint) -> float:
    """Distance-like residual of p against a boundary target; convergence to
    infinity is measured by 1/|p| falling below eps."""
    if target.is_infinity:
        if p.is_infinity:
            return 0.0
        v = abs(p.value)
        return math.inf if v == 0.0 else 1.0 / v
    if p.is_infinity:
        return math.inf
    return abs(p.value - target.value)


def _settled(residuals, eps: float, window: int) -> bool:
    return len(residuals) >= window and all(r < eps for r in residuals[-window:])


def _sequence_elements(seq) -> tuple[Mobius, ...]:
    if isinstance(seq, SequenceCandidate):
        return tuple(e.mobius for e in seq.elements)
    return tuple(_unwrap(e) for e in seq)


def test_return_time(u: UnitTangent, alpha, seq, eps: float = EPS,
                     window: int = WINDOW) -> ConvergenceVerdict:
    """Settle test for a candidate return time against the witness alpha.

    Stream one: boundary images g_n(u(inf)) against the target alpha(u(inf)).
    Stream two: Busemann values B_{u(inf)}(g_n^{-1} i, alpha^{-1} i), whose
    settled value is the candidate time. Converged means both streams sit
    below eps over the trailing window.
    """
    ms = _sequence_elements(seq)
    if not ms:
        raise ValueError("sequence is empty")
    keys = {_dedup_key(m, DEDUP_TOL) for m in ms}
    if len(keys) != len(ms):
        raise ValueError("sequence elements must be pairwise distinct")
    am = _unwrap(alpha)
    u_inf = u.forward_endpoint()
    target = apply_boundary(am, u_inf)
    s1 = [_residual_to(apply_boundary(m, u_inf), target) for m in ms]
    ainv_i = apply(am.inverse(), POINT_I)
    values = [busemann(u_inf, apply(m.inverse(), POINT_I), ainv_i) for m in ms]
    s2 = [math.inf] + [abs(v1 - v0) for v0, v1 in zip(values, values[1:])]
    converged = _settled(s1, eps, window) and _settled(s2, eps, window)
    residuals = tuple(max(r1, r2) for r1, r2 in zip(s1, s2))
    return ConvergenceVerdict(
        converged=converged,
        limit=values[-1] if converged else None,
        residuals=residuals,
        values=tuple(values),
    )


def test_recurrence(u: UnitTangent, seq, eps: float = EPS,
                    window: int = WINDOW) -> ConvergenceVerdict:
    """Return-time test with alpha = identity; recurrence evidence needs the
    settled value to be 0 within eps on top of convergence."""
    return test_return_time(u, Mobius.identity(), seq, eps, window)


# ---------------------------------------------------------------------------
# pipeline


def _invert_word(word):
    return None if word is None else tuple(-l for l in reversed(word))


def _inverse_elements(seq: SequenceCandidate) -> tuple[GroupElement, ...]:
    return tuple(GroupElement(e.mobius.inverse(), _invert_word(e.word))
                 for e in seq.elements)


def run_dichotomy(spec: GroupSpec, u: UnitTangent = BASE_TANGENT,
                  band: tuple[float, float] = (0.5, 2.0), eps: float = EPS,
                  *, depth: int | None = None, window: int = WINDOW,
                  min_len: int = MIN_SEQ_LEN,
                  candidate: SequenceCandidate | None = None,
                  alpha_depth: int = 2) -> DiagnosticsReport:
    """Full diagnostic run from a unit tangent vector.

    The vector's forward endpoint is moved to infinity by conjugating the
    group if needed. The verdict follows the settled Busemann value of the
    inverted sequence: near 0 -> recurrence-evidence, a settled t away from
    0 -> non-minimality-evidence(t), anything unsettled -> inconclusive.
    ``candidate`` injects a prebuilt sequence in place of the ball search.
    """
    u_inf = u.forward_endpoint()
    if not u_inf.is_infinity:
        if candidate is not None:
            raise ValueError("injected candidates require a vector aimed at infinity")
        h = Mobius(0.0, -1.0, 1.0, -u_inf.value)
        spec = conjugate_spec(spec, h)
        u = u.transform(h)
    if candidate is not None:
        seq = candidate
    else:
        try:
            seq = find_bounded_escaping_sequence(spec, band, depth=depth,
                                                 min_len=min_len)
        except NoSequenceFound as exc:
            return DiagnosticsReport(
                sequence=None, coefficients=None,
                busemann_limit=ConvergenceVerdict(False, None, ()),
                candidate_times=(),
                verdict=DichotomyVerdict(INCONCLUSIVE),
                note=f"no qualifying sequence: {exc}",
            )
    coeffs = check_coefficient_asymptotics(seq, eps=eps, window=window)
    inv = _inverse_elements(seq)
    main = test_recurrence(u, inv, eps=eps, window=window)
    if main.converged:
        if abs(main.limit) < eps:
            verdict = DichotomyVerdict(RECURRENCE, main.limit)
        else:
            verdict = DichotomyVerdict(NON_MINIMALITY, main.limit)
    else:
        verdict = DichotomyVerdict(INCONCLUSIVE)
    times = []
    for e in enumerate_ball(spec, min(alpha_depth, spec.max_word_length)):
        v = test_return_time(u, e, inv, eps=eps, window=window)
        if v.converged and abs(v.limit) >= eps:
            times.append(v.limit)
    times.sort()
    deduped = []
    for t in times:
        if not deduped or t - deduped[-1] > eps:
            deduped.append(t)
    return DiagnosticsReport(
        sequence=seq, coefficients=coeffs, busemann_limit=main,
        candidate_times=tuple(deduped), verdict=verdict,
    )
