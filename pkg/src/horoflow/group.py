"""Finitely generated Fuchsian groups: word balls, classification, presets.

A group is given by its generators (unit-determinant Moebius values); elements
are enumerated breadth-first as reduced words up to a maximum word length,
deduplicated up to sign on a rounding grid, in a deterministic order (word
length first, then lexicographic word).
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from .errors import BallTooLarge, EllipticElement, InvalidGenerator
from .halfplane import INFINITY, BoundaryPoint, Mobius

DEDUP_TOL = 1e-9      # rounding grid for element deduplication
CLASS_TOL = 1e-9      # tolerance on |trace| - 2 for the isometry trichotomy
ENUM_CAP = 2_000_000  # hard cap on enumerated elements


class IsometryClass(enum.Enum):
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"
    IDENTITY = "identity"


@dataclass(frozen=True)
class GroupElement:
    """A group element: its Moebius value and a shortest witnessing word.

    ``word`` is a tuple of signed 1-based generator indices (+k for the k-th
    generator, -k for its inverse); it is None only for synthetic elements
    injected into diagnostics, never for enumerated ones.
    """

    mobius: Mobius
    word: tuple[int, ...] | None = None

    @property
    def word_length(self) -> int:
        return 0 if self.word is None else len(self.word)


@dataclass(frozen=True)
class GroupSpec:
    """Generators plus enumeration parameters."""

    generators: tuple[Mobius, ...]
    max_word_length: int = 10
    dedup_tol: float = DEDUP_TOL

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise InvalidGenerator("a group spec needs at least one generator")
        for g in gens:
            if not isinstance(g, Mobius):
                raise InvalidGenerator(f"generator {g!r} is not a Mobius value")
            if g.is_identity(self.dedup_tol):
                raise InvalidGenerator("the identity is not an admissible generator")
        if not (isinstance(self.max_word_length, int) and self.max_word_length >= 1):
            raise InvalidGenerator(f"max_word_length must be a positive integer, got {self.max_word_length}")
        if not self.dedup_tol > 0.0:
            raise InvalidGenerator("dedup_tol must be positive")


def _letter_token(letter: int) -> int:
    # +1 < -1 < +2 < -2 < ... ; used for deterministic lexicographic order
    return 2 * (abs(letter) - 1) + (0 if letter > 0 else 1)


def word_sort_key(word: tuple[int, ...]) -> tuple:
    return (len(word), tuple(_letter_token(l) for l in word))


def _dedup_key(m: Mobius, tol: float) -> tuple[int, int, int, int]:
    return (round(m.a / tol), round(m.b / tol), round(m.c / tol), round(m.d / tol))


def enumerate_ball(spec: GroupSpec, depth: int | None = None,
                   max_elements: int = ENUM_CAP) -> tuple[GroupElement, ...]:
    """All non-identity elements of word length <= depth, breadth-first.

    Elements equal up to sign and the rounding grid are merged, keeping the
    first witness found (shortest word length, then lexicographically
    smallest word). Raises BallTooLarge past ``max_elements``. Results for
    the default cap are memoized per (spec, depth).
    """
    if depth is None:
        depth = spec.max_word_length
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    if max_elements == ENUM_CAP:
        return _enumerate_ball_cached(spec, depth)
    return _enumerate_ball_impl(spec, depth, max_elements)


@functools.lru_cache(maxsize=64)
def _enumerate_ball_cached(spec: GroupSpec, depth: int) -> tuple[GroupElement, ...]:
    return _enumerate_ball_impl(spec, depth, ENUM_CAP)


def _enumerate_ball_impl(spec: GroupSpec, depth: int,
                         max_elements: int) -> tuple[GroupElement, ...]:
    letters: list[tuple[int, Mobius]] = []
    for i, g in enumerate(spec.generators):
        letters.append((i + 1, g))
        letters.append((-(i + 1), g.inverse()))
    seen = {_dedup_key(Mobius.identity(), spec.dedup_tol)}
    ball: list[GroupElement] = []
    frontier: list[tuple[tuple[int, ...], Mobius]] = [((), Mobius.identity())]
    for _ in range(depth):
        nxt: list[tuple[tuple[int, ...], Mobius]] = []
        for word, m in frontier:
            last = word[-1] if word else 0
            for letter, g in letters:
                if letter == -last:
                    continue
                m2 = m @ g
                key = _dedup_key(m2, spec.dedup_tol)
                if key in seen:
                    continue
                seen.add(key)
                w2 = word + (letter,)
                ball.append(GroupElement(m2, w2))
                if len(ball) > max_elements:
                    raise BallTooLarge(
                        f"word ball exceeds the cap of {max_elements} elements")
                nxt.append((w2, m2))
        frontier = nxt
    return tuple(ball)


def ball_coefficients(elements) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Stack the (a, b, c, d) coefficients of a list of elements into arrays."""
    n = len(elements)
    a = np.empty(n)
    b = np.empty(n)
    c = np.empty(n)
    d = np.empty(n)
    for i, e in enumerate(elements):
        m = e.mobius if isinstance(e, GroupElement) else e
        a[i], b[i], c[i], d[i] = m.a, m.b, m.c, m.d
    return a, b, c, d


class BallArrays(NamedTuple):
    """Read-only coefficient and word-length arrays of a word ball."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray
    word_lengths: np.ndarray


@functools.lru_cache(maxsize=64)
def _ball_arrays_cached(spec: GroupSpec, depth: int) -> BallArrays:
    ball = _enumerate_ball_cached(spec, depth)
    a, b, c, d = ball_coefficients(ball)
    lengths = np.array([len(e.word) for e in ball], dtype=int)
    for arr in (a, b, c, d, lengths):
        arr.flags.writeable = False
    return BallArrays(a, b, c, d, lengths)


def ball_arrays(spec: GroupSpec, depth: int | None = None) -> BallArrays:
    """Coefficient/length arrays of the ball, memoized per (spec, depth).

    The arrays are shared between callers and therefore read-only.
    """
    if depth is None:
        depth = spec.max_word_length
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    return _ball_arrays_cached(spec, depth)


def _unwrap(g) -> Mobius:
    return g.mobius if isinstance(g, GroupElement) else g


def classify_isometry(g, class_tol: float = CLASS_TOL) -> IsometryClass:
    """Trichotomy by |trace|: > 2 hyperbolic, = 2 parabolic, < 2 elliptic.

    The identity (and anything within class_tol of it after sign
    canonicalization) is reported separately as IDENTITY.
    """
    m = _unwrap(g)
    if m.is_identity(class_tol):
        return IsometryClass.IDENTITY
    t = abs(m.trace)
    if abs(t - 2.0) <= class_tol:
        return IsometryClass.PARABOLIC
    if t > 2.0:
        return IsometryClass.HYPERBOLIC
    return IsometryClass.ELLIPTIC


def fixed_points(g, class_tol: float = CLASS_TOL) -> tuple[BoundaryPoint, BoundaryPoint]:
    """Boundary fixed points of a hyperbolic or parabolic element.

    For c != 0 these are the roots (a - d +/- sqrt(tr^2 - 4)) / (2c), returned
    with the + root first; a parabolic yields a double point. For c = 0 the
    points are b/(d - a) and infinity (a double point at infinity for
    translations). Elliptic input raises EllipticElement.
    """
    m = _unwrap(g)
    cls = classify_isometry(m, class_tol)
    if cls is IsometryClass.ELLIPTIC:
        raise EllipticElement(f"element with trace {m.trace} has no boundary fixed points")
    if cls is IsometryClass.IDENTITY:
        raise ValueError("the identity fixes every boundary point")
    a, b, c, d = m.a, m.b, m.c, m.d
    if c == 0.0:
        if cls is IsometryClass.PARABOLIC:
            return (INFINITY, INFINITY)
        return (BoundaryPoint(b / (d - a)), INFINITY)
    if cls is IsometryClass.PARABOLIC:
        p = BoundaryPoint((a - d) / (2.0 * c))
        return (p, p)
    tr = a + d
    s = math.sqrt(max(tr * tr - 4.0, 0.0))
    diff = a - d
    # Evaluate the benign root directly and recover the other from the root
    # product -b/c, avoiding cancellation when |a - d| ~ sqrt(tr^2 - 4).
    if diff >= 0.0:
        x = (diff + s) / (2.0 * c)
        y = -b / (c * x) if x != 0.0 else (diff - s) / (2.0 * c)
    else:
        y = (diff - s) / (2.0 * c)
        x = -b / (c * y) if y != 0.0 else (diff + s) / (2.0 * c)
    return (BoundaryPoint(_polish_root(a, b, c, d, x)),
            BoundaryPoint(_polish_root(a, b, c, d, y)))


def _polish_root(a: float, b: float, c: float, d: float, x: float) -> float:
    # Newton steps on q(x) = c x^2 + (d - a) x - b. Large word coefficients
    # make the closed-form roots lose up to half their digits; two steps
    # push |g(x) - x| back down to evaluation noise.
    for _ in range(2):
        q = c * x * x + (d - a) * x - b
        dq = 2.0 * c * x + (d - a)
        if dq == 0.0 or not math.isfinite(q):
            return x
        step = q / dq
        if not math.isfinite(step):
            return x
        x -= step
    return x


def check_elliptic_free(spec: GroupSpec, depth: int | None = None,
                        class_tol: float = CLASS_TOL) -> list[GroupElement]:
    """Elliptic elements found in the word ball; empty means none detected."""
    return [e for e in enumerate_ball(spec, depth)
            if classify_isometry(e, class_tol) is IsometryClass.ELLIPTIC]


def conjugate_spec(spec: GroupSpec, h: Mobius) -> GroupSpec:
    """The same group presented with every generator conjugated by h."""
    hinv = h.inverse()
    return replace(spec, generators=tuple(h @ g @ hinv for g in spec.generators))


# ---------------------------------------------------------------------------
# preset families


def cyclic_parabolic(shift: float = 1.0, **spec_kwargs) -> GroupSpec:
    """Cyclic group of the translation z -> z + shift."""
    if shift == 0.0:
        raise InvalidGenerator("shift must be nonzero")
    return GroupSpec((Mobius(1.0, float(shift), 0.0, 1.0),), **spec_kwargs)


def cyclic_hyperbolic(factor: float = 4.0, **spec_kwargs) -> GroupSpec:
    """Cyclic group of the dilation z -> factor * z (factor > 0, != 1)."""
    if not (factor > 0.0 and factor != 1.0):
        raise InvalidGenerator(f"dilation factor must be positive and != 1, got {factor}")
    r = math.sqrt(factor)
    return GroupSpec((Mobius(r, 0.0, 0.0, 1.0 / r),), **spec_kwargs)


def _pairing(c1: tuple[float, float], c2: tuple[float, float]) -> Mobius:
    """Hyperbolic map sending the exterior of circle c1 onto the interior of c2.

    Circles are (center, radius) on the real line; the isometric circle of the
    result is c1 and that of its inverse is c2.
    """
    (x1, r1), (x2, r2) = c1, c2
    return Mobius.normalized(-x2, x1 * x2 + r1 * r2, -1.0, x1)


def _circles_disjoint(circles) -> bool:
    for i in range(len(circles)):
        for j in range(i + 1, len(circles)):
            (xi, ri), (xj, rj) = circles[i], circles[j]
            if abs(xi - xj) <= ri + rj:
                return False
    return True


def schottky_pair(circles=((-3.0, 0.9), (-1.0, 0.9), (1.0, 0.9), (3.0, 0.9)),
                  **spec_kwargs) -> GroupSpec:
    """Free two-generator Schottky group from four disjoint circles.

    The first generator pairs circles[0] with circles[1], the second pairs
    circles[2] with circles[3]. Disjointness of the circles is the ping-pong
    condition guaranteeing a free, discrete, elliptic-free group.
    """
    circles = tuple((float(x), float(r)) for x, r in circles)
    if len(circles) != 4:
        raise InvalidGenerator(f"need exactly 4 circles, got {len(circles)}")
    for x, r in circles:
        if not r > 0.0:
            raise InvalidGenerator(f"circle radius must be positive, got {r}")
    if not _circles_disjoint(circles):
        raise InvalidGenerator("the four circles must have disjoint closures")
    g1 = _pairing(circles[0], circles[1])
    g2 = _pairing(circles[2], circles[3])
    return GroupSpec((g1, g2), **spec_kwargs)


def hyperbolic_element(neg: float, pos: float, length: float) -> Mobius:
    """Hyperbolic map with axis (neg, pos) and translation length ``length``."""
    if not length > 0.0:
        raise InvalidGenerator(f"translation length must be positive, got {length}")
    if not pos > neg:
        raise InvalidGenerator("axis endpoints must satisfy neg < pos")
    s = math.exp(length / 2.0)
    u, v = float(neg), float(pos)
    return Mobius.normalized(v * s - u / s, u * v * (1.0 / s - s),
                             s - 1.0 / s, v / s - u * s)


def isometric_circle(g) -> tuple[float, float]:
    """(center, radius) of {z : |cz + d| = 1}; needs c != 0."""
    m = _unwrap(g)
    if m.c == 0.0:
        raise ValueError("isometric circle undefined for c = 0")
    return (-m.d / m.c, 1.0 / abs(m.c))


def truncated_flute(lengths=(2.0, 2.5, 3.0), spacing: float = 2.0,
                    **spec_kwargs) -> GroupSpec:
    """Finite stage of a flute-like surface: one hyperbolic gluing per length.

    The k-th generator has axis (k*spacing, k*spacing + 1) and translation
    length lengths[k]. This is a truncation: the infinite-stage surfaces the
    construction mimics are not reachable at finite rank, so conclusions drawn
    from these presets are desk-scale surrogates only. The prescribed lengths
    must be long enough that all isometric circles are disjoint (the ping-pong
    condition); otherwise InvalidGenerator is raised.

    The default max_word_length is 6 rather than 10: free balls of rank r
    grow like (2r)(2r-1)^(k-1), and three or more generators overflow the
    enumeration cap well before depth 10.
    """
    lengths = tuple(float(l) for l in lengths)
    if not lengths:
        raise InvalidGenerator("need at least one translation length")
    gens = []
    circles = []
    for k, length in enumerate(lengths):
        u = k * spacing
        g = hyperbolic_element(u, u + 1.0, length)
        gens.append(g)
        circles.append(isometric_circle(g))
        circles.append(isometric_circle(g.inverse()))
    if not _circles_disjoint(circles):
        raise InvalidGenerator(
            "translation lengths too short for disjoint isometric circles at this spacing")
    spec_kwargs.setdefault("max_word_length", 6)
    return GroupSpec(tuple(gens), **spec_kwargs)
