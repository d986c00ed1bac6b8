"""Dimension-generic geometric primitives.

Points are plain tuples of floats. Every predicate takes an absolute
tolerance ``eps`` in grid units; ``None`` means the process-wide default
returned by :func:`get_eps`.
"""

from __future__ import annotations

import math
import os
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

Point = tuple

DEFAULT_EPS = 1e-9

_eps = float(os.environ.get("GRIDPATH_EPS", DEFAULT_EPS))


def get_eps() -> float:
    return _eps


def set_eps(eps: float) -> None:
    """Override the global geometric tolerance."""
    global _eps
    if not eps > 0 or not math.isfinite(eps):
        raise ValueError(f"tolerance must be a positive finite number, got {eps!r}")
    _eps = float(eps)


@contextmanager
def tolerance(eps: float):
    old = get_eps()
    set_eps(eps)
    try:
        yield
    finally:
        set_eps(old)


def _tol(eps: Optional[float]) -> float:
    return _eps if eps is None else eps


def as_point(coords: Iterable[float]) -> Point:
    p = tuple(float(c) for c in coords)
    if not p:
        raise ValueError("a point needs at least one coordinate")
    if not all(math.isfinite(c) for c in p):
        raise ValueError(f"non-finite coordinate in {p}")
    return p


def _check_dims(*points: Sequence[float]) -> None:
    k = len(points[0])
    for p in points[1:]:
        if len(p) != k:
            raise ValueError(f"dimension mismatch: {len(p)} != {k}")


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        object.__setattr__(self, "a", as_point(self.a))
        object.__setattr__(self, "b", as_point(self.b))
        _check_dims(self.a, self.b)
        if distance(self.a, self.b) <= get_eps():
            raise ValueError(f"degenerate segment {self.a} - {self.b}")

    @property
    def length(self) -> float:
        return distance(self.a, self.b)

    @property
    def dim(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class Box:
    lo: Point
    hi: Point

    def __post_init__(self):
        object.__setattr__(self, "lo", as_point(self.lo))
        object.__setattr__(self, "hi", as_point(self.hi))
        _check_dims(self.lo, self.hi)
        if any(l > h for l, h in zip(self.lo, self.hi)):
            raise ValueError(f"inverted box {self.lo} / {self.hi}")

    @property
    def dim(self) -> int:
        return len(self.lo)

    @property
    def extents(self) -> tuple:
        return tuple(h - l for l, h in zip(self.lo, self.hi))

    def contains_point(self, p: Sequence[float], eps: Optional[float] = None) -> bool:
        e = _tol(eps)
        return all(l - e <= c <= h + e for c, l, h in zip(p, self.lo, self.hi))

    def contains_box(self, other: "Box", eps: Optional[float] = None) -> bool:
        return self.contains_point(other.lo, eps) and self.contains_point(other.hi, eps)


@dataclass(frozen=True)
class Intersection:
    """Classification of two closed segments.

    ``kind`` is one of ``"disjoint"``, ``"touch"`` or ``"overlap"``.
    ``point`` is the (midpoint of the) closest pair for ``"touch"`` and
    ``None`` otherwise. ``distance`` is the closest distance between the
    two segments.
    """

    kind: str
    point: Optional[Point]
    distance: float

    @property
    def meets(self) -> bool:
        return self.kind != "disjoint"


def distance(a: Sequence[float], b: Sequence[float]) -> float:
    _check_dims(a, b)
    return math.dist(a, b)


def point_segment_param(p, a, b):
    """Parameter ``t`` in [0, 1] of the point of segment ``a``-``b`` closest to ``p``.

    Broadcasts over leading axes, so ``p`` may be one point and ``a``/``b``
    stacks of segment endpoints (or the other way round).
    """
    p, a, b = np.asarray(p, float), np.asarray(a, float), np.asarray(b, float)
    d = b - a
    t = np.einsum("...i,...i->...", p - a, d) / np.einsum("...i,...i->...", d, d)
    return np.clip(t, 0.0, 1.0)


def point_segment_distance(p, a, b):
    """Distance from ``p`` to the closed segment ``a``-``b`` (broadcasting)."""
    p, a, b = np.asarray(p, float), np.asarray(a, float), np.asarray(b, float)
    t = point_segment_param(p, a, b)
    foot = a + t[..., None] * (b - a)
    return np.linalg.norm(p - foot, axis=-1)


def point_on_segment(p: Sequence[float], s: Segment, eps: Optional[float] = None) -> bool:
    _check_dims(p, s.a)
    return bool(point_segment_distance(p, s.a, s.b) <= _tol(eps))


def _dot(u, v) -> float:
    return math.fsum(x * y for x, y in zip(u, v))


def _sub(u, v) -> tuple:
    return tuple(x - y for x, y in zip(u, v))


def _gram_area2(u, v) -> float:
    """Twice the area of the triangle spanned by u and v, via 2x2 minors.

    The Lagrange form avoids the cancellation of |u|^2|v|^2 - (u.v)^2.
    """
    k = len(u)
    s = math.fsum((u[i] * v[j] - u[j] * v[i]) ** 2 for i in range(k) for j in range(i + 1, k))
    return math.sqrt(s)


def collinear(a, b, c, eps: Optional[float] = None) -> bool:
    """True iff every altitude of the triangle a, b, c is at most ``eps``."""
    _check_dims(a, b, c)
    e = _tol(eps)
    longest = max(distance(a, b), distance(b, c), distance(a, c))
    if longest <= e:
        return True
    shortest = min(distance(a, b), distance(b, c), distance(a, c))
    if shortest == 0.0:
        return True
    area2 = _gram_area2(_sub(b, a), _sub(c, a))
    return area2 / shortest <= e


def _closest_params(p1, q1, p2, q2):
    """Closest-point parameters (s, t) of segments p1-q1 and p2-q2.

    Solves the 2x2 normal equations of the least-distance problem and
    clamps to the unit square; the parallel case fixes s = 0 first.
    """
    d1, d2, r = _sub(q1, p1), _sub(q2, p2), _sub(p1, p2)
    a, e = _dot(d1, d1), _dot(d2, d2)
    b, c, f = _dot(d1, d2), _dot(d1, r), _dot(d2, r)
    denom = a * e - b * b
    if denom > 1e-14 * a * e:
        s = min(max((b * f - c * e) / denom, 0.0), 1.0)
    else:
        s = 0.0
    t = (b * s + f) / e
    if t < 0.0:
        t = 0.0
        s = min(max(-c / a, 0.0), 1.0)
    elif t > 1.0:
        t = 1.0
        s = min(max((b - c) / a, 0.0), 1.0)
    return s, t


def _lerp(p, q, t) -> tuple:
    return tuple(x + t * (y - x) for x, y in zip(p, q))


def closest_points(s1: Segment, s2: Segment) -> tuple:
    """The closest pair of points between two segments and their distance."""
    _check_dims(s1.a, s2.a)
    s, t = _closest_params(s1.a, s1.b, s2.a, s2.b)
    c1, c2 = _lerp(s1.a, s1.b, s), _lerp(s2.a, s2.b, t)
    return c1, c2, math.dist(c1, c2)


def segments_intersect(s1: Segment, s2: Segment, eps: Optional[float] = None) -> Intersection:
    """Classify how two closed segments in k dimensions meet."""
    e = _tol(eps)
    c1, c2, d = closest_points(s1, s2)
    if d > e:
        return Intersection("disjoint", None, d)
    on_line = (all(_line_distance(q, s1) <= e for q in (s2.a, s2.b))
               and all(_line_distance(q, s2) <= e for q in (s1.a, s1.b)))
    if on_line:
        # collinear: measure the shared sub-segment along s1's direction
        u = _sub(s1.b, s1.a)
        n = math.sqrt(_dot(u, u))
        proj = sorted(_dot(_sub(q, s1.a), u) / n for q in (s2.a, s2.b))
        shared = min(n, proj[1]) - max(0.0, proj[0])
        if shared > e:
            return Intersection("overlap", None, d)
    mid = tuple((x + y) / 2 for x, y in zip(c1, c2))
    return Intersection("touch", mid, d)


def _line_distance(p, s: Segment) -> float:
    u, w = _sub(s.b, s.a), _sub(p, s.a)
    return _gram_area2(u, w) / math.sqrt(_dot(u, u))


def tight_aabb(points: Iterable[Sequence[float]]) -> Box:
    pts = [as_point(p) for p in points]
    if not pts:
        raise ValueError("tight_aabb of an empty point set")
    _check_dims(*pts)
    return Box(tuple(map(min, zip(*pts))), tuple(map(max, zip(*pts))))


def box_volume(b: Box) -> float:
    return math.prod(b.extents)


def contained_in(s: Segment, b: Box, eps: Optional[float] = None) -> bool:
    # a box is convex, so both endpoints inside means the whole segment is
    _check_dims(s.a, b.lo)
    return b.contains_point(s.a, eps) and b.contains_point(s.b, eps)
