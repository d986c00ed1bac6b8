"""Slow, independent numeric cross-checks.

Nothing here calls into the analytic code it is meant to validate:
root finding is plain bisection, distances come from dense parametric
sampling, and visit counts from walking a sampled polyline.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

SQRT3 = math.sqrt(3.0)


def bisect_root(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-14) -> float:
    """Bisection on a sign-changing bracket, stopped once it is ``tol`` wide."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if flo * fhi > 0:
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def sphere_residuals(p) -> tuple:
    """Signed residuals of the two radius-2 spheres around (0,2,2) and (4-sqrt3,1,1)."""
    if len(p) != 3:
        raise ValueError("sphere residuals need a 3D point")
    x, y, z = p
    r1 = x ** 2 + (y - 2) ** 2 + (z - 2) ** 2 - 4
    r2 = (x - 4 + SQRT3) ** 2 + (y - 1) ** 2 + (z - 1) ** 2 - 4
    return r1, r2


def _lattice_min(a1, d1, a2, d2, t1, t2):
    # smallest distance between a1 + t1*d1 and a2 + t2*d2 over the lattice
    P = a1 + t1[:, None] * d1
    Q = a2 + t2[:, None] * d2
    best, arg = math.inf, (0, 0)
    # row blocks keep the pairwise array small
    for start in range(0, len(P), 256):
        diff = P[start:start + 256, None, :] - Q[None, :, :]
        sq = np.einsum("ijk,ijk->ij", diff, diff)
        i, j = np.unravel_index(np.argmin(sq), sq.shape)
        if sq[i, j] < best * best:
            best, arg = float(np.sqrt(sq[i, j])), (start + int(i), int(j))
    return best, arg


def dense_min_distance(s1, s2, samples: int = 1001) -> float:
    """Minimum point distance over a samples x samples parameter lattice.

    Always an upper bound on the true segment distance. Accepts Segment
    objects or ``(a, b)`` endpoint pairs.
    """
    if samples < 2:
        raise ValueError("samples must be at least 2")
    a1, b1 = _ends(s1)
    a2, b2 = _ends(s2)
    t = np.linspace(0.0, 1.0, samples)
    return _lattice_min(a1, b1 - a1, a2, b2 - a2, t, t)[0]


def zoomed_min_distance(s1, s2, samples: int = 1001, rounds: int = 3) -> tuple:
    """Dense lattice minimum refined by resampling around the lattice argmin.

    Each round shrinks both parameter windows to a few cells around the
    previous best pair. Returns ``(distance, resolution)``, where the
    resolution bounds the lattice error of the last round. The distance is
    still an upper bound on the true one.
    """
    if samples < 3:
        raise ValueError("samples must be at least 3")
    a1, b1 = _ends(s1)
    a2, b2 = _ends(s2)
    d1, d2 = b1 - a1, b2 - a2
    len1, len2 = float(np.linalg.norm(d1)), float(np.linalg.norm(d2))
    win1 = win2 = (0.0, 1.0)
    best = math.inf
    for _ in range(rounds):
        t1 = np.linspace(*win1, samples)
        t2 = np.linspace(*win2, samples)
        dist, (i, j) = _lattice_min(a1, d1, a2, d2, t1, t2)
        best = min(best, dist)
        h1, h2 = t1[1] - t1[0], t2[1] - t2[0]
        resolution = float(h1 * len1 + h2 * len2) / 2
        win1 = (max(0.0, t1[i] - 2 * h1), min(1.0, t1[i] + 2 * h1))
        win2 = (max(0.0, t2[j] - 2 * h2), min(1.0, t2[j] + 2 * h2))
    return best, resolution


def dense_point_distance(p, s, samples: int = 100001) -> float:
    """Minimum distance from ``p`` to ``samples`` evenly spaced points on ``s``."""
    a, b = _ends(s)
    t = np.linspace(0.0, 1.0, samples)[:, None]
    return float(np.min(np.linalg.norm(a + t * (b - a) - np.asarray(p, float), axis=1)))


def dense_visit_count(p, vertices, closed: bool = False, per_edge: int = 2001,
                      radius: float = None) -> int:
    """Count separate passes of a sampled polyline through the ball around ``p``.

    The polyline is sampled uniformly per edge (shared vertices sampled
    once) and maximal runs of samples within ``radius`` of ``p`` are
    counted; for closed chains a run touching both ends counts once.
    """
    V = np.asarray(vertices, float)
    p = np.asarray(p, float)
    t = np.linspace(0.0, 1.0, per_edge)[:-1, None]
    chunks = [V[i] + t * (V[i + 1] - V[i]) for i in range(len(V) - 1)]
    chunks.append(V[-1:])
    pts = np.concatenate(chunks)
    if radius is None:
        longest = float(np.max(np.linalg.norm(np.diff(V, axis=0), axis=1)))
        radius = longest / (per_edge - 1)
    near = np.linalg.norm(pts - p, axis=1) <= radius
    starts = np.flatnonzero(near[1:] & ~near[:-1]).size + int(near[0])
    if closed and near[0] and near[-1] and starts > 1:
        starts -= 1
    return int(starts)


def _ends(s):
    if hasattr(s, "a"):
        return np.asarray(s.a, float), np.asarray(s.b, float)
    a, b = s
    return np.asarray(a, float), np.asarray(b, float)
