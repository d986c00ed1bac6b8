"""Check a chain against the covering-path definitions.

The report records coverage (per grid point visit counts), repeated
edges, collinear consecutive edges, crossings, bounding-box containment,
link length, length classes and total length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import geom
from .chain import Chain
from .geom import Box
from .grid import GridSpec, enumerate_points, is_grid_point


@dataclass
class VerificationReport:
    covers_all: bool
    visit_counts: dict
    repeated_edges: bool
    noncollinear_ok: bool
    uncrossing: bool
    crossing_witnesses: list
    containment_ok: bool
    link_length_h: int
    length_classes: list
    total_length_lambda: float
    cycle_class: str
    kind: str = "path"
    box: Optional[Box] = field(default=None, repr=False)

    @property
    def single_length_class(self) -> bool:
        return len(self.length_classes) == 1

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "covers_all": self.covers_all,
            "repeated_edges": self.repeated_edges,
            "noncollinear_ok": self.noncollinear_ok,
            "uncrossing": self.uncrossing,
            "crossing_witnesses": [
                {"edges": [i + 1, j + 1], "point": list(p) if p is not None else None}
                for (i, j), p in self.crossing_witnesses
            ],
            "containment_ok": self.containment_ok,
            "link_length_h": self.link_length_h,
            "length_classes": self.length_classes,
            "total_length_lambda": self.total_length_lambda,
            "cycle_class": self.cycle_class,
            "uncovered": [list(p) for p, n in self.visit_counts.items() if n == 0],
            "revisited": [list(p) for p, n in self.visit_counts.items() if n > 1],
        }


def visit_count(p, c: Chain, eps: Optional[float] = None) -> int:
    """Number of separate times the chain passes through ``p``.

    A pass through a vertex shared by two consecutive edges counts once,
    as does the closing vertex of a cycle.
    """
    e = geom._tol(eps)
    V = np.asarray(c.vertices, float)
    a, b = V[:-1], V[1:]
    if len(p) != V.shape[1]:
        raise ValueError("dimension mismatch between point and chain")
    t = geom.point_segment_param(p, a, b)
    foot = a + t[:, None] * (b - a)
    on = np.linalg.norm(foot - np.asarray(p, float), axis=1) <= e
    if not on.any():
        return 0
    lengths = np.linalg.norm(b - a, axis=1)
    # snap contacts within eps of an edge end onto the vertex
    arc = t * lengths
    params = []
    for i in np.flatnonzero(on):
        if arc[i] <= e:
            u = float(i)
        elif lengths[i] - arc[i] <= e:
            u = float(i + 1)
        else:
            u = i + float(t[i])
        params.append(u)
    h = len(lengths)
    if c.kind == "cycle":
        params = [0.0 if u == h else u for u in params]
    return len(set(params))


def _length_classes(lengths, eps: float) -> list:
    # single-linkage clustering of sorted lengths, reported by class mean
    classes, current = [], [lengths[0]]
    for x in lengths[1:]:
        if x - current[-1] <= eps:
            current.append(x)
        else:
            classes.append(current)
            current = [x]
    classes.append(current)
    return [math.fsum(cl) / len(cl) for cl in classes]


def _candidate_pairs(lo, hi, eps):
    """Index pairs i < j whose edge boxes overlap (broad phase)."""
    n = len(lo)
    pairs = []
    step = max(1, 2_000_000 // max(1, n * lo.shape[1]))
    for start in range(0, n, step):
        blk = slice(start, min(n, start + step))
        hit = np.all(
            (lo[blk, None, :] <= hi[None, :, :] + eps) & (lo[None, :, :] <= hi[blk, None, :] + eps),
            axis=2,
        )
        ii, jj = np.nonzero(hit)
        ii = ii + start
        keep = jj > ii
        pairs.extend(zip(ii[keep].tolist(), jj[keep].tolist()))
    return pairs


def _edge_boxes(c: Chain):
    V = np.asarray(c.vertices, float)
    return np.minimum(V[:-1], V[1:]), np.maximum(V[:-1], V[1:])


def _has_repeated_edges(c: Chain, eps: float) -> bool:
    # edges are unordered endpoint pairs; equal edges have equal boxes
    V = c.vertices
    lo, hi = _edge_boxes(c)
    for i, j in _candidate_pairs(lo, hi, eps):
        a, b, p, q = V[i], V[i + 1], V[j], V[j + 1]
        if ((geom.distance(a, p) <= eps and geom.distance(b, q) <= eps)
                or (geom.distance(a, q) <= eps and geom.distance(b, p) <= eps)):
            return True
    return False


def crossings(c: Chain, eps: Optional[float] = None) -> list:
    """All offending edge pairs as ``((i, j), point)``.

    Non-adjacent edges must be disjoint; adjacent edges may share only
    their common vertex.
    """
    e = geom._tol(eps)
    edges = c.edges
    h = len(edges)
    lo, hi = _edge_boxes(c)
    closed = c.kind == "cycle"
    out = []
    for i, j in _candidate_pairs(lo, hi, e):
        res = geom.segments_intersect(edges[i], edges[j], e)
        if not res.meets:
            continue
        if j == i + 1:
            shared = c.vertices[j]
        elif closed and i == 0 and j == h - 1 and h > 2:
            shared = c.vertices[0]
        else:
            out.append(((i, j), res.point))
            continue
        if res.kind == "overlap" or geom.distance(res.point, shared) > e:
            out.append(((i, j), res.point))
    return out


def verify(c: Chain, g: GridSpec, box: Box, kind: Optional[str] = None,
           eps: Optional[float] = None) -> VerificationReport:
    """Fill a full report for chain ``c`` over grid ``g`` inside ``box``.

    ``kind`` overrides the chain's own kind (path, trail or cycle).
    Paths and cycles must visit each grid point exactly once, trails at
    least once.
    """
    e = geom._tol(eps)
    kind = kind or c.kind
    if c.dim != g.k or box.dim != g.k:
        raise ValueError(f"dimension mismatch: chain {c.dim}, grid {g.k}, box {box.dim}")
    verts = c.vertices
    edges = c.edges
    closed = kind == "cycle"
    if closed and geom.distance(verts[0], verts[-1]) > e:
        raise ValueError("cycle verification needs a closed chain")

    chain = _rekind(c, kind)
    counts = {p: visit_count(p, chain, e) for p in enumerate_points(g)}
    if kind == "trail":
        covers = all(n >= 1 for n in counts.values())
    else:
        covers = all(n == 1 for n in counts.values())

    repeated = _has_repeated_edges(c, e)

    triples = [(verts[i], verts[i + 1], verts[i + 2]) for i in range(len(verts) - 2)]
    if closed and len(verts) > 3:
        triples.append((verts[-2], verts[0], verts[1]))
    noncollinear = not any(geom.collinear(a, b, d, e) for a, b, d in triples)

    witnesses = crossings(chain, e)
    contained = all(geom.contained_in(s, box, e) for s in edges)

    lengths = sorted(s.length for s in edges)
    classes = _length_classes(lengths, e)

    if closed:
        cycle_class = "regular" if is_grid_point(verts[0], g, e) else "smart"
    else:
        cycle_class = "not_cycle"

    return VerificationReport(
        covers_all=covers,
        visit_counts=counts,
        repeated_edges=repeated,
        noncollinear_ok=noncollinear,
        uncrossing=not witnesses,
        crossing_witnesses=witnesses,
        containment_ok=contained,
        link_length_h=len(edges),
        length_classes=classes,
        total_length_lambda=math.fsum(lengths),
        cycle_class=cycle_class,
        kind=kind,
        box=box,
    )


def _rekind(c: Chain, kind: str) -> Chain:
    if c.kind == kind:
        return c
    # bypass the constructor: a reinterpreted chain keeps its vertices as-is
    clone = object.__new__(Chain)
    for name in ("vertices", "label", "steiner_flags", "grid"):
        object.__setattr__(clone, name, getattr(c, name))
    object.__setattr__(clone, "kind", kind)
    return clone
