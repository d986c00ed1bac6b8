"""Uncrossing covering paths whose links all have length n_k - 1.

Every grid column (fixed x_1..x_{k-1}, x_k spanning [0, n_k - 1]) is
covered by one vertical link. Columns are visited in snake order over
x_1..x_{k-1} (x_1 fastest) and consecutive columns are joined by two links
through a Steiner point at the midpoint of the one coordinate that changes.
The Steiner height is picked so that both joining links have length
n_k - 1: low ("V") when leaving a column top, high ("Lambda") when leaving
a column bottom. Within a layer this sweeps along x_1; between layers the
same rule produces the bridges.
"""

from __future__ import annotations

import math

from .chain import Chain
from .grid import GridSpec


def _grid(g) -> GridSpec:
    g = g if isinstance(g, GridSpec) else GridSpec(tuple(g))
    if g.k < 2:
        raise ValueError("the generator needs k >= 2; use line_path() for k = 1")
    if g.dims[0] < 2:
        raise ValueError(f"every axis needs at least 2 points, got {g.dims}")
    return g


def snake_order(dims) -> list:
    """Boustrophedon order over the index box, first axis fastest.

    Consecutive entries differ by +-1 in exactly one coordinate and the
    last entry is a corner of the box.
    """
    if not dims:
        return [()]
    head, last = dims[:-1], dims[-1]
    inner = snake_order(head)
    out = []
    for v in range(last):
        seq = inner if v % 2 == 0 else inner[::-1]
        out.extend(idx + (v,) for idx in seq)
    return out


def mlai_edge_count(g) -> int:
    g = _grid(g)
    if g.dims[-1] < 3:
        raise ValueError("the 3*prod - 2 count needs n_k >= 3")
    return 3 * math.prod(g.dims[:-1]) - 2


def generate_mlai(g) -> Chain:
    """Build the covering path for ``g`` (all axes >= 2, k >= 2).

    ``g`` is a GridSpec or a non-decreasing sequence of sizes.
    """
    g = _grid(g)
    if g.dims[-1] == 2:
        return hypercube_path(g.k)

    L = float(g.dims[-1] - 1)
    rise = math.sqrt(L * L - 0.25)
    heights = {0.0: rise, L: L - rise}

    verts, flags = [], []
    z = 0.0
    bases = snake_order(g.dims[:-1])
    for i, base in enumerate(bases):
        col = tuple(float(c) for c in base)
        verts.append(col + (z,))
        z = L - z
        verts.append(col + (z,))
        flags += [False, False]
        if i + 1 < len(bases):
            nxt = bases[i + 1]
            mid = tuple((a + b) / 2 for a, b in zip(base, nxt))
            verts.append(mid + (heights[z],))
            flags.append(True)
    return Chain(tuple(verts), "path", f"mlai {g}", tuple(flags), g)


def hypercube_path(k: int) -> Chain:
    """Reflected Gray-code path over {0,1}^k with 2^k - 1 unit links.

    The last axis flips fastest, so k = 2 gives (0,0)-(0,1)-(1,1)-(1,0).
    """
    if k < 1:
        raise ValueError("k must be positive")
    verts = []
    for i in range(2 ** k):
        code = i ^ (i >> 1)
        verts.append(tuple(float((code >> (k - 1 - j)) & 1) for j in range(k)))
    g = GridSpec((2,) * k)
    return Chain(tuple(verts), "path", f"mlai {g}", (False,) * len(verts), g)


def line_path(n1: int) -> Chain:
    """The single-link covering path of a one-dimensional grid."""
    if n1 < 2:
        raise ValueError("a one-dimensional grid needs at least 2 points")
    g = GridSpec((n1,))
    return Chain(((0.0,), (float(n1 - 1),)), "path", f"mlai {g}", (False, False), g)
