"""The polygonal chain value shared by generators, verifier and I/O."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import geom
from .grid import GridSpec, is_grid_point

KINDS = ("path", "trail", "cycle")


class ChainError(ValueError):
    """A vertex sequence violates the chain invariants."""


@dataclass(frozen=True)
class Chain:
    """Directed polygonal chain.

    ``steiner_flags[i]`` is true when vertex ``i`` is not a point of the
    generating grid. For ``kind="cycle"`` the last vertex repeats the first.
    """

    vertices: tuple
    kind: str = "path"
    label: str = ""
    steiner_flags: tuple = ()
    grid: Optional[GridSpec] = field(default=None, compare=True)

    def __post_init__(self):
        verts = tuple(geom.as_point(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if self.kind not in KINDS:
            raise ChainError(f"unknown chain kind {self.kind!r}")
        if len(verts) < 2:
            raise ChainError("a chain needs at least two vertices")
        k = len(verts[0])
        if any(len(v) != k for v in verts):
            raise ChainError("vertices of mixed dimension")
        if self.grid is not None and self.grid.k != k:
            raise ChainError(f"grid has {self.grid.k} axes but vertices have {k}")
        eps = geom.get_eps()
        for i, (u, v) in enumerate(zip(verts, verts[1:])):
            if geom.distance(u, v) <= eps:
                raise ChainError(f"vertices {i} and {i + 1} coincide: {u}")
        if self.kind == "cycle":
            if geom.distance(verts[0], verts[-1]) > eps:
                raise ChainError("a cycle must end where it starts")
        else:
            for i in range(len(verts) - 2):
                if geom.collinear(verts[i], verts[i + 1], verts[i + 2]):
                    raise ChainError(f"edges {i + 1} and {i + 2} are collinear")
        flags = tuple(bool(f) for f in self.steiner_flags)
        if not flags:
            flags = steiner_flags_for(verts, self.grid)
        if len(flags) != len(verts):
            raise ChainError("one steiner flag per vertex is required")
        object.__setattr__(self, "steiner_flags", flags)

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    @property
    def edges(self) -> list:
        return [geom.Segment(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    @property
    def h(self) -> int:
        """Link length: the number of edges."""
        return len(self.vertices) - 1

    def reversed(self) -> "Chain":
        return Chain(self.vertices[::-1], self.kind, self.label, self.steiner_flags[::-1], self.grid)

    def scaled(self, s: float) -> "Chain":
        verts = tuple(tuple(s * c for c in v) for v in self.vertices)
        return Chain(verts, self.kind, self.label, self.steiner_flags, None)


def steiner_flags_for(vertices: Sequence, grid: Optional[GridSpec]) -> tuple:
    """Flag vertices that are not grid points (all False without a grid)."""
    if grid is None:
        return (False,) * len(vertices)
    eps = geom.get_eps()
    return tuple(not is_grid_point(v, grid, eps) for v in vertices)
