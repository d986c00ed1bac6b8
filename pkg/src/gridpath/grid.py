"""Grid specifications, their bounding boxes and the corner set."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .geom import Box, Point


@dataclass(frozen=True)
class GridSpec:
    """The lattice {0..n1-1} x ... x {0..nk-1} with n1 <= ... <= nk."""

    dims: tuple

    def __post_init__(self):
        dims = tuple(self.dims)
        if not dims:
            raise ValueError("a grid needs at least one axis")
        for n in dims:
            if isinstance(n, bool) or int(n) != n or n < 1:
                raise ValueError(f"grid sizes must be positive integers, got {dims}")
        dims = tuple(int(n) for n in dims)
        if list(dims) != sorted(dims):
            raise ValueError(f"grid sizes must be non-decreasing, got {dims}; see sorted_grid()")
        object.__setattr__(self, "dims", dims)

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """Parse ``"3,3,3"``."""
        try:
            dims = tuple(int(t) for t in text.replace(" ", "").split(","))
        except ValueError:
            raise ValueError(f"cannot parse grid sizes from {text!r}") from None
        return cls(dims)

    @property
    def k(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        return math.prod(self.dims)

    def __str__(self):
        return ",".join(map(str, self.dims))


def sorted_grid(dims: Sequence[int]) -> tuple:
    """Sort arbitrary sizes into a GridSpec.

    Returns ``(grid, perm)`` where ``perm[i]`` is the original axis that
    became axis ``i``.
    """
    perm = tuple(sorted(range(len(dims)), key=lambda i: dims[i]))
    return GridSpec(tuple(dims[i] for i in perm)), perm


def enumerate_points(g: GridSpec) -> list:
    """All grid points in lexicographic order, as float tuples."""
    return [tuple(float(c) for c in p) for p in itertools.product(*(range(n) for n in g.dims))]


def maabb(g: GridSpec) -> Box:
    return Box((0.0,) * g.k, tuple(float(n - 1) for n in g.dims))


def raabb(g: GridSpec) -> Box:
    return Box((0.0,) * g.k, tuple(float(n) for n in g.dims))


def corner_set(g: GridSpec) -> list:
    """Points whose every coordinate sits at an axis extreme (deduplicated)."""
    axes = [sorted({0, n - 1}) for n in g.dims]
    return [tuple(float(c) for c in p) for p in itertools.product(*axes)]


def is_grid_point(p: Point, g: GridSpec, eps: float) -> bool:
    if len(p) != g.k:
        return False
    for c, n in zip(p, g.dims):
        r = round(c)
        if abs(c - r) > eps or not 0 <= r <= n - 1:
            return False
    return True
