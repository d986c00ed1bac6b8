"""Closed-form link counts and bounds, in exact integer/rational arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .grid import GridSpec
from .mlai import mlai_edge_count as mlai_count

PARSES = ("literal", "alt")


def _ceil_div(num: int, den: int) -> int:
    return -(-num // den)


def lower_bound(g: GridSpec, parse: str = "alt") -> int:
    """Link-length lower bound for any covering trail, k >= 3 and all n_i >= 3.

    The typeset formula admits two groupings of its numerator:

    * ``"literal"``: 3 * (prod(n) * sum(n_1..n_{k-2}) + k - 3)
    * ``"alt"``:     3 * (prod(n) + sum(n_1..n_{k-2}) + k - 3)

    both divided by 2 n_k + n_{k-1} - 3, rounded up, plus k - 2.
    """
    if g.k < 3 or g.dims[0] < 3:
        raise ValueError(f"lower bound is stated for k >= 3 and n_i >= 3, got {g.dims}")
    prod = g.size
    head = sum(g.dims[: g.k - 2])
    if parse == "literal":
        num = 3 * (prod * head + g.k - 3)
    elif parse == "alt":
        num = 3 * (prod + head + g.k - 3)
    else:
        raise ValueError(f"parse must be one of {PARSES}")
    den = 2 * g.dims[-1] + g.dims[-2] - 3
    return _ceil_div(num, den) + g.k - 2


def efficiency_ratio(g: GridSpec) -> Fraction:
    """Links per grid point, equal to 3/n_k - 2/prod(n)."""
    return Fraction(mlai_count(g), g.size)


def check_path_count(k: int) -> int:
    """ceil(20 * 3^(k-3)) - 2 links for the stretched-box paths of G_{3,...,3}."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if k == 2:
        return _ceil_div(20, 3) - 2
    return 20 * 3 ** (k - 3) - 2


def check_path_count_sum(k: int) -> int:
    """The same count assembled as 18 * 3^(k-3) plus 4 * 3^j per lifted bridge."""
    if k < 3:
        raise ValueError("k must be at least 3")
    return 18 * 3 ** (k - 3) + sum(4 * 3 ** j for j in range(k - 3))


def trail_count(k: int) -> int:
    """(13 * 3^(k-2) - 3) / 2 links when trails may save one link per bridge."""
    if k < 3:
        raise ValueError("k must be at least 3")
    return (13 * 3 ** (k - 2) - 3) // 2


def trail_count_sum(k: int) -> int:
    if k < 3:
        raise ValueError("k must be at least 3")
    return 18 * 3 ** (k - 3) + sum(3 ** j for j in range(1, k - 2))


@dataclass(frozen=True)
class BoundReport:
    dims: tuple
    literal_parse: Optional[int]
    alt_parse: Optional[int]
    mlai_count: int
    ratio: Fraction
    literal_consistent: Optional[bool]
    consistent: Optional[bool]

    def as_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "literal_parse": self.literal_parse,
            "alt_parse": self.alt_parse,
            "mlai_count": self.mlai_count,
            "ratio": str(self.ratio),
            "literal_consistent": self.literal_consistent,
            "consistent": self.consistent,
        }


def bound_report(g: GridSpec) -> BoundReport:
    """Both lower-bound parses next to the constructive count.

    A parse is consistent when it does not exceed the count of a path
    that actually exists; the lower bounds are ``None`` outside their
    stated domain.
    """
    count = mlai_count(g)
    if g.k >= 3 and g.dims[0] >= 3:
        lit, alt = lower_bound(g, "literal"), lower_bound(g, "alt")
        lit_ok, alt_ok = lit <= count, alt <= count
    else:
        lit = alt = lit_ok = alt_ok = None
    return BoundReport(g.dims, lit, alt, count, efficiency_ratio(g), lit_ok, alt_ok)
