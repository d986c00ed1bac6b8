"""Fixed covering chains for small grids.

Every radical coordinate is spelled out once as a module constant and
evaluated in double precision at import.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .chain import Chain
from .grid import GridSpec

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT5 = math.sqrt(5.0)
SQRT10 = math.sqrt(10.0)
SQRT13 = math.sqrt(13.0)
PHI = (1 + SQRT5) / 2

G33 = GridSpec((3, 3))
G333 = GridSpec((3, 3, 3))
G222 = GridSpec((2, 2, 2))

# M-paths, all links sqrt(5)
_M_TAIL = math.sqrt(5 / 2)
_M333_XY = SQRT10 / 12 * (6 - math.sqrt(24 - 3 * SQRT10))
_M333_Z = 0.5 * math.sqrt(5 / 3 * (4 + SQRT10))

M33_VERTICES = (
    (1, 2), (2, 0), (0, 1), (2, 2), (1, 0), (0, 2), (2, 1), (0, 0),
    (_M_TAIL, _M_TAIL),
)

M333_VERTICES = (
    (2, 0, 0), (0, 1, 0), (2, 2, 0), (1, 0, 0), (0, 2, 0), (1, 2, 2), (0, 0, 2),
    (2, 1, 2), (0, 2, 2), (1, 0, 2), (2, 2, 2), (0, 1, 2), (2, 0, 2), (2, 2, 1),
    (0, 1, 1), (2, 0, 1), (1, 2, 1), (0, 0, 1), (2, 1, 1), (0, 2, 1), (1, 0, 1),
    (1, 2, 0), (1, 1, 2), (2, 1, 0), (0, 0, 0), (_M_TAIL, _M_TAIL, 0),
    (_M333_XY, _M333_XY, _M333_Z),
)

# check-paths: links of length 2 in a box stretched to 4 - sqrt(3)
_LO = 2 - SQRT3
_HI = 4 - SQRT3

CHECK33_VERTICES = ((0, 2), (0, 0), (2, 0), (2, 2), (1, _LO), (1, _HI))

# S5 lies on the circle where the radius-2 spheres around these meet
SPHERE_A = (0.0, 2.0, 2.0)
SPHERE_B = (_HI, 1.0, 1.0)
S5_CIRCLE_CENTER = (_HI / 2, 1.5, 1.5)
S5_CIRCLE_RADIUS = math.sqrt(8 * SQRT3 - 5) / 2

S5_X_MIN = 2 - SQRT3 / 2 - math.sqrt((87 + 128 * SQRT3) / 498)
S5_X_MAX = (65 * (2 - SQRT3) - math.sqrt(916 * SQRT3 - 1549)) / (8 * (5 - 2 * SQRT3))
S5_Y_MIN = 1.5 - math.sqrt((466 * SQRT3 - 333) / 249)
S5_Y_MAX = _HI

# where the principal branch hits y = 2 and has to be swapped
S5_SWAP_X = (53 * SQRT3 - 108 + math.sqrt(208 * SQRT3 - 313)) / (8 * (2 * SQRT3 - 5))
S5_SWAP_LOW = (151 - 2 * SQRT3 - math.sqrt(20092 * SQRT3 - 17383)) / 104

# link 12 against the middle layer
COLLISION_RADIUS = math.sqrt(94725 - 21288 * SQRT3) / 122
COLLISION_POINT = (
    (192 - 85 * SQRT3) / 122,
    (115 - 22 * SQRT3) / 122,
    (115 - 22 * SQRT3) / 122,
)
# links 13 and 15 would only meet here, which has y < z
FORBIDDEN_Y = (161 + 2 * SQRT3 - math.sqrt(20092 * SQRT3 - 17383)) / 104

# covering cycles of G222
_F_LO = -(1 + SQRT13) / 6
_F_HI = (7 + SQRT13) / 6
_F_APEX_LO = -(1 + SQRT13) / 4
_F_APEX_HI = (5 + SQRT13) / 4
_F_APEX_Z = (3 + SQRT13) / 4
F_LENGTH = SQRT2 * (4 + SQRT13) / 3

F222_VERTICES = (
    (_F_LO, _F_LO, 0), (_F_HI, _F_HI, 0), (_F_APEX_LO, 0.5, _F_APEX_Z),
    (_F_HI, _F_LO, 0), (_F_LO, _F_HI, 0), (_F_APEX_HI, 0.5, _F_APEX_Z),
    (_F_LO, _F_LO, 0),
)

_FP_LO = 1 - SQRT2
_FP_Z = 2 * SQRT3 - math.sqrt(1.5)
FPRIME_LENGTH = 4 - SQRT2

FPRIME222_VERTICES = (
    (_FP_LO, _FP_LO, 0), (SQRT2, SQRT2, 0), (0.5, 0.5, _FP_Z), (SQRT2, _FP_LO, 0),
    (_FP_LO, SQRT2, 0), (0.5, 0.5, _FP_Z), (_FP_LO, _FP_LO, 0),
)

# minimum AABB volume family
PBAR_OPT_X = (3 + SQRT5) / 4
PBAR_OPT_Y = (3 + SQRT5) / 2
EPS_MAX = (PHI - 1) / 2

# six links of length 1 + sqrt(2), allowed to cross
_C = 1 + 1 / SQRT2
CONCLUSION_LENGTH = 1 + SQRT2
CONCLUSION222_VERTICES = (
    (-1 / SQRT2, 0, _C), (1, 0, 0), (-1 / SQRT2, _C, 0), (0.5, 0.5, _C),
    (_C, _C, 0), (0, 0, 0), (_C, 0, _C),
)


def m_path(k: int) -> Chain:
    """Self-intersecting covering path of G33 (k=2) or G333 (k=3), links sqrt(5)."""
    if k == 2:
        return Chain(M33_VERTICES, "path", "m33", grid=G33)
    if k == 3:
        return Chain(M333_VERTICES, "path", "m333", grid=G333)
    raise ValueError(f"m_path exists for k in (2, 3), not {k}")


@dataclass(frozen=True)
class S5Solution:
    x: float
    y: float
    z: float
    branch: str  # "principal" or "boundary_swap"

    @property
    def point(self) -> tuple:
        return (self.x, self.y, self.z)


def s5_interval() -> tuple:
    """Admissible x range for the bridging Steiner point (~0.346647, ~0.918696)."""
    return S5_X_MIN, S5_X_MAX


def s5_discriminant(x: float) -> float:
    return (32 * SQRT3 - 84) * x * x + (432 - 212 * SQRT3) * x + 336 * SQRT3 - 601


def s5_solve(x: float, tol: float = 1e-9) -> S5Solution:
    """Intersect the two radius-2 spheres at abscissa ``x``.

    ``y`` takes the + root and ``z`` the - root. Where that puts ``y`` on
    2 the other intersection point (``y`` and ``z`` swapped) is returned.
    """
    if not S5_X_MIN - tol <= x <= S5_X_MAX + tol:
        raise ValueError(f"x={x} outside the admissible interval [{S5_X_MIN}, {S5_X_MAX}]")
    disc = s5_discriminant(x)
    if disc < 0:
        if disc < -tol:
            raise ValueError(f"negative discriminant {disc} at x={x}")
        disc = 0.0
    root = math.sqrt(disc)
    base = (8 - 2 * SQRT3) * x + 8 * SQRT3 - 13
    y, z = (base + root) / 4, (base - root) / 4
    if abs(y - 2) <= tol:
        return S5Solution(x, z, y, "boundary_swap")
    return S5Solution(x, y, z, "principal")


def collision_radius() -> float:
    """Sphere radius at which link 12 would first reach the middle layer (< 2)."""
    return COLLISION_RADIUS


def check_path(k: int, s5_x: float = 0.7) -> Chain:
    """Uncrossing covering path of G33 / G333 with links of length 2.

    It leaves the minimum box: one axis (two for k=3) reaches 4 - sqrt(3).
    """
    if k == 2:
        return Chain(CHECK33_VERTICES, "path", "check33", grid=G33)
    if k != 3:
        raise ValueError(f"check_path exists for k in (2, 3), not {k}")
    s5 = s5_solve(s5_x)
    verts = (
        (0, 2, 0), (0, 0, 0), (2, 0, 0), (2, 2, 0), (1, _LO, 0), (1, _HI, 0),
        (1, _HI, 2), (1, _LO, 2), (2, 2, 2), (2, 0, 2), (0, 0, 2), (0, 2, 2),
        s5.point,
        (_HI, 1, 1), (_LO, 1, 1), (2, 0, 1), (0, 0, 1), (0, 2, 1), (2, 2, 1),
    )
    return Chain(verts, "path", f"check333 x={s5_x!r}", grid=G333)


def circuit_f222(variant: str = "F") -> Chain:
    """Six-link smart covering cycles of G222 (``"F"`` or ``"F_prime"``)."""
    if variant == "F":
        return Chain(F222_VERTICES, "cycle", "f222", grid=G222)
    if variant in ("F_prime", "Fprime", "F'"):
        return Chain(FPRIME222_VERTICES, "cycle", "fprime222", grid=G222)
    raise ValueError(f"unknown circuit variant {variant!r}")


def pbar_steiner_y(x_s1: float) -> float:
    # keeps (1,1,1) on the link from (x,0,x) to (1/2,y,1/2)
    return (1 - 2 * x_s1) / (2 * (1 - x_s1))


def pbar_path(x_s1: float) -> Chain:
    """The one-parameter G222 family; covering for x_s1 > 1."""
    if not x_s1 > 0:
        raise ValueError("x_s1 must be positive")
    if x_s1 == 1:
        raise ValueError("x_s1 = 1 is a pole of the Steiner height")
    y = pbar_steiner_y(x_s1)
    verts = (
        (0, 1, 0), (0, 0, 0), (x_s1, 0, x_s1), (0.5, y, 0.5), (1 - x_s1, 0, x_s1),
        (1, 0, 0), (1, 1, 0),
    )
    return Chain(verts, "path", f"pbar222 x={x_s1!r}", grid=G222)


def pbar_volume(x_s1: float) -> float:
    """Volume (2x - 1) * y * x of the tight box of ``pbar_path(x_s1)``, x > 1."""
    return (2 * x_s1 - 1) * pbar_steiner_y(x_s1) * x_s1


def _volume_stationarity(x: float) -> float:
    return x ** 3 - 2 * x ** 2 + x - 0.125


def minimize_aabb_volume() -> float:
    """Stationary point x > 1 of the box volume, i.e. (3 + sqrt5) / 4."""
    return brentq(_volume_stationarity, 1.0, 2.0, xtol=1e-15, rtol=4 * 2.0 ** -52)


def pbarbar_path(eps: float) -> Chain:
    """Uncrossing perturbation of ``pbar_path((1 + phi) / 2)`` for 0 < eps < (phi - 1) / 2."""
    if not 0 < eps < EPS_MAX:
        raise ValueError(f"eps must lie in (0, {EPS_MAX}), got {eps}")
    half = (1 + PHI) / 2
    verts = (
        (0, 1, 0), (0, 0, 0), (half, 0, half), (0.5, 1 + PHI, 0.5),
        ((1 - PHI) / 2 + eps, 2 * PHI * eps, half - eps),
        (1, 4 * PHI * eps / (1 - PHI + 2 * eps), 0),
        (1, 1, 0),
    )
    return Chain(verts, "path", f"pbarbar222 eps={eps!r}", grid=G222)


def conclusion_path_222() -> Chain:
    """Self-intersecting six-link covering path of G222, links 1 + sqrt(2)."""
    return Chain(CONCLUSION222_VERTICES, "path", "conclusion222", grid=G222)


FIXED = {
    "m33": lambda x=None, eps=None: m_path(2),
    "m333": lambda x=None, eps=None: m_path(3),
    "check33": lambda x=None, eps=None: check_path(2),
    "check333": lambda x=None, eps=None: check_path(3, 0.7 if x is None else x),
    "f222": lambda x=None, eps=None: circuit_f222("F"),
    "fprime222": lambda x=None, eps=None: circuit_f222("F_prime"),
    "pbar222": lambda x=None, eps=None: pbar_path(PBAR_OPT_X if x is None else x),
    "pbarbar222": lambda x=None, eps=None: pbarbar_path(1e-7 if eps is None else eps),
    "conclusion222": lambda x=None, eps=None: conclusion_path_222(),
}


def fixed(name: str, x: float = None, eps: float = None) -> Chain:
    """Look up a named construction (the names used by the command line)."""
    try:
        make = FIXED[name]
    except KeyError:
        raise ValueError(f"unknown construction {name!r}; choose from {sorted(FIXED)}") from None
    return make(x=x, eps=eps)
