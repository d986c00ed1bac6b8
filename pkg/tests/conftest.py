import math
import sys

import pytest

from gridpath import constructions as C
from gridpath import geom
from gridpath.grid import GridSpec, maabb, raabb
from gridpath.mlai import generate_mlai

SQ15 = math.sqrt(15)

# reference coverings of G33 and G333
P33_REFERENCE = [
    (0, 0), (0, 2), (0.5, 2 - SQ15 / 2), (1, 2), (1, 0), (1.5, SQ15 / 2), (2, 0), (2, 2),
]
_lo, _hi = 2 - SQ15 / 2, SQ15 / 2
P333_REFERENCE = [
    (0, 0, 0), (0, 0, 2), (0.5, 0, _lo), (1, 0, 2), (1, 0, 0), (1.5, 0, _hi), (2, 0, 0),
    (2, 0, 2), (2, 0.5, _lo), (2, 1, 2), (2, 1, 0), (1.5, 1, _hi), (1, 1, 0), (1, 1, 2),
    (0.5, 1, _lo), (0, 1, 2), (0, 1, 0), (0, 1.5, _hi), (0, 2, 0), (0, 2, 2),
    (0.5, 2, _lo), (1, 2, 2), (1, 2, 0), (1.5, 2, _hi), (2, 2, 0), (2, 2, 2),
]


def _tight(chain):
    return geom.tight_aabb(chain.vertices)


# name -> (factory, grid, box factory)
BUNDLED = {
    "p33": (lambda: generate_mlai(C.G33), C.G33, lambda c: maabb(C.G33)),
    "p333": (lambda: generate_mlai(C.G333), C.G333, lambda c: maabb(C.G333)),
    "m33": (lambda: C.m_path(2), C.G33, lambda c: maabb(C.G33)),
    "m333": (lambda: C.m_path(3), C.G333, lambda c: maabb(C.G333)),
    "check33": (lambda: C.check_path(2), C.G33, _tight),
    "check333": (lambda: C.check_path(3), C.G333, _tight),
    "f222": (lambda: C.circuit_f222("F"), C.G222, lambda c: raabb(C.G222)),
    "fprime222": (lambda: C.circuit_f222("F_prime"), C.G222, lambda c: raabb(C.G222)),
    "pbar222": (lambda: C.pbar_path(C.PBAR_OPT_X), C.G222, _tight),
    "pbarbar222": (lambda: C.pbarbar_path(1e-7), C.G222, _tight),
    "conclusion222": (lambda: C.conclusion_path_222(), C.G222, _tight),
    "cube4": (lambda: generate_mlai(GridSpec((2, 2, 2, 2))), GridSpec((2, 2, 2, 2)),
              lambda c: maabb(GridSpec((2, 2, 2, 2)))),
}


@pytest.fixture(params=sorted(BUNDLED))
def bundled(request):
    make, grid, box = BUNDLED[request.param]
    chain = make()
    return request.param, chain, grid, box(chain)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[n])
