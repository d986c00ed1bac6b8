"""Command-line front end: generate, verify, bound and export covering chains.

Exit codes: 0 success, 1 failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import geom
from .bounds import bound_report
from .chain import ChainError
from .constructions import FIXED, fixed, s5_solve
from .grid import GridSpec, maabb, raabb
from .iox import PROJECTIONS, export_figure, read_chain, write_chain
from .mlai import generate_mlai
from .verify import verify

PREDICATES = ("covers", "edges", "collinear", "uncrossing", "box")


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, path: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_box(tokens, grid: GridSpec, chain) -> geom.Box:
    mode = tokens[0]
    if mode == "maabb":
        return maabb(grid)
    if mode == "raabb":
        return raabb(grid)
    if mode == "tight":
        return geom.tight_aabb(chain.vertices)
    if mode == "custom":
        spans = tokens[1:]
        if len(spans) != grid.k:
            raise UsageError(f"custom box needs one LO..HI per axis ({grid.k}), got {len(spans)}")
        lo, hi = [], []
        for s in spans:
            try:
                a, b = s.split("..")
                lo.append(float(a))
                hi.append(float(b))
            except ValueError:
                raise UsageError(f"bad axis range {s!r}, expected LO..HI") from None
        return geom.Box(tuple(lo), tuple(hi))
    raise UsageError(f"unknown box {mode!r}; use maabb, raabb, tight or custom LO..HI ...")


def _required(spec: str, kind: str) -> list:
    if spec is None:
        # crossing is a path property; trails and circuits may self-intersect
        req = [p for p in PREDICATES if p != "uncrossing" or kind == "path"]
        return req
    req = [p.strip() for p in spec.split(",") if p.strip()]
    unknown = set(req) - set(PREDICATES)
    if unknown:
        raise UsageError(f"unknown predicates {sorted(unknown)}; choose from {PREDICATES}")
    return req


def cmd_gen(args) -> int:
    if args.what == "mlai":
        if not args.dims:
            raise UsageError("gen mlai needs --dims")
        chain = generate_mlai(GridSpec.parse(args.dims))
    else:
        if not args.name:
            raise UsageError("gen fixed needs --name")
        chain = fixed(args.name, x=args.x, eps=args.param_eps)
    _write(write_chain(chain), args.out)
    return 0


def cmd_verify(args) -> int:
    chain = read_chain(_read(args.file))
    grid = GridSpec.parse(args.grid)
    box = _parse_box(args.box, grid, chain)
    kind = args.mode or chain.kind
    report = verify(chain, grid, box, kind=kind)
    checks = {
        "covers": report.covers_all,
        "edges": not report.repeated_edges,
        "collinear": report.noncollinear_ok,
        "uncrossing": report.uncrossing,
        "box": report.containment_ok,
    }
    required = _required(args.require, kind)
    failed = [p for p in required if not checks[p]]
    out = report.as_dict()
    out["label"] = chain.label
    out["required"] = required
    out["failed"] = failed
    out["ok"] = not failed
    print(json.dumps(out, indent=2))
    return 1 if failed else 0


def cmd_bounds(args) -> int:
    rep = bound_report(GridSpec.parse(args.dims))
    print(json.dumps(rep.as_dict(), indent=2))
    return 0


def cmd_export(args) -> int:
    chain = read_chain(_read(args.file))
    _write(export_figure(chain, args.proj), args.out)
    return 0


def cmd_s5(args) -> int:
    s = s5_solve(args.x)
    print(json.dumps({"x": s.x, "y": s.y, "z": s.z, "branch": s.branch}, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gridpath", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--eps", dest="geo_eps", type=float, default=None,
                        help="geometric tolerance in grid units (default $GRIDPATH_EPS or 1e-9)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a chain document")
    p.add_argument("what", choices=("mlai", "fixed"))
    p.add_argument("--dims", help="grid sizes, e.g. 3,3,3")
    p.add_argument("--name", choices=sorted(FIXED))
    p.add_argument("--x", type=float, help="construction parameter (check333: S5 abscissa; pbar222: x_S1)")
    p.add_argument("--eps", dest="param_eps", type=float, help="perturbation for pbarbar222")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="verify a chain document")
    p.add_argument("file", help="chain document, - for stdin")
    p.add_argument("--grid", required=True)
    p.add_argument("--box", nargs="+", default=["maabb"], metavar="BOX",
                   help="maabb | raabb | tight | custom LO..HI [LO..HI ...]")
    p.add_argument("--mode", choices=("path", "trail", "cycle"))
    p.add_argument("--require", help=f"comma list from {','.join(PREDICATES)}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="print link-count bounds")
    p.add_argument("--dims", required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("export", help="export an SVG drawing")
    p.add_argument("file")
    p.add_argument("--proj", choices=PROJECTIONS, default="xy")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("s5", help="solve for the bridging Steiner point")
    p.add_argument("--x", type=float, required=True)
    p.set_defaults(func=cmd_s5)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        eps = geom.get_eps() if args.geo_eps is None else args.geo_eps
        with geom.tolerance(eps):
            return args.func(args)
    except (UsageError, ChainError, ValueError, OSError) as exc:
        print(f"gridpath: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
