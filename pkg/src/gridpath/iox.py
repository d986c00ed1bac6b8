"""Chain documents (JSON text) and SVG figure export."""

from __future__ import annotations

import json
import math
import xml.etree.ElementTree as ET
from typing import Optional

from . import geom
from .chain import Chain, ChainError
from .grid import GridSpec, enumerate_points

FORMAT_VERSION = 1
FIELDS = ("version", "dims", "kind", "label", "vertices", "steiner_flags")


def _num(x: float) -> str:
    # 17 significant digits round-trips every double; -0.0 is written as 0
    return format(x + 0.0, ".17g")


def write_chain(c: Chain) -> str:
    """Serialize ``c``; the output is byte-stable across read/write cycles."""
    rows = ",\n".join("    [" + ", ".join(_num(x) for x in v) + "]" for v in c.vertices)
    dims = json.dumps(list(c.grid.dims)) if c.grid is not None else "null"
    parts = [
        f'  "version": {FORMAT_VERSION}',
        f'  "dims": {dims}',
        f'  "kind": {json.dumps(c.kind)}',
        f'  "label": {json.dumps(c.label, ensure_ascii=False)}',
        f'  "vertices": [\n{rows}\n  ]',
        f'  "steiner_flags": {json.dumps(list(c.steiner_flags))}',
    ]
    return "{\n" + ",\n".join(parts) + "\n}\n"


def read_chain(text: str) -> Chain:
    """Parse a chain document and re-check every chain invariant."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ChainError(f"malformed chain document: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != set(FIELDS):
        raise ChainError(f"chain document must have exactly the fields {FIELDS}")
    if doc["version"] != FORMAT_VERSION:
        raise ChainError(f"unsupported chain document version {doc['version']!r}")
    verts = doc["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, list) for v in verts):
        raise ChainError("vertices must be an array of coordinate arrays")
    for v in verts:
        if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in v):
            raise ChainError(f"non-numeric coordinate in {v}")
    flags = doc["steiner_flags"]
    if not isinstance(flags, list) or not all(isinstance(f, bool) for f in flags):
        raise ChainError("steiner_flags must be an array of booleans")
    grid = GridSpec(tuple(doc["dims"])) if doc["dims"] is not None else None
    return Chain(
        tuple(tuple(float(x) for x in v) for v in verts),
        kind=doc["kind"],
        label=doc["label"],
        steiner_flags=tuple(flags),
        grid=grid,
    )


PROJECTIONS = ("xy", "xz", "yz", "iso")
_AXES = {"xy": (0, 1), "xz": (0, 2), "yz": (1, 2)}


def _projector(projection: str, dim: int):
    if projection == "iso":
        if dim != 3:
            raise ValueError("isometric projection needs a 3D chain")
        c, s = math.cos(math.pi / 6), math.sin(math.pi / 6)
        return lambda p: ((p[0] - p[1]) * c, (p[0] + p[1]) * s - p[2])
    if projection not in _AXES:
        raise ValueError(f"projection must be one of {PROJECTIONS}")
    i, j = _AXES[projection]
    if max(i, j) >= dim:
        raise ValueError(f"projection {projection} needs at least {max(i, j) + 1} dimensions")
    # screen y grows downwards
    return lambda p: (p[i], -p[j])


def _box_segments(box: geom.Box):
    """Edges of the box as point pairs (all 12 edges in 3D)."""
    lo, hi = box.lo, box.hi
    k = len(lo)
    corners = [tuple(hi[a] if (m >> a) & 1 else lo[a] for a in range(k)) for m in range(2 ** k)]
    segs = []
    for m in range(2 ** k):
        for a in range(k):
            if not (m >> a) & 1 and hi[a] > lo[a]:
                segs.append((corners[m], corners[m | (1 << a)]))
    return segs


def export_figure(c: Chain, projection: str = "xy", out: Optional[str] = None,
                  scale: float = 100.0) -> str:
    """Draw ``c`` as SVG: grid dots, Steiner points, numbered directed edges, box.

    Returns the SVG text and also writes it to ``out`` when given.
    """
    if c.dim < 2:
        raise ValueError("figure export needs a chain of dimension >= 2")
    proj = _projector(projection, c.dim)
    grid_pts = enumerate_points(c.grid) if c.grid is not None else []
    box = geom.tight_aabb(list(c.vertices) + grid_pts)
    if c.dim > 3 and projection == "iso":
        raise ValueError("isometric projection needs a 3D chain")

    box_segs = [(proj(a), proj(b)) for a, b in _box_segments(box)]
    verts = [proj(v) for v in c.vertices]
    dots = [proj(p) for p in grid_pts]
    xs = [p[0] for p in verts + dots] + [q[0] for s in box_segs for q in s]
    ys = [p[1] for p in verts + dots] + [q[1] for s in box_segs for q in s]
    pad = 0.4
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - x0 + pad, max(ys) - y0 + pad

    def sx(p):
        return (p[0] - x0) * scale, (p[1] - y0) * scale

    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": _num(w * scale), "height": _num(h * scale),
        "viewBox": f"0 0 {_num(w * scale)} {_num(h * scale)}",
    })
    ET.SubElement(svg, "title").text = f"{c.label} ({projection})"
    defs = ET.SubElement(svg, "defs")
    marker = ET.SubElement(defs, "marker", {
        "id": "arrow", "viewBox": "0 0 10 10", "refX": "10", "refY": "5",
        "markerWidth": "6", "markerHeight": "6", "orient": "auto-start-reverse",
    })
    ET.SubElement(marker, "path", {"d": "M 0 0 L 10 5 L 0 10 z", "fill": "#333"})

    g_box = ET.SubElement(svg, "g", {"class": "box"})
    for a, b in box_segs:
        (x1, y1), (x2, y2) = sx(a), sx(b)
        ET.SubElement(g_box, "line", {
            "x1": _num(x1), "y1": _num(y1), "x2": _num(x2), "y2": _num(y2),
            "stroke": "#999", "stroke-dasharray": "4 3", "fill": "none",
        })

    g_edges = ET.SubElement(svg, "g", {"class": "edges"})
    g_labels = ET.SubElement(svg, "g", {"class": "labels"})
    for n, (a, b) in enumerate(zip(verts, verts[1:]), start=1):
        (x1, y1), (x2, y2) = sx(a), sx(b)
        ET.SubElement(g_edges, "line", {
            "class": "edge", "data-index": str(n),
            "x1": _num(x1), "y1": _num(y1), "x2": _num(x2), "y2": _num(y2),
            "stroke": "#1f4e99", "stroke-width": "2", "marker-end": "url(#arrow)",
        })
        t = ET.SubElement(g_labels, "text", {
            "class": "edge-label", "x": _num((x1 + x2) / 2 + 4), "y": _num((y1 + y2) / 2 - 4),
            "font-size": "12", "fill": "#b00",
        })
        t.text = str(n)

    g_pts = ET.SubElement(svg, "g", {"class": "points"})
    for p in dots:
        x, y = sx(p)
        ET.SubElement(g_pts, "circle", {
            "class": "grid-point", "cx": _num(x), "cy": _num(y), "r": "4", "fill": "#000",
        })
    steiner = {i for i, f in enumerate(c.steiner_flags) if f}
    for i in sorted(steiner):
        x, y = sx(verts[i])
        ET.SubElement(g_pts, "circle", {
            "class": "steiner-point", "cx": _num(x), "cy": _num(y), "r": "4",
            "fill": "#2a2", "stroke": "#050",
        })

    ET.indent(svg)
    text = ET.tostring(svg, encoding="unicode") + "\n"
    if out is not None:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
