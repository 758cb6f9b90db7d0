"""JSON file format for diagrams and cut presentations.

Diagram::

    {"type": "diagram", "name": "hopf",
     "crossings": [["1","2","3","4"], ["2","1","4","3"]],
     "edges": {"1": ["X1.b", "X0.a"], ...},
     "free_loops": 0}

Edge ends are ``X<k>.<slot>`` or ``@<point>``. ``edges`` may be omitted, in
which case orientation is inferred from the under-strands (optionally helped
by ``points``: {label: [incoming, outgoing]}).

Cut::

    {"type": "cut", "name": "solomon_cut", "n": 2,
     "tangle1": {...diagram...}, "tangle2": {...diagram...},
     "boundary": [[1, "t1", "u1", "in"], ...]}
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .diagrams import (BoundaryRecord, CutPresentation, DiagramError, OrientedDiagram, format_end,
                       parse_end, validate_cut)


class ParseError(ValueError):
    """Malformed input file; the message names the offending field or line."""


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise ParseError(msg)


def diagram_from_data(data: dict, where: str = "diagram") -> OrientedDiagram:
    _expect(isinstance(data, dict), f"{where}: expected an object")
    cr = data.get("crossings", [])
    _expect(isinstance(cr, list), f"{where}.crossings: expected a list")
    for i, c in enumerate(cr):
        _expect(isinstance(c, list) and len(c) == 4, f"{where}.crossings[{i}]: need 4 edge ids")
    loops = data.get("free_loops", 0)
    _expect(isinstance(loops, int) and loops >= 0, f"{where}.free_loops: non-negative integer required")
    ids = tuple(str(x) for x in data.get("crossing_ids", ()))
    name = str(data.get("name", ""))
    try:
        if "edges" in data:
            edges_raw = data["edges"]
            _expect(isinstance(edges_raw, dict), f"{where}.edges: expected an object")
            edges = {}
            for e, ends in edges_raw.items():
                _expect(isinstance(ends, list) and len(ends) == 2, f"{where}.edges[{e}]: need [tail, head]")
                edges[str(e)] = (parse_end(ends[0]), parse_end(ends[1]))
            counts: dict[str, int] = {}
            for c in cr:
                for e in c:
                    counts[str(e)] = counts.get(str(e), 0) + 1
            for e, k in counts.items():
                _expect(k <= 2, f"{where}: edge {e} appears in {k} crossing slots")
            return OrientedDiagram(tuple(tuple(str(e) for e in c) for c in cr), edges, loops, ids, name)
        points = {str(k): tuple(v) for k, v in data.get("points", {}).items()}
        return OrientedDiagram.from_pd(cr, points, loops, name, ids)
    except DiagramError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def diagram_to_data(d: OrientedDiagram) -> dict:
    out: dict[str, Any] = {"type": "diagram"}
    if d.name:
        out["name"] = d.name
    out["crossings"] = [list(c) for c in d.crossings]
    if d.crossing_ids != tuple(str(k) for k in range(len(d.crossings))):
        out["crossing_ids"] = list(d.crossing_ids)
    out["edges"] = {e: [format_end(t), format_end(h)] for e, (t, h) in d.edges.items()}
    out["free_loops"] = d.free_loops
    return out


def cut_from_data(data: dict) -> CutPresentation:
    _expect(isinstance(data, dict), "cut: expected an object")
    n = data.get("n")
    _expect(isinstance(n, int) and n >= 0, "cut.n: non-negative integer required")
    _expect("tangle1" in data and "tangle2" in data, "cut: needs tangle1 and tangle2")
    t1 = diagram_from_data(data["tangle1"], "tangle1")
    t2 = diagram_from_data(data["tangle2"], "tangle2")
    recs = []
    for i, r in enumerate(data.get("boundary", [])):
        _expect(isinstance(r, list) and len(r) == 4, f"cut.boundary[{i}]: need [position, edge1, edge2, in|out]")
        _expect(isinstance(r[0], int), f"cut.boundary[{i}]: position must be an integer")
        recs.append(BoundaryRecord(r[0], str(r[1]), str(r[2]), str(r[3])))
    cp = CutPresentation(n, t1, t2, tuple(recs), str(data.get("name", "")))
    check = validate_cut(cp)
    if not check:
        raise ParseError(f"inadmissible cut: {check.problems[0]}")
    return cp


def cut_to_data(cp: CutPresentation) -> dict:
    out: dict[str, Any] = {"type": "cut"}
    if cp.name:
        out["name"] = cp.name
    out["n"] = cp.n
    out["tangle1"] = diagram_to_data(cp.tangle1)
    out["tangle2"] = diagram_to_data(cp.tangle2)
    out["boundary"] = [[r.position, r.edge1, r.edge2, r.direction] for r in cp.boundary]
    return out


def loads(text: str) -> OrientedDiagram | CutPresentation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    _expect(isinstance(data, dict), "top level must be an object")
    kind = data.get("type") or ("cut" if "tangle1" in data else "diagram")
    if kind == "cut":
        return cut_from_data(data)
    if kind == "diagram":
        return diagram_from_data(data)
    raise ParseError(f"unknown type {kind!r}")


def dumps(obj: OrientedDiagram | CutPresentation) -> str:
    data = cut_to_data(obj) if isinstance(obj, CutPresentation) else diagram_to_data(obj)
    return json.dumps(data, indent=1)


def load(path: str | Path):
    return loads(Path(path).read_text())


def parse_diagram(text: str) -> OrientedDiagram:
    obj = loads(text)
    if isinstance(obj, CutPresentation):
        raise ParseError("expected a diagram, got a cut presentation")
    return obj


def parse_cut(text: str) -> CutPresentation:
    obj = loads(text)
    if not isinstance(obj, CutPresentation):
        raise ParseError("expected a cut presentation, got a diagram")
    return obj


def same_diagram(a: OrientedDiagram, b: OrientedDiagram) -> bool:
    return (a.crossings == b.crossings and dict(a.edges) == dict(b.edges)
            and a.free_loops == b.free_loops and a.crossing_ids == b.crossing_ids)


def same_cut(a: CutPresentation, b: CutPresentation) -> bool:
    return (a.n == b.n and same_diagram(a.tangle1, b.tangle1) and same_diagram(a.tangle2, b.tangle2)
            and sorted(a.boundary, key=lambda r: r.position) == sorted(b.boundary, key=lambda r: r.position))
