"""Oriented link diagrams in planar-diagram form, smoothings, and cut presentations.

A crossing is a 4-tuple of edge ids listed counterclockwise starting at the
incoming under-edge (slots a, b, c, d). The under-strand runs a -> c. The
crossing is positive when the over-strand runs d -> b.

Besides crossings a diagram may contain 2-valent *points*. They mark where a
strand meets an admissible cut; in a tangle they are the open boundary ends.

Edges are stored with explicit (tail, head) ends. An end is ``("x", k, s)``
for slot s in 0..3 of crossing k, or ``("p", label)`` for a point.

State bit 0 joins (a,b) and (c,d); bit 1 joins (a,d) and (b,c). With the sign
convention above, bit 0 is the oriented resolution of a positive crossing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

SLOTS = "abcd"

End = tuple


class DiagramError(ValueError):
    """Malformed or inconsistently oriented diagram data."""


class CutError(ValueError):
    """A cut presentation that is not admissible."""


def xend(k: int, slot: int | str) -> End:
    return ("x", k, SLOTS.index(slot) if isinstance(slot, str) else slot)


def pend(label: str) -> End:
    return ("p", label)


def format_end(end: End) -> str:
    if end[0] == "x":
        return f"X{end[1]}.{SLOTS[end[2]]}"
    return f"@{end[1]}"


def parse_end(text: str) -> End:
    text = text.strip()
    if text.startswith("@"):
        return pend(text[1:])
    if text.startswith("X") and "." in text:
        k, s = text[1:].split(".", 1)
        if s not in SLOTS:
            raise DiagramError(f"bad slot in end {text!r}")
        return xend(int(k), s)
    raise DiagramError(f"bad edge end {text!r}")


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def groups(self) -> list[frozenset]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), set()).add(x)
        return [frozenset(g) for g in out.values()]


def _edge_key(e: str):
    return (len(e), e)


def circle_key(circle: frozenset) -> tuple:
    """Deterministic sort key: the smallest edge id on the circle."""
    return min(_edge_key(e) for e in circle)


@dataclass(frozen=True, eq=False)
class Smoothing:
    circles: tuple[frozenset, ...]
    membership: Mapping[str, int]

    def __len__(self) -> int:
        return len(self.circles)

    def circle_of(self, edge: str) -> frozenset:
        return self.circles[self.membership[edge]]


@dataclass(frozen=True, eq=False)
class OrientedDiagram:
    crossings: tuple[tuple[str, str, str, str], ...]
    edges: Mapping[str, tuple[End, End]]
    free_loops: int = 0
    crossing_ids: tuple[str, ...] = ()
    name: str = ""
    _points: Mapping[str, tuple] = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(str(e) for e in c) for c in self.crossings))
        object.__setattr__(self, "edges", {str(e): (tuple(t), tuple(h)) for e, (t, h) in self.edges.items()})
        if not self.crossing_ids:
            object.__setattr__(self, "crossing_ids", tuple(str(k) for k in range(len(self.crossings))))
        if len(self.crossing_ids) != len(self.crossings):
            raise DiagramError("crossing_ids length mismatch")
        if self.free_loops < 0:
            raise DiagramError("negative free loop count")
        object.__setattr__(self, "_points", self._validate())

    # ------------------------------------------------------------------
    def _validate(self) -> dict[str, tuple]:
        slot_seen: dict[tuple[int, int], str] = {}
        points: dict[str, list] = {}
        for e, (tail, head) in self.edges.items():
            for end, is_head in ((tail, False), (head, True)):
                if end[0] == "x":
                    _, k, s = end
                    if not (0 <= k < len(self.crossings)) or not (0 <= s < 4):
                        raise DiagramError(f"edge {e}: end {end} out of range")
                    if self.crossings[k][s] != e:
                        raise DiagramError(
                            f"edge {e} claims slot {format_end(end)} which holds {self.crossings[k][s]}")
                    if (k, s) in slot_seen:
                        raise DiagramError(f"slot {format_end(end)} used twice")
                    slot_seen[(k, s)] = e
                    if s == 0 and not is_head:
                        raise DiagramError(f"edge {e} leaves crossing {k} through the incoming under slot")
                    if s == 2 and is_head:
                        raise DiagramError(f"edge {e} enters crossing {k} through the outgoing under slot")
                elif end[0] == "p":
                    entry = points.setdefault(end[1], [None, None])
                    idx = 0 if is_head else 1  # (incoming edge, outgoing edge)
                    if entry[idx] is not None:
                        raise DiagramError(f"point {end[1]} has two {'incoming' if is_head else 'outgoing'} edges")
                    entry[idx] = e
                else:
                    raise DiagramError(f"edge {e}: unknown end {end}")
        for k, cr in enumerate(self.crossings):
            for s, e in enumerate(cr):
                if (k, s) not in slot_seen:
                    if e in self.edges:
                        raise DiagramError(f"edge {e} appears in more than two slots (extra at X{k}.{SLOTS[s]})")
                    raise DiagramError(f"edge {e} at X{k}.{SLOTS[s]} has no orientation entry")
            b_head = self._is_head(k, 1)
            d_head = self._is_head(k, 3)
            if b_head == d_head:
                raise DiagramError(f"over-strand at crossing {k} is inconsistently oriented")
        return {p: tuple(v) for p, v in points.items()}

    def _is_head(self, k: int, s: int) -> bool:
        e = self.crossings[k][s]
        return self.edges[e][1] == ("x", k, s)

    # ------------------------------------------------------------------
    @classmethod
    def from_pd(cls, crossings: Sequence[Sequence], points: Mapping[str, tuple] | None = None,
                free_loops: int = 0, name: str = "", crossing_ids: Sequence[str] = (),
                over: Mapping[int, int] | None = None) -> "OrientedDiagram":
        """Build a diagram inferring edge orientation from the under-strands.

        `points` maps a label to (incoming edge, outgoing edge); either may be
        None for an open boundary end. `over` optionally pins the sign of a
        crossing (+1/-1) where propagation alone cannot decide it.
        """
        crossings = [tuple(str(e) for e in c) for c in crossings]
        if any(len(c) != 4 for c in crossings):
            raise DiagramError("every crossing needs four slots")
        ends: dict[str, list[End]] = {}
        for k, c in enumerate(crossings):
            for s, e in enumerate(c):
                ends.setdefault(e, []).append(("x", k, s))
        for label, (inc, out) in (points or {}).items():
            if inc is not None:
                ends.setdefault(str(inc), []).append(("p", label))
            if out is not None:
                ends.setdefault(str(out), []).append(("p", label))
        # points carry two roles under one end label; keep them apart
        fixed_ends: dict[str, list[End]] = {}
        for e, lst in ends.items():
            if len(lst) != 2:
                raise DiagramError(f"edge {e} appears {len(lst)} times (need exactly 2)")
            fixed_ends[e] = lst
        head_of: dict[str, End] = {}
        tail_of: dict[str, End] = {}
        for label, (inc, out) in (points or {}).items():
            if inc is not None:
                head_of[str(inc)] = ("p", label)
            if out is not None:
                tail_of[str(out)] = ("p", label)
        for k, c in enumerate(crossings):
            head_of.setdefault(c[0], ("x", k, 0))
            tail_of.setdefault(c[2], ("x", k, 2))
            if over and k in over:
                if over[k] > 0:
                    head_of[c[3]], tail_of[c[1]] = ("x", k, 3), ("x", k, 1)
                else:
                    head_of[c[1]], tail_of[c[3]] = ("x", k, 1), ("x", k, 3)
        changed = True
        while changed:
            changed = False
            for e, lst in fixed_ends.items():
                if e in head_of and e not in tail_of:
                    other = [x for x in lst if x != head_of[e]]
                    tail_of[e] = other[0] if other else head_of[e]
                    changed = True
                elif e in tail_of and e not in head_of:
                    other = [x for x in lst if x != tail_of[e]]
                    head_of[e] = other[0] if other else tail_of[e]
                    changed = True
            for k, c in enumerate(crossings):
                b, d = c[1], c[3]
                known_b = (head_of.get(b) == ("x", k, 1)) or (tail_of.get(b) == ("x", k, 1))
                known_d = (head_of.get(d) == ("x", k, 3)) or (tail_of.get(d) == ("x", k, 3))
                if known_b and not known_d:
                    if head_of.get(b) == ("x", k, 1):
                        tail_of[d] = ("x", k, 3)
                    else:
                        head_of[d] = ("x", k, 3)
                    changed = True
                elif known_d and not known_b:
                    if head_of.get(d) == ("x", k, 3):
                        tail_of[b] = ("x", k, 1)
                    else:
                        head_of[b] = ("x", k, 1)
                    changed = True
        missing = sorted(e for e in fixed_ends if e not in head_of or e not in tail_of)
        if missing:
            raise DiagramError(f"cannot infer orientation of edges {missing}; give it explicitly")
        edges = {e: (tail_of[e], head_of[e]) for e in fixed_ends}
        return cls(tuple(crossings), edges, free_loops, tuple(crossing_ids), name)

    # ------------------------------------------------------------------
    @property
    def points(self) -> dict[str, tuple]:
        """label -> (incoming edge, outgoing edge); None marks an open end."""
        return dict(self._points)

    def boundary_points(self) -> list[str]:
        return sorted(p for p, (i, o) in self._points.items() if i is None or o is None)

    def is_closed(self) -> bool:
        return not self.boundary_points()

    def __len__(self) -> int:
        return len(self.crossings)

    def is_empty(self) -> bool:
        return not self.crossings and not self.edges and self.free_loops == 0

    def crossing_sign(self, k: int) -> int:
        if self._is_head(k, 3):
            return 1
        return -1

    def signs(self) -> list[int]:
        return [self.crossing_sign(k) for k in range(len(self.crossings))]

    @property
    def l_plus(self) -> int:
        return sum(1 for s in self.signs() if s > 0)

    @property
    def l_minus(self) -> int:
        return sum(1 for s in self.signs() if s < 0)

    def states(self) -> Iterator[tuple[int, ...]]:
        return product((0, 1), repeat=len(self.crossings))

    # ------------------------------------------------------------------
    def smooth(self, state: Sequence[int]) -> Smoothing:
        if len(state) != len(self.crossings):
            raise ValueError("state length does not match crossing count")
        if not self.is_closed():
            raise DiagramError("cannot smooth an open tangle into circles")
        uf = _UnionFind(self.edges)
        for bit, (a, b, c, d) in zip(state, self.crossings):
            if bit:
                uf.union(a, d)
                uf.union(b, c)
            else:
                uf.union(a, b)
                uf.union(c, d)
        for inc, out in self._points.values():
            uf.union(inc, out)
        circles = sorted(uf.groups(), key=circle_key)
        circles += [frozenset({f"~loop{i}"}) for i in range(self.free_loops)]
        membership = {e: i for i, c in enumerate(circles) for e in c}
        return Smoothing(tuple(circles), membership)

    def components(self) -> list[frozenset]:
        """Link components as edge sets (strands pass straight through crossings)."""
        uf = _UnionFind(self.edges)
        for a, b, c, d in self.crossings:
            uf.union(a, c)
            uf.union(b, d)
        for inc, out in self._points.values():
            if inc is not None and out is not None:
                uf.union(inc, out)
        return sorted(uf.groups(), key=circle_key)

    def point_circle(self, smoothing: Smoothing, label: str) -> int:
        inc, out = self._points[label]
        return smoothing.membership[inc if inc is not None else out]

    # ------------------------------------------------------------------
    def mirror(self) -> "OrientedDiagram":
        """Swap over and under at every crossing."""
        new_cross = []
        slot_map: dict[tuple[int, int], int] = {}
        for k, (a, b, c, d) in enumerate(self.crossings):
            if self.crossing_sign(k) > 0:
                # new incoming under-edge is d
                new_cross.append((d, a, b, c))
                slot_map.update({(k, 3): 0, (k, 0): 1, (k, 1): 2, (k, 2): 3})
            else:
                new_cross.append((b, c, d, a))
                slot_map.update({(k, 1): 0, (k, 2): 1, (k, 3): 2, (k, 0): 3})

        def remap(end):
            if end[0] == "x":
                return ("x", end[1], slot_map[(end[1], end[2])])
            return end

        edges = {e: (remap(t), remap(h)) for e, (t, h) in self.edges.items()}
        name = self.name[len("mirror_"):] if self.name.startswith("mirror_") else \
            (f"mirror_{self.name}" if self.name else "")
        return OrientedDiagram(tuple(new_cross), edges, self.free_loops, self.crossing_ids, name)

    def relabel(self, prefix: str, crossing_offset: int = 0) -> tuple[dict, dict]:
        """Edges and crossings renamed for embedding into a larger diagram."""
        def remap(end):
            if end[0] == "x":
                return ("x", end[1] + crossing_offset, end[2])
            return end

        edges = {f"{prefix}{e}": (remap(t), remap(h)) for e, (t, h) in self.edges.items()}
        crossings = [tuple(f"{prefix}{e}" for e in c) for c in self.crossings]
        return edges, crossings

    def with_crossing_order(self, perm: Sequence[int]) -> "OrientedDiagram":
        """Same diagram with crossings listed in the order perm[0], perm[1], ..."""
        pos = {old: new for new, old in enumerate(perm)}
        edges = {}
        for e, (t, h) in self.edges.items():
            edges[e] = tuple(("x", pos[x[1]], x[2]) if x[0] == "x" else x for x in (t, h))
        return OrientedDiagram(tuple(self.crossings[i] for i in perm), edges, self.free_loops,
                               tuple(self.crossing_ids[i] for i in perm), self.name)

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return (f"<OrientedDiagram{nm}: {len(self.crossings)} crossings, "
                f"{len(self.edges)} edges, {self.free_loops} free loops>")


def crossing_sign(d: OrientedDiagram, k: int) -> int:
    return d.crossing_sign(k)


def smooth(d: OrientedDiagram, state: Sequence[int]) -> Smoothing:
    return d.smooth(state)


def disjoint_union(d1: OrientedDiagram, d2: OrientedDiagram, name: str = "") -> OrientedDiagram:
    e1, c1 = d1.relabel("1.")
    e2, c2 = d2.relabel("2.", len(d1.crossings))
    ids = tuple(f"1.{c}" for c in d1.crossing_ids) + tuple(f"2.{c}" for c in d2.crossing_ids)
    return OrientedDiagram(tuple(c1 + c2), {**e1, **e2}, d1.free_loops + d2.free_loops, ids, name)


# ---------------------------------------------------------------------------
# cuts


def point_label(position: int) -> str:
    """Boundary position 2i-1 is the point a_i, position 2i is b_i."""
    return f"a{(position + 1) // 2}" if position % 2 else f"b{position // 2}"


@dataclass(frozen=True)
class BoundaryRecord:
    position: int
    edge1: str
    edge2: str
    direction: str  # "in" / "out" relative to region 1


@dataclass(frozen=True, eq=False)
class CutPresentation:
    """An admissible cut: two tangles glued along 2n alternating boundary points.

    In tangle 1 a strand leaves each a_i into region 1 and arrives at each b_i;
    tangle 2 sees the opposite orientation. Position 1 (the point a_1) is
    therefore always directed into region 1.
    """

    n: int
    tangle1: OrientedDiagram
    tangle2: OrientedDiagram
    boundary: tuple[BoundaryRecord, ...]
    name: str = ""

    def labels(self) -> list[str]:
        return [point_label(p) for p in range(1, 2 * self.n + 1)]

    def tangle(self, side: int) -> OrientedDiagram:
        if side == 1:
            return self.tangle1
        if side == 2:
            return self.tangle2
        raise ValueError("side must be 1 or 2")

    def mirror(self) -> "CutPresentation":
        name = self.name[len("mirror_"):] if self.name.startswith("mirror_") else \
            (f"mirror_{self.name}" if self.name else "")
        return CutPresentation(self.n, self.tangle1.mirror(), self.tangle2.mirror(), self.boundary, name)


@dataclass
class CutCheck:
    ok: bool
    problems: list[str]

    def __bool__(self) -> bool:
        return self.ok


def validate_cut(cp: CutPresentation) -> CutCheck:
    problems: list[str] = []
    n = cp.n
    positions = sorted(r.position for r in cp.boundary)
    if positions != list(range(1, 2 * n + 1)):
        problems.append(f"boundary positions {positions} are not 1..{2 * n}")
        return CutCheck(False, problems)
    recs = sorted(cp.boundary, key=lambda r: r.position)
    for r in recs:
        if r.direction not in ("in", "out"):
            problems.append(f"position {r.position}: direction {r.direction!r} is not in/out")
    if problems:
        return CutCheck(False, problems)
    for i, r in enumerate(recs):
        nxt = recs[(i + 1) % len(recs)]
        if len(recs) > 1 and r.direction == nxt.direction:
            problems.append(
                f"alternation broken: positions {r.position} and {nxt.position} both {r.direction}")
            return CutCheck(False, problems)
    if recs and recs[0].direction != "in":
        problems.append("position 1 (a1) must point into region 1; re-mark the cut")
        return CutCheck(False, problems)
    labels = {point_label(r.position) for r in recs}
    for side, t in ((1, cp.tangle1), (2, cp.tangle2)):
        bpts = set(t.boundary_points())
        if bpts != labels:
            problems.append(f"tangle {side} boundary points {sorted(bpts)} != {sorted(labels)}")
            return CutCheck(False, problems)
        for label, (inc, out) in t.points.items():
            if inc is not None and out is not None and label in labels:
                problems.append(f"tangle {side}: point {label} is not a boundary end")
    if problems:
        return CutCheck(False, problems)
    for r in recs:
        label = point_label(r.position)
        inc1, out1 = cp.tangle1.points[label]
        inc2, out2 = cp.tangle2.points[label]
        if r.direction == "in":
            want1, got1, want2, got2 = r.edge1, out1, r.edge2, inc2
        else:
            want1, got1, want2, got2 = r.edge1, inc1, r.edge2, out2
        if got1 is None or got2 is None:
            side = 1 if got1 is None else 2
            problems.append(f"position {r.position}: tangle {side} has no {'outgoing' if (side == 1) == (r.direction == 'in') else 'incoming'} "
                            f"edge at {label}; the two sides run the same way there")
            return CutCheck(False, problems)
        if got1 != want1:
            problems.append(f"position {r.position}: tangle 1 edge at {label} is {got1}, record says {want1} "
                            f"(direction {r.direction})")
        if got2 != want2:
            problems.append(f"position {r.position}: tangle 2 edge at {label} is {got2}, record says {want2} "
                            f"(direction {r.direction})")
        if problems:
            return CutCheck(False, problems)
    return CutCheck(True, [])


def require_valid(cp: CutPresentation) -> None:
    check = validate_cut(cp)
    if not check:
        raise CutError(check.problems[0])


def glue(cp: CutPresentation) -> OrientedDiagram:
    """Reassemble the full diagram; crossings of tangle 1 come first."""
    require_valid(cp)
    d = disjoint_union(cp.tangle1, cp.tangle2, name=cp.name.removesuffix("_cut") if cp.name else "")
    return d


def glued_edge(side: int, edge: str) -> str:
    return f"{side}.{edge}"


def cut_presentation(n: int, tangle1: OrientedDiagram, tangle2: OrientedDiagram, name: str = "") -> CutPresentation:
    """Build the boundary records from the tangles' own boundary ends."""
    recs = []
    for p in range(1, 2 * n + 1):
        label = point_label(p)
        inc1, out1 = tangle1.points.get(label, (None, None))
        inc2, out2 = tangle2.points.get(label, (None, None))
        if out1 is not None:
            recs.append(BoundaryRecord(p, out1, inc2, "in"))
        else:
            recs.append(BoundaryRecord(p, inc1, out2, "out"))
    cp = CutPresentation(n, tangle1, tangle2, tuple(recs), name)
    require_valid(cp)
    return cp


def open_edge(d: OrientedDiagram, edge: str, into: str, out_of: str) -> OrientedDiagram:
    """Cut `edge` of a closed diagram: its first half ends at point `out_of`,
    the second half starts at point `into`."""
    tail, head = d.edges[edge]
    edges = dict(d.edges)
    del edges[edge]
    edges[f"{edge}'"] = (tail, pend(out_of))
    edges[f"{edge}\""] = (pend(into), head)
    crossings = []
    for k, c in enumerate(d.crossings):
        row = list(c)
        for s, e in enumerate(c):
            if e == edge:
                row[s] = f"{edge}'" if ("x", k, s) == tail else f"{edge}\""
        crossings.append(tuple(row))
    return OrientedDiagram(tuple(crossings), edges, d.free_loops, d.crossing_ids, d.name)


def connected_sum_cut(d1: OrientedDiagram, e1: str, d2: OrientedDiagram, e2: str, name: str = "") -> CutPresentation:
    """n = 1 cut exhibiting d1 # d2, joined along edges e1 and e2."""
    t1 = open_edge(d1, e1, into="a1", out_of="b1")
    t2 = open_edge(d2, e2, into="b1", out_of="a1")
    return cut_presentation(1, t1, t2, name)


def split_cut(d1: OrientedDiagram, d2: OrientedDiagram, name: str = "") -> CutPresentation:
    """n = 0 cut separating a split diagram d1 + d2."""
    return cut_presentation(0, d1, d2, name)
