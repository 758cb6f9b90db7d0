"""Surgeries of a cut presentation, the boundary maps C_i, inner/outer circles.

Points a_i, b_i sit at boundary positions 2i-1, 2i. For a block
{i_1 < ... < i_k} the closing arcs join b_{i_j} to a_{i_{j+1}} (indices mod k).
On side 1 these arcs run b -> a; side 2 uses the same arcs reversed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .diagrams import CutPresentation, OrientedDiagram, Smoothing, circle_key, glue, pend, require_valid
from .partitions import SetPartition, enumerate_nc, is_noncrossing, join, meet


@dataclass(frozen=True)
class BoundaryMatching:
    n: int
    pairs: dict  # b-index -> a-index

    def cycles_with(self, other: "BoundaryMatching") -> int:
        """Closed curves formed by self's arcs on one side and other's on the other."""
        inv = {a: b for b, a in other.pairs.items()}
        seen, count = set(), 0
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            count += 1
            i = start
            while i not in seen:
                seen.add(i)
                i = inv[self.pairs[i]]
        return count


def matching_of(p: SetPartition) -> BoundaryMatching:
    if not is_noncrossing(p):
        raise ValueError(f"{p} is crossing; surgeries need a non-crossing partition")
    pairs = {}
    for blk in p.blocks:
        for j, i in enumerate(blk):
            pairs[i] = blk[(j + 1) % len(blk)]
    return BoundaryMatching(p.n, pairs)


def arc_id(i: int) -> str:
    return f"arc.b{i}"


def surgery(cp: CutPresentation, side: int, p: SetPartition) -> OrientedDiagram:
    """L_side^p: the side's tangle closed up by the arcs of matching_of(p)."""
    if p.n != cp.n:
        raise ValueError(f"partition on {p.n} points, cut has n = {cp.n}")
    t = cp.tangle(side)
    m = matching_of(p)
    edges = dict(t.edges)
    for b, a in m.pairs.items():
        if side == 1:
            edges[arc_id(b)] = (pend(f"b{b}"), pend(f"a{a}"))
        else:
            edges[arc_id(b)] = (pend(f"a{a}"), pend(f"b{b}"))
    name = f"{cp.name or 'cut'}:L{side}^{p}"
    d = OrientedDiagram(t.crossings, edges, t.free_loops, t.crossing_ids, name)
    if not d.is_closed():
        raise AssertionError("surgery left open ends; the cut is not admissible")
    return d


@dataclass
class SurgeryFamily:
    side: int
    index: list[SetPartition]
    diagrams: dict[SetPartition, OrientedDiagram]

    def __iter__(self):
        return iter(self.diagrams.items())


def surgery_family(cp: CutPresentation, side: int) -> SurgeryFamily:
    require_valid(cp)
    idx = enumerate_nc(cp.n)
    return SurgeryFamily(side, idx, {p: surgery(cp, side, p) for p in idx})


def point_circles(d: OrientedDiagram, sm: Smoothing, n: int) -> dict[int, int]:
    """a-index -> circle index in the smoothing."""
    return {i: d.point_circle(sm, f"a{i}") for i in range(1, n + 1)}


def boundary_partition(cp: CutPresentation, side: int, state: Sequence[int]) -> SetPartition:
    """C_i(state): a-points grouped by the circles of the smoothed full surgery."""
    full = surgery(cp, side, SetPartition.full(cp.n))
    sm = full.smooth(tuple(state))
    return SetPartition.from_labels(point_circles(full, sm, cp.n)) if cp.n else SetPartition(0, ())


def closure_circle_count(a: SetPartition, b: SetPartition) -> int:
    if a.n != b.n:
        raise ValueError("partitions on different ground sets")
    return a.n + len(join(a, b)) - len(meet(a, b))


def matching_cycle_count(a: SetPartition, b: SetPartition) -> int:
    """Brute-force count of closed curves from the two arc systems."""
    return matching_of(a).cycles_with(matching_of(b))


# ---------------------------------------------------------------------------
# circle classification and the compatible order


def _outer_key(d: OrientedDiagram, circle: frozenset) -> int | None:
    """Smallest i with a_i on the circle, or None for an inner circle."""
    best = None
    for label, (inc, out) in d.points.items():
        if label.startswith("a") and (inc in circle or out in circle):
            i = int(label[1:])
            best = i if best is None else min(best, i)
    if best is None:
        for label, (inc, out) in d.points.items():
            if inc in circle or out in circle:
                # a circle through b-points only cannot occur after a full closure
                raise AssertionError(f"circle through {label} misses every a-point")
    return best


def compatible_order(d: OrientedDiagram, side: int, state: tuple, sm: Smoothing | None = None) -> list[int]:
    """Circle order for a surgery diagram: inner circles by smallest edge id,
    outer circles by their smallest a-index; inner before outer on side 1,
    after it on side 2."""
    sm = sm or d.smooth(state)
    inner, outer = [], []
    for k, c in enumerate(sm.circles):
        key = _outer_key(d, c)
        if key is None:
            inner.append((circle_key(c), k))
        else:
            outer.append((key, k))
    inner_ids = [k for _, k in sorted(inner)]
    outer_ids = [k for _, k in sorted(outer)]
    return inner_ids + outer_ids if side == 1 else outer_ids + inner_ids


def compatible_policy(side: int):
    def policy(d: OrientedDiagram, state: tuple, sm: Smoothing):
        return compatible_order(d, side, state, sm)
    return policy


@dataclass
class CircleClasses:
    inner1: list[frozenset]
    outer: list[frozenset]
    inner2: list[frozenset]

    def ordered(self) -> list[frozenset]:
        return self.inner1 + self.outer + self.inner2


def classify_circles(cp: CutPresentation, state: Sequence[int], glued: OrientedDiagram | None = None) -> CircleClasses:
    """Split the circles of S_state(L) into Inner_1, Outer, Inner_2 (each in compatible order)."""
    L = glued or glue(cp)
    sm = L.smooth(tuple(state))
    i1, out, i2 = [], [], []
    for c in sm.circles:
        key = _outer_key(L, c)
        if key is not None:
            out.append((key, c))
        elif any(e.startswith("2.") for e in c):
            i2.append(c)
        else:
            i1.append(c)
    return CircleClasses(sorted(i1, key=circle_key), [c for _, c in sorted(out, key=lambda x: x[0])],
                         sorted(i2, key=circle_key))


def inherited_policy(cp: CutPresentation):
    """Inner_1 < Outer < Inner_2 on the glued diagram."""
    def policy(d: OrientedDiagram, state: tuple, sm: Smoothing):
        cls = classify_circles(cp, state, d)
        pos = {c: k for k, c in enumerate(sm.circles)}
        return [pos[c] for c in cls.ordered()]
    return policy


def split_state(cp: CutPresentation, state: Sequence[int]) -> tuple[tuple, tuple]:
    """alpha = (alpha_1, alpha_2); glued crossings list side 1 first."""
    k = len(cp.tangle1.crossings)
    return tuple(state[:k]), tuple(state[k:])
