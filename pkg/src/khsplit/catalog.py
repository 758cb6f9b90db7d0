"""Built-in diagrams and cut presentations."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .diagrams import (CutPresentation, OrientedDiagram, connected_sum_cut, cut_presentation, glue, parse_end,
                       split_cut)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    obj: OrientedDiagram | CutPresentation
    notes: str = ""
    expected: dict = field(default_factory=dict)

    @property
    def is_cut(self) -> bool:
        return isinstance(self.obj, CutPresentation)


def _diag(crossings, edges, name="", free_loops=0) -> OrientedDiagram:
    return OrientedDiagram(
        tuple(tuple(c) for c in crossings),
        {e: (parse_end(t), parse_end(h)) for e, (t, h) in edges.items()},
        free_loops, (), name)


def _hopf() -> OrientedDiagram:
    return _diag([["1", "2", "3", "4"], ["2", "1", "4", "3"]],
                 {"1": ("X1.b", "X0.a"), "2": ("X0.b", "X1.a"), "3": ("X0.c", "X1.d"), "4": ("X1.c", "X0.d")},
                 "hopf")


def _neg_trefoil() -> OrientedDiagram:
    d = OrientedDiagram.from_pd([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]])
    return OrientedDiagram(d.crossings, d.edges, 0, (), "mirror_trefoil")


def _solomon_top() -> OrientedDiagram:
    # two positive crossings; strands enter at a1, a2 and leave at b1, b2
    return _diag([["t1", "t2", "t3", "t4"], ["t6", "t5", "t4", "t3"]],
                 {"t1": ("@a1", "X0.a"), "t2": ("X0.b", "@b1"), "t3": ("X0.c", "X1.d"),
                  "t4": ("X1.c", "X0.d"), "t5": ("X1.b", "@b2"), "t6": ("@a2", "X1.a")})


def _solomon_bottom() -> OrientedDiagram:
    return _diag([["u5", "u6", "u4", "u3"], ["u2", "u1", "u3", "u4"]],
                 {"u1": ("X1.b", "@a1"), "u2": ("@b1", "X1.a"), "u3": ("X1.c", "X0.d"),
                  "u4": ("X0.c", "X1.d"), "u5": ("@b2", "X0.a"), "u6": ("X0.b", "@a2")})


def _half_solomon_top() -> OrientedDiagram:
    # crossingless side joining a1 -> b2 and a2 -> b1 (the trivial partition)
    return _diag([], {"s1": ("@a1", "@b2"), "s2": ("@a2", "@b1")})


def _arc(n1: str = "b1", n2: str = "a1") -> OrientedDiagram:
    return _diag([], {"arc": (f"@{n1}", f"@{n2}")})


def _named(d: OrientedDiagram, name: str) -> OrientedDiagram:
    return OrientedDiagram(d.crossings, d.edges, d.free_loops, d.crossing_ids, name)


def _cut_named(cp: CutPresentation, name: str) -> CutPresentation:
    return CutPresentation(cp.n, cp.tangle1, cp.tangle2, cp.boundary, name)


@lru_cache(maxsize=None)
def _build() -> dict[str, CatalogEntry]:
    out: dict[str, CatalogEntry] = {}

    def add(name, obj, notes="", **expected):
        if isinstance(obj, CutPresentation):
            obj = _cut_named(obj, name)
        else:
            obj = _named(obj, name)
        out[name] = CatalogEntry(name, obj, notes, expected)

    unknot = _diag([], {}, free_loops=1)
    add("unknot", unknot, "crossingless circle", kh={(0, -1): 1, (0, 1): 1}, jones={0: 1})
    kink = _diag([["1", "2", "2", "1"]], {"1": ("X0.d", "X0.a"), "2": ("X0.c", "X0.b")})
    add("unknot_kink", kink, "one-crossing unknot (negative kink)", kh={(0, -1): 1, (0, 1): 1})
    add("mirror_unknot_kink", kink.mirror(), "one-crossing unknot (positive kink)", kh={(0, -1): 1, (0, 1): 1})

    hopf = _hopf()
    add("hopf", hopf, "two positive crossings", kh={(0, 0): 1, (0, 2): 1, (2, 4): 1, (2, 6): 1},
        jones={1: 1, 5: 1}, signs=(2, 0))
    add("mirror_hopf", hopf.mirror(), "two negative crossings", signs=(0, 2))

    ntref = _neg_trefoil()
    add("trefoil", ntref.mirror(), "positive (right-handed) trefoil", signs=(3, 0))
    add("mirror_trefoil", ntref, "negative trefoil; PD X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", signs=(0, 3))

    sol = cut_presentation(2, _solomon_top(), _solomon_bottom())
    solomon_kh = {(0, 0): 1, (0, 2): 1, (1, 2): 1, (2, 6): 1, (4, 8): 1, (4, 10): 1}
    add("solomon_cut", sol, "Solomon link cut into two twist tangles, n = 2", kh=solomon_kh, signs=(4, 0))
    add("solomon", glue(sol), "Solomon link (4 positive crossings)", kh=solomon_kh, signs=(4, 0))
    add("mirror_solomon_cut", sol.mirror(), "mirror Solomon cut", signs=(0, 4))
    add("mirror_solomon", glue(sol.mirror()), "mirror Solomon link", signs=(0, 4))

    half = cut_presentation(2, _half_solomon_top(), _solomon_bottom())
    add("half_solomon_cut", half, "Solomon twist tangle closed by a crossingless side, n = 2",
        kh={(0, 0): 1, (0, 2): 1, (2, 4): 1, (2, 6): 1})
    add("half_solomon", glue(half), "glued half Solomon diagram (a Hopf link)")
    add("mirror_half_solomon_cut", half.mirror(), "mirror of half_solomon_cut")

    hcs = connected_sum_cut(hopf, "1", hopf, "1")
    add("hopf_connected_sum_cut", hcs, "Hopf # Hopf along an n = 1 cut")
    add("hopf_connected_sum", glue(hcs), "Hopf # Hopf")
    add("mirror_hopf_connected_sum_cut", hcs.mirror(), "mirror of hopf_connected_sum_cut")

    add("trefoil_hopf_cut", connected_sum_cut(ntref.mirror(), "1", hopf, "3"), "trefoil # Hopf, n = 1")
    add("mirror_trefoil_hopf_cut", connected_sum_cut(ntref.mirror(), "1", hopf, "3").mirror(),
        "mirror of trefoil_hopf_cut; three negative crossings on side 1")
    add("trefoil_arc_cut", cut_presentation(1, _open_trefoil(), _arc()), "trefoil with a crossingless side, n = 1")
    add("unknot_cut", cut_presentation(1, _diag([], {"arc": ("@a1", "@b1")}), _arc()),
        "unknot split by a trivial n = 1 cut", kh={(0, -1): 1, (0, 1): 1})
    add("split_cut", split_cut(ntref.mirror(), hopf), "trefoil and Hopf side by side, n = 0")
    return out


def _open_trefoil() -> OrientedDiagram:
    from .diagrams import open_edge
    return open_edge(_neg_trefoil().mirror(), "1", into="a1", out_of="b1")


def names() -> list[str]:
    return list(_build())


def get(name: str) -> CatalogEntry:
    try:
        return _build()[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; try one of: {', '.join(names())}") from None


def cuts() -> list[CatalogEntry]:
    return [e for e in _build().values() if e.is_cut]


def diagrams() -> list[CatalogEntry]:
    return [e for e in _build().values() if not e.is_cut]
