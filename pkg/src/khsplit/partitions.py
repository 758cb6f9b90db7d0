"""Set partitions of {1..n}, the non-crossing ones, and the lattice operations.

Conventions: ``full`` is the finest partition {{1},...,{n}} and ``trivial``
the coarsest {{1,...,n}}. ``meet`` is the common refinement and ``join`` the
coarsest common coarsening, both taken in the lattice of all partitions.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = sorted(x for b in self.blocks for x in b)
        if seen != list(range(1, self.n + 1)):
            raise ValueError(f"blocks {self.blocks} do not partition 1..{self.n}")
        if any(len(b) == 0 for b in self.blocks):
            raise ValueError("empty block")
        canon = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", canon)

    @classmethod
    def of(cls, n: int, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        return cls(n, tuple(tuple(b) for b in blocks))

    @classmethod
    def full(cls, n: int) -> "SetPartition":
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def trivial(cls, n: int) -> "SetPartition":
        return cls(n, (tuple(range(1, n + 1)),) if n else ())

    @classmethod
    def from_labels(cls, labels: dict[int, object]) -> "SetPartition":
        """Group 1..n by equal label."""
        groups: dict[object, list[int]] = {}
        for i in sorted(labels):
            groups.setdefault(labels[i], []).append(i)
        return cls(len(labels), tuple(tuple(g) for g in groups.values()))

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self, i: int) -> tuple[int, ...]:
        for b in self.blocks:
            if i in b:
                return b
        raise KeyError(i)

    def labels(self) -> dict[int, int]:
        return {x: k for k, b in enumerate(self.blocks) for x in b}

    def refines(self, other: "SetPartition") -> bool:
        """True when self is finer than (or equal to) other."""
        lab = other.labels()
        return all(len({lab[x] for x in b}) == 1 for b in self.blocks)

    def __str__(self) -> str:
        if not self.blocks:
            return "{}"
        return "{" + "|".join(",".join(map(str, b)) for b in self.blocks) + "}"

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise ValueError(f"bad partition literal {text!r}")
        body = body[1:-1].strip()
        if not body:
            return cls(0, ())
        blocks = [tuple(int(x) for x in part.split(",")) for part in body.split("|")]
        return cls(sum(len(b) for b in blocks), tuple(blocks))


def is_noncrossing(p: SetPartition) -> bool:
    """No a<b<c<d with a,c in one block and b,d in another."""
    lab = p.labels()
    for a, b, c, d in combinations(range(1, p.n + 1), 4):
        if lab[a] == lab[c] and lab[b] == lab[d] and lab[a] != lab[b]:
            return False
    return True


def _check_same_n(p: SetPartition, q: SetPartition) -> None:
    if p.n != q.n:
        raise ValueError(f"ground sets differ: {p.n} vs {q.n}")


def meet(p: SetPartition, q: SetPartition) -> SetPartition:
    _check_same_n(p, q)
    lp, lq = p.labels(), q.labels()
    return SetPartition.from_labels({i: (lp[i], lq[i]) for i in range(1, p.n + 1)})


def join(p: SetPartition, q: SetPartition) -> SetPartition:
    _check_same_n(p, q)
    parent = list(range(p.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (p, q):
        for b in part.blocks:
            for x in b[1:]:
                parent[find(x)] = find(b[0])
    return SetPartition.from_labels({i: find(i) for i in range(1, p.n + 1)})


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in _set_partitions(rest):
        yield [[first]] + sub
        for k in range(len(sub)):
            yield sub[:k] + [[first] + sub[k]] + sub[k + 1:]


def all_partitions(n: int) -> list[SetPartition]:
    return sorted({SetPartition.of(n, bl) for bl in _set_partitions(list(range(1, n + 1)))})


@lru_cache(maxsize=None)
def _nc_cached(n: int) -> tuple[SetPartition, ...]:
    if n == 0:
        return (SetPartition(0, ()),)
    # every NC partition of 1..n: choose the block B of 1; the gaps between
    # consecutive elements of B (and after max B) carry independent NC partitions
    out = []

    def rec(start: int, end: int) -> Iterator[list[tuple[int, ...]]]:
        # NC partitions of the interval [start, end]
        if start > end:
            yield []
            return
        rest = list(range(start + 1, end + 1))
        for k in range(len(rest) + 1):
            for others in combinations(rest, k):
                block = (start,) + others
                bounds = list(block) + [end + 1]
                gaps = [(bounds[i] + 1, bounds[i + 1] - 1) for i in range(len(block))]
                yield from _product_gaps(block, gaps)

    def _product_gaps(block, gaps):
        if not gaps:
            yield [block]
            return
        (s, e), tail = gaps[0], gaps[1:]
        for left in rec(s, e):
            for right in _product_gaps(block, tail):
                yield left + right

    for blocks in rec(1, n):
        out.append(SetPartition.of(n, blocks))
    return tuple(sorted(set(out)))


def enumerate_nc(n: int) -> list[SetPartition]:
    """All non-crossing partitions of 1..n in lexicographic block order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_nc_cached(n))


def dihedral_act(rotation: int, p: SetPartition, reflect: bool = False) -> SetPartition:
    """Apply i -> n+1-i (if reflect) followed by rotation i -> i+rotation mod n."""
    n = p.n
    if n == 0:
        return p

    def g(i: int) -> int:
        if reflect:
            i = n + 1 - i
        return (i - 1 + rotation) % n + 1

    return SetPartition.of(n, [[g(x) for x in b] for b in p.blocks])


def dihedral_group(n: int) -> list[tuple[int, bool]]:
    return [(r, f) for f in (False, True) for r in range(max(n, 1))]


def catalan(n: int) -> int:
    """Catalan numbers via the convolution recurrence."""
    c = [1]
    for k in range(1, n + 1):
        c.append(sum(c[i] * c[k - 1 - i] for i in range(k)))
    return c[n]
