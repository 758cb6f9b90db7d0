"""Cube of resolutions, the Khovanov complex over Q, homology and the Jones polynomial.

V has basis v+ (q-degree +1) and v- (q-degree -1); generators of the cube are
pairs (state, labels) with one label in {+1, -1} per circle, in the circle
order chosen for that state. The Frobenius algebra is k[X]/(X^2) with
v+ = 1 and v- = X.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from .algebra import ExactMatrix, LaurentPolynomial, _echelon, format_laurent, rank, rank_and_kernel
from .diagrams import OrientedDiagram, Smoothing

PLUS, MINUS = 1, -1

CircleOrder = Callable[[OrientedDiagram, tuple, Smoothing], Sequence[int]]


class ComplexError(ArithmeticError):
    """d o d != 0 or a differential that moves q-degree."""


def frobenius_merge(x: int, y: int) -> int | None:
    """m on basis labels; None stands for the zero vector."""
    if x == PLUS:
        return y
    if y == PLUS:
        return x
    return None


def frobenius_split(x: int) -> list[tuple[int, int]]:
    if x == PLUS:
        return [(PLUS, MINUS), (MINUS, PLUS)]
    return [(MINUS, MINUS)]


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BigradedDims:
    """(homological degree, q-degree) -> dimension, zeros dropped."""

    dims: Mapping[tuple[int, int], int]

    def __post_init__(self):
        object.__setattr__(self, "dims", {k: v for k, v in sorted(self.dims.items()) if v})

    def __eq__(self, other):
        if isinstance(other, BigradedDims):
            return self.dims == other.dims
        if isinstance(other, Mapping):
            return self.dims == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.dims.items()))

    def __getitem__(self, key):
        return self.dims.get(key, 0)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def euler(self) -> LaurentPolynomial:
        """chi_q = sum (-1)^r q^j dim."""
        out: dict[int, int] = {}
        for (r, j), v in self.dims.items():
            out[j] = out.get(j, 0) + (-1) ** (r % 2) * v
        return LaurentPolynomial(out)

    def poincare(self) -> dict[tuple[int, int], int]:
        return dict(self.dims)

    def tensor(self, other: "BigradedDims") -> "BigradedDims":
        out: dict[tuple[int, int], int] = {}
        for (r1, j1), v1 in self.dims.items():
            for (r2, j2), v2 in other.dims.items():
                k = (r1 + r2, j1 + j2)
                out[k] = out.get(k, 0) + v1 * v2
        return BigradedDims(out)

    def summands(self) -> list[tuple[str, int, int]]:
        """Greedy split into V{j}[r] and k{j}[r] pieces, for display only."""
        left = dict(self.dims)
        out = []
        for r in sorted({r for r, _ in left}):
            while True:
                js = sorted(j for (rr, j), v in left.items() if rr == r and v)
                if not js:
                    break
                j = js[0]
                if left.get((r, j + 2), 0):
                    out.append(("V", j + 1, r))
                    left[(r, j + 2)] -= 1
                else:
                    out.append(("k", j, r))
                left[(r, j)] -= 1
        return out

    def __str__(self) -> str:
        if not self.dims:
            return "0"
        parts = []
        for kind, j, r in self.summands():
            parts.append(f"{kind}{{{j}}}" + (f"[{r}]" if r else ""))
        return " + ".join(parts)

    def table(self) -> str:
        if not self.dims:
            return "(zero)"
        rs = sorted({r for r, _ in self.dims})
        js = sorted({j for _, j in self.dims})
        head = "q\\r " + " ".join(f"{r:>4}" for r in rs)
        lines = [head]
        for j in reversed(js):
            cells = [f"{self.dims.get((r, j), 0) or '.':>4}" for r in rs]
            lines.append(f"{j:>3} " + " ".join(cells))
        return "\n".join(lines)


@dataclass(eq=False)
class GradedChainComplex:
    """Based cochain complex; d[r] maps degree r to r+1 (rows index the target)."""

    basis: dict[int, list]
    qdeg: dict[int, list[int]]
    d: dict[int, ExactMatrix]
    circles: dict[tuple, tuple] = field(default_factory=dict)
    _index: dict = field(default=None, repr=False)

    def degrees(self) -> list[int]:
        return sorted(r for r, b in self.basis.items() if b)

    def dim(self, r: int) -> int:
        return len(self.basis.get(r, ()))

    def index(self, r: int) -> dict:
        if self._index is None:
            self._index = {}
        if r not in self._index:
            self._index[r] = {g: i for i, g in enumerate(self.basis.get(r, ()))}
        return self._index[r]

    def differential(self, r: int) -> ExactMatrix:
        m = self.d.get(r)
        if m is None:
            return ExactMatrix.zeros(self.dim(r + 1), self.dim(r))
        return m

    def chain_dims(self) -> BigradedDims:
        out: dict[tuple[int, int], int] = {}
        for r, qs in self.qdeg.items():
            for j in qs:
                out[(r, j)] = out.get((r, j), 0) + 1
        return BigradedDims(out)

    def chi_q(self) -> LaurentPolynomial:
        return self.chain_dims().euler()

    def shifted(self, h: int, q: int) -> "GradedChainComplex":
        """[h]{q}: the generator in degree r moves to r + h."""
        return GradedChainComplex(
            {r + h: list(b) for r, b in self.basis.items()},
            {r + h: [j + q for j in qs] for r, qs in self.qdeg.items()},
            {r + h: m for r, m in self.d.items()},
            dict(self.circles),
        )

    def check_d_squared(self) -> None:
        for r in self.degrees():
            a, b = self.differential(r), self.differential(r + 1)
            if a.rows and b.cols and not (b @ a).is_zero():
                raise ComplexError(f"d^{r + 1} d^{r} != 0")

    def check_q_degree(self) -> None:
        for r, m in self.d.items():
            src, tgt = self.qdeg.get(r, []), self.qdeg.get(r + 1, [])
            for (i, j), _ in m.items():
                if tgt[i] != src[j]:
                    raise ComplexError(f"d^{r} moves q-degree {src[j]} -> {tgt[i]}")

    def q_blocks(self, r: int) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, j in enumerate(self.qdeg.get(r, [])):
            out.setdefault(j, []).append(i)
        return out


# ---------------------------------------------------------------------------


def default_circle_order(d: OrientedDiagram, state: tuple, sm: Smoothing) -> Sequence[int]:
    return range(len(sm))


def _labels(k: int) -> list[tuple[int, ...]]:
    return list(product((PLUS, MINUS), repeat=k))


def build_cube(d: OrientedDiagram, circle_order: CircleOrder | None = None) -> GradedChainComplex:
    """The unshifted complex [[L]]; degree r holds the states with r ones."""
    policy = circle_order or default_circle_order
    ncr = len(d.crossings)
    states = sorted(product((0, 1), repeat=ncr), key=lambda s: (sum(s), s))
    circles: dict[tuple, tuple] = {}
    where: dict[tuple, dict[str, int]] = {}
    for s in states:
        sm = d.smooth(s)
        order = list(policy(d, s, sm))
        if sorted(order) != list(range(len(sm))):
            raise ValueError("circle order policy must return a permutation")
        cs = tuple(sm.circles[i] for i in order)
        circles[s] = cs
        where[s] = {e: k for k, c in enumerate(cs) for e in c}

    basis: dict[int, list] = {r: [] for r in range(ncr + 1)}
    qdeg: dict[int, list[int]] = {r: [] for r in range(ncr + 1)}
    for s in states:
        r = sum(s)
        for lab in _labels(len(circles[s])):
            basis[r].append((s, lab))
            qdeg[r].append(sum(lab) + r)
    index = {r: {g: i for i, g in enumerate(b)} for r, b in basis.items()}

    entries: dict[int, dict[tuple[int, int], int]] = {r: {} for r in range(ncr)}
    for s in states:
        r = sum(s)
        src_c, src_w = circles[s], where[s]
        for j in range(ncr):
            if s[j]:
                continue
            t = s[:j] + (1,) + s[j + 1:]
            sign = -1 if sum(s[:j]) % 2 else 1
            tgt_w = where[t]
            a, b, c, _ = d.crossings[j]
            ca, cc = src_w[a], src_w[c]
            # untouched circles carry their label across
            carry = [(k, tgt_w[next(iter(src_c[k]))]) for k in range(len(src_c)) if k not in (ca, cc)]
            k_t = len(circles[t])
            ent = entries[r]
            for lab in _labels(len(src_c)):
                col = index[r][(s, lab)]
                out = [0] * k_t
                for k, kt in carry:
                    out[kt] = lab[k]
                if ca != cc:
                    v = frobenius_merge(lab[ca], lab[cc])
                    if v is None:
                        continue
                    out[tgt_w[a]] = v
                    terms = [tuple(out)]
                else:
                    t1, t2 = tgt_w[a], tgt_w[b]
                    terms = []
                    for x, y in frobenius_split(lab[ca]):
                        out[t1], out[t2] = x, y
                        terms.append(tuple(out))
                for lt in terms:
                    row = index[r + 1][(t, lt)]
                    key = (row, col)
                    ent[key] = ent.get(key, 0) + sign
    d_mats = {r: ExactMatrix(len(basis[r + 1]), len(basis[r]), {k: v for k, v in ent.items() if v})
              for r, ent in entries.items()}
    cx = GradedChainComplex(basis, qdeg, d_mats, circles)
    cx.check_d_squared()
    return cx


def khovanov_complex(d: OrientedDiagram, circle_order: CircleOrder | None = None) -> GradedChainComplex:
    """C(L) = [[L]][-l-]{l+ - 2 l-}."""
    return build_cube(d, circle_order).shifted(-d.l_minus, d.l_plus - 2 * d.l_minus)


def homology(c: GradedChainComplex) -> BigradedDims:
    c.check_d_squared()
    c.check_q_degree()
    out: dict[tuple[int, int], int] = {}
    rank_cache: dict[tuple[int, int], int] = {}

    def block_rank(r: int, j: int) -> int:
        key = (r, j)
        if key not in rank_cache:
            cols = c.q_blocks(r).get(j, [])
            rows = c.q_blocks(r + 1).get(j, [])
            m = c.d.get(r)
            if not cols or not rows or m is None:
                rank_cache[key] = 0
            else:
                rank_cache[key] = rank(m.submatrix(rows, cols))
        return rank_cache[key]

    for r in c.degrees():
        for j, idx in c.q_blocks(r).items():
            h = len(idx) - block_rank(r, j) - block_rank(r - 1, j)
            if h < 0:
                raise ComplexError("negative homology dimension")
            if h:
                out[(r, j)] = h
    return BigradedDims(out)


def khovanov_homology(d: OrientedDiagram) -> BigradedDims:
    return homology(khovanov_complex(d))


def jones(d: OrientedDiagram) -> LaurentPolynomial:
    """J(L) = chi_q(C(L)) / (q + 1/q); the division must be exact."""
    if not d.crossings and not d.edges and not d.free_loops:
        raise ValueError("the empty diagram has no Jones polynomial here")
    chi = khovanov_complex(d).chi_q()
    return chi.exact_div(LaurentPolynomial.qdim_v())


def jones_t(j: LaurentPolynomial) -> str:
    """Render J after q = -t^(1/2)."""
    return format_laurent(j.substitute_t(), "t")


# ---------------------------------------------------------------------------
# homology with representatives (used for the E2 page computed by hand)


def _reduce(vec: Mapping[int, object], order: Sequence[int], piv: Mapping[int, Mapping[int, object]]) -> dict:
    v = dict(vec)
    for p in order:
        f = v.get(p)
        if not f:
            continue
        for k, x in piv[p].items():
            nv = v.get(k, 0) - f * x
            if nv:
                v[k] = nv
            else:
                v.pop(k, None)
    return v


@dataclass
class HomologyBlock:
    """Cycles modulo boundaries in one (r, q) block, with a chosen set of representatives."""

    r: int
    q: int
    positions: list[int]              # basis positions (in degree r) of this q block
    representatives: list[dict]       # sparse vectors over degree-r basis positions
    _b_order: list[int] = field(default_factory=list, repr=False)
    _b_piv: dict = field(default_factory=dict, repr=False)
    _r_order: list[int] = field(default_factory=list, repr=False)
    _r_piv: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def project(self, cycle: Mapping[int, object]) -> list:
        """Coordinates of the class of `cycle` against the representatives."""
        v = _reduce(cycle, self._b_order, self._b_piv)
        coords = [0] * len(self._r_order)
        for i, p in enumerate(self._r_order):
            coords[i] = v.get(p, 0)
        rest = _reduce(v, self._r_order, self._r_piv)
        if rest:
            raise ComplexError("vector is not a cycle of this block")
        return coords


def homology_block(c: GradedChainComplex, r: int, j: int) -> HomologyBlock:
    positions = c.q_blocks(r).get(j, [])
    pos_set = set(positions)
    out_m = c.d.get(r)
    in_m = c.d.get(r - 1)
    # cycles
    if out_m is not None and positions:
        rows = c.q_blocks(r + 1).get(j, [])
        sub = out_m.submatrix(rows, positions)
        _, ker = rank_and_kernel(sub)
        cycles = [{positions[k]: v for k, v in vec.items()} for vec in ker]
    else:
        cycles = [{p: 1} for p in positions]
    # boundaries: images of the q-block j basis of degree r-1
    bnd = []
    if in_m is not None:
        srcs = c.q_blocks(r - 1).get(j, [])
        cols = in_m.transpose()
        for s in srcs:
            v = {k: x for k, x in cols.row(s).items() if k in pos_set}
            if v:
                bnd.append(v)
    b_order, b_piv = _echelon(bnd)
    reduced = [_reduce(z, b_order, b_piv) for z in cycles]
    r_order, r_piv = _echelon([z for z in reduced if z])
    reps = [r_piv[p] for p in r_order]
    return HomologyBlock(r, j, list(positions), reps, b_order, b_piv, r_order, r_piv)
