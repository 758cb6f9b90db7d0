"""Acceptance criteria, shared by ``khsplit selftest`` and the test-suite.

Each criterion returns a Result; ``detail`` lists the sub-checks that failed
(or a short summary when everything passed). All comparisons are exact.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from . import catalog
from .algebra import ExactMatrix, LaurentPolynomial, RationalFunction
from .diagrams import glue
from .double_complex import (build_double_complex, check_convergence, compare_with_khovanov, e2_direct,
                             spectral_sequence)
from .khovanov import build_cube, homology, jones, khovanov_complex, khovanov_homology
from .partitions import SetPartition, dihedral_act, dihedral_group, enumerate_nc, is_noncrossing, meet
from .splitting import (TwoVariablePoly, all_pieces, build_splitting_matrix, groth_recover, jones_split,
                        verify_decomposition)
from .surgery import closure_circle_count, matching_cycle_count, surgery

TIME_BUDGET_S = 60.0


@dataclass
class Result:
    cid: str
    title: str
    ok: bool
    detail: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        tail = f" -- {'; '.join(self.detail)}" if self.detail else ""
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.cid}. {self.title}{tail}"


class _Checks:
    def __init__(self):
        self.failed: list[str] = []
        self.count = 0

    def __call__(self, cond: bool, label: str) -> None:
        self.count += 1
        if not cond:
            self.failed.append(label)


def qdims_of(mult: int, k: int, shift: int) -> dict[int, int]:
    """q-graded dims of mult copies of V^(x)k {shift}."""
    p = LaurentPolynomial.qdim_v() ** k * LaurentPolynomial.monomial(shift, mult)
    return {j: int(v) for j, v in p.items()}




SOLOMON_KH = {(0, 0): 1, (0, 2): 1, (1, 2): 1, (2, 6): 1, (4, 8): 1, (4, 10): 1}

# the double-complex display: (s, t) -> (multiplicity, tensor power, q-shift)
SOLOMON_CC = {
    (0, 0): (1, 4, 4), (1, 0): (2, 3, 5), (2, 0): (1, 2, 6),
    (0, 1): (2, 3, 5), (1, 1): (4, 2, 6), (2, 1): (2, 1, 7),
    (0, 2): (1, 2, 6), (1, 2): (2, 1, 7), (2, 2): (1, 2, 8),
}
SOLOMON_E1 = {(0, 0): (1, 2, 2), (1, 0): (2, 1, 3), (2, 0): (1, 1, 5), (2, 2): (1, 1, 9)}
SOLOMON_E2 = {(0, 0): {0: 1, 2: 1}, (1, 0): {2: 1}, (2, 0): {6: 1}, (2, 2): {8: 1, 10: 1}}


def _grid(page: dict) -> dict:
    out: dict = {}
    for (s, t, j), v in page.items():
        out.setdefault((s, t), {})[j] = v
    return out


def criterion_1() -> list[str]:
    c = _Checks()
    u = catalog.get("unknot").obj
    c(khovanov_homology(u) == {(0, 1): 1, (0, -1): 1}, "Kh(unknot) != V")
    c(jones(u) == LaurentPolynomial.const(1), "J(unknot) != 1")
    return c.failed


def criterion_2() -> list[str]:
    c = _Checks()
    h = catalog.get("hopf").obj
    c((h.l_plus, h.l_minus) == (2, 0), "Hopf signs")
    c(khovanov_homology(h) == {(0, 0): 1, (0, 2): 1, (2, 4): 1, (2, 6): 1}, "Kh(Hopf) != V{1}+V{5}[2]")
    c(jones(h) == LaurentPolynomial({1: 1, 5: 1}), "J(Hopf) != q+q^5")
    return c.failed


def criterion_3() -> list[str]:
    c = _Checks()
    cp = catalog.get("solomon_cut").obj
    full, triv = SetPartition.full(2), SetPartition.trivial(2)
    # (a) C(L1^full): V^3{2} -> 2 V^2{3} -> V{4}
    L1 = surgery(cp, 1, full)
    cx = khovanov_complex(L1)
    want = {(0, j): v for j, v in qdims_of(1, 3, 2).items()}
    want.update({(1, j): v for j, v in qdims_of(2, 2, 3).items()})
    want.update({(2, j): v for j, v in qdims_of(1, 1, 4).items()})
    c(cx.chain_dims() == want, "(a) C(L1^full) gradings")
    cube = build_cube(L1)
    c([len(cube.circles[s]) for s in sorted(cube.circles, key=lambda s: (sum(s), s))] == [3, 2, 2, 1],
      "(a) circle counts 3,2,2,1")
    c(homology(cx) == {(0, 1): 1, (0, -1): 1}, "(a) L1^full is an unknot")
    # (b) bigraded pieces
    pieces = all_pieces(cp, 1)
    c(pieces[full] == TwoVariablePoly({(0, 1): 1, (0, 3): 1, (1, 3): 2}), "(b) C(L1)_full != V{2}+2k{3}[1]")
    c(pieces[triv] == TwoVariablePoly({(2, 4): 1}), "(b) C(L1)_trivial != k{4}[2]")
    c(groth_recover(cp, 1) == pieces, "(b) recovery from surgeries")
    # (c) double complex grid
    dc = build_double_complex(cp)
    c(dc.dims() == {st: qdims_of(*v) for st, v in SOLOMON_CC.items()}, "(c) double complex grid")
    # (d) E1, E2
    ss = spectral_sequence(dc)
    c(_grid(ss.page(1)) == {st: qdims_of(*v) for st, v in SOLOMON_E1.items()}, "(d) E1 page")
    c(_grid(ss.page(2)) == SOLOMON_E2, "(d) E2 page")
    # (e) collapse at 2
    c(ss.collapse_page == 2, f"(e) collapse page {ss.collapse_page}")
    # (f) Kh(L)
    kh = khovanov_homology(glue(cp))
    c(kh == SOLOMON_KH, "(f) Kh(Solomon)")
    c(check_convergence(ss, kh).ok, "(f) E_inf totals")
    return c.failed


def criterion_4() -> list[str]:
    c = _Checks()
    u = LaurentPolynomial.qdim_v()
    rep = jones_split(catalog.get("solomon_cut").obj)
    c(rep.ok, "Solomon splitting formula")
    c(rep.lhs == LaurentPolynomial({1: 1, 3: -1, 5: 1, 9: 1}), "J(Solomon)")
    den = u * u - 1
    want = ExactMatrix(2, 2, {(0, 0): RationalFunction(u, den), (1, 1): RationalFunction(u, den),
                              (0, 1): RationalFunction(-1, den), (1, 0): RationalFunction(-1, den)})
    c(rep.matrix.b == want, "b != (1/(u^2-1))[[u,-1],[-1,u]]")
    for name in ("trefoil_hopf_cut", "hopf_connected_sum_cut"):
        cp = catalog.get(name).obj
        r = jones_split(cp)
        j1 = jones(surgery(cp, 1, SetPartition.full(1)))
        j2 = jones(surgery(cp, 2, SetPartition.full(1)))
        c(r.ok and r.lhs == j1 * j2, f"{name}: J(L1#L2) != J(L1) J(L2)")
    return c.failed


def criterion_5() -> list[str]:
    c = _Checks()
    for e in catalog.cuts():
        rep = compare_with_khovanov(e.obj)
        c(rep.homology_equal, f"{e.name}: H(Tot) != Kh")
        if e.name == "solomon_cut":
            c(rep.generator_level, "solomon_cut: generator-level mismatch")
    return c.failed


def criterion_6() -> list[str]:
    c = _Checks()
    for name in ("half_solomon_cut", "mirror_half_solomon_cut", "hopf_connected_sum_cut",
                 "mirror_hopf_connected_sum_cut"):
        ss = spectral_sequence(build_double_complex(catalog.get(name).obj))
        c(ss.collapse_page <= 2, f"{name}: collapse page {ss.collapse_page}")
        rows = ss.rows(2)
        c(len(rows) <= 2 and (not rows or max(rows) - min(rows) in (0, 2)), f"{name}: E2 rows {sorted(rows)}")
    return c.failed


def _catalan(n: int) -> int:
    from math import comb
    return comb(2 * n, n) // (n + 1)


def criterion_7() -> list[str]:
    c = _Checks()
    for n in range(1, 6):
        c(len(enumerate_nc(n)) == _catalan(n) == [1, 2, 5, 14, 42][n - 1], f"|NC_{n}|")
    bad = {}
    for n in range(1, 5):
        nc = enumerate_nc(n)
        k = sum(1 for a in nc for b in nc if closure_circle_count(a, b) != matching_cycle_count(a, b))
        if k:
            bad[n] = k
    c(not bad, "closure count != cycle count for " + ", ".join(f"{k} pairs at n={n}" for n, k in bad.items()))
    for n in range(1, 6):
        nc = enumerate_nc(n)
        c(all(is_noncrossing(meet(a, b)) for a in nc for b in nc), f"NC_{n} not closed under meet")
        c(all(is_noncrossing(dihedral_act(r, p, f)) for p in nc for r, f in dihedral_group(n)),
          f"NC_{n} not closed under D_{n}")
    return c.failed


def criterion_8() -> list[str]:
    c = _Checks()
    diagrams = [e.obj for e in catalog.diagrams()]
    for e in catalog.cuts():
        diagrams += [surgery(e.obj, side, p) for side in (1, 2) for p in enumerate_nc(e.obj.n)]
    for d in diagrams:
        cx = khovanov_complex(d)
        try:
            cx.check_d_squared()
            cx.check_q_degree()
        except ArithmeticError as exc:
            c(False, f"{d.name}: {exc}")
        c(cx.chi_q() == homology(cx).euler(), f"{d.name}: chi_q(chains) != chi_q(homology)")
    for n in range(0, 5):
        c(build_splitting_matrix(n).inverse_ok(), f"c b != I at n={n}")
    for e in catalog.cuts():
        c(verify_decomposition(e.obj).ok, f"{e.name}: decomposition identities")
        dc = build_double_complex(e.obj)
        ss = spectral_sequence(dc)
        c(e2_direct(e.obj, dc) == ss.page(2), f"{e.name}: e2_direct != page 2")
        c(ss.monotone(), f"{e.name}: pages not monotone")
    return c.failed


def criterion_9(elapsed: float) -> list[str]:
    c = _Checks()
    c(elapsed < TIME_BUDGET_S, f"criteria 1-8 took {elapsed:.1f}s (budget {TIME_BUDGET_S:.0f}s)")
    u = LaurentPolynomial.qdim_v()
    m1 = build_splitting_matrix(1)
    c(m1.c == ExactMatrix(1, 1, {(0, 0): RationalFunction(1)}) and m1.b == m1.c, "n=1 matrix is not [1]")
    m2 = build_splitting_matrix(2)
    c(m2.c.to_rows() == [[RationalFunction(u), RationalFunction(1)], [RationalFunction(1), RationalFunction(u)]],
      "n=2 matrix is not [[u,1],[1,u]]")
    m3 = build_splitting_matrix(3)
    c(m3.inverse_ok() and m3.is_symmetric() and m3.diagonal_dominant(), "n=3 matrix")
    return c.failed


CRITERIA: list[tuple[str, str, Callable[[], list[str]]]] = [
    ("1", "unknot: Kh = V, J = 1", criterion_1),
    ("2", "Hopf: Kh = V{1} + V{5}[2], J = q + q^5", criterion_2),
    ("3", "Solomon: complexes, pieces, grid, pages, collapse, Kh", criterion_3),
    ("4", "Jones splitting formula (Solomon, n = 1 connected sums)", criterion_4),
    ("5", "H(Tot) = Kh on all catalog cuts; generator-level for Solomon", criterion_5),
    ("6", "collapse for half Solomon / Hopf connected sum and mirrors", criterion_6),
    ("7", "NC combinatorics: Catalan counts, closure count, meet/dihedral closure", criterion_7),
    ("8", "property suites: d^2 = 0, chi_q, c b = I, decompositions, E2, monotone pages", criterion_8),
]


def run_criterion(cid: str) -> Result:
    for k, title, fn in CRITERIA:
        if k == cid:
            t = time.perf_counter()
            failed = fn()
            return Result(k, title, not failed, failed, time.perf_counter() - t)
    if cid == "9":
        return run_all()[-1]
    raise KeyError(cid)


def run_all() -> list[Result]:
    results = []
    for k, title, fn in CRITERIA:
        t = time.perf_counter()
        failed = fn()
        results.append(Result(k, title, not failed, failed, time.perf_counter() - t))
    elapsed = sum(r.seconds for r in results)
    t = time.perf_counter()
    failed = criterion_9(elapsed)
    results.append(Result("9", "desk scale: exact reproduction within the time budget", not failed, failed,
                          time.perf_counter() - t))
    return results


def main() -> int:
    results = run_all()
    for r in results:
        print(r.line())
    return 0 if all(r.ok for r in results) else 1


__all__ = ["Result", "CRITERIA", "run_all", "run_criterion", "main", "qdims_of"]
