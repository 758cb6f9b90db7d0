"""Command-line front end: ``khsplit <command> [target] [options]``.

A target is a catalog name (an unknown name prints the list) or a path to a
JSON file in the format of :mod:`khsplit.io`.

Exit codes: 0 ok / PASS, 1 a computed check FAILed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import catalog
from .algebra import LaurentPolynomial, format_laurent
from .diagrams import CutPresentation, DiagramError, OrientedDiagram, glue
from .double_complex import (build_double_complex, check_convergence, compare_with_khovanov, format_grid,
                             spectral_sequence)
from .io import ParseError, dumps, load
from .khovanov import BigradedDims, homology, jones, jones_t, khovanov_complex
from .partitions import enumerate_nc
from .splitting import build_splitting_matrix, format_matrix, jones_split
from .surgery import surgery

COMMANDS = ("jones", "kh", "surgeries", "split", "dc", "ss", "nc", "selftest")


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: list[str]
    inputs: dict[str, Any] = field(default_factory=dict)
    outputs: dict[str, Any] = field(default_factory=dict)
    verdicts: dict[str, bool] = field(default_factory=dict)
    seconds: float = 0.0
    text: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "outputs": self.outputs,
                "verdicts": self.verdicts, "ok": self.ok, "seconds": round(self.seconds, 4)}


# -- helpers --------------------------------------------------------------


def resolve(target: str) -> tuple[str, OrientedDiagram | CutPresentation]:
    if target in catalog.names():
        return target, catalog.get(target).obj
    path = Path(target)
    if not path.exists():
        raise InputError(f"{target!r} is neither a catalog name nor a file; "
                         f"catalog: {', '.join(catalog.names())}")
    try:
        return str(path), load(path)
    except (ParseError, DiagramError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def as_diagram(obj) -> OrientedDiagram:
    return glue(obj) if isinstance(obj, CutPresentation) else obj


def as_cut(obj, target: str) -> CutPresentation:
    if not isinstance(obj, CutPresentation):
        raise InputError(f"{target}: this command needs a cut presentation, got a diagram")
    return obj


def _poly(p: LaurentPolynomial) -> dict[str, int]:
    return {str(k): int(v) if v == int(v) else str(v) for k, v in p.items()}


def _dims(d: BigradedDims) -> list[list[int]]:
    return [[r, j, v] for (r, j), v in d.dims.items()]


def _grid_json(grid) -> dict[str, dict[str, int]]:
    return {f"{s},{t}": {str(j): v for j, v in cell.items()} for (s, t), cell in grid.items()}


# -- commands -------------------------------------------------------------


def cmd_jones(args, rep: RunReport) -> None:
    name, obj = resolve(args.target)
    j = jones(as_diagram(obj))
    rep.inputs["target"] = name
    rep.outputs["jones_q"] = _poly(j)
    rep.text.append(f"J({name}) = {format_laurent(dict(j.items()), 'q')}")
    if args.t_variable:
        rep.outputs["jones_t"] = jones_t(j)
        rep.text.append(f"        = {jones_t(j)}   (q = -t^1/2)")


def cmd_kh(args, rep: RunReport) -> None:
    name, obj = resolve(args.target)
    d = as_diagram(obj)
    kh = homology(khovanov_complex(d))
    rep.inputs["target"] = name
    rep.outputs["kh"] = _dims(kh)
    rep.outputs["summands"] = str(kh)
    rep.text += [f"Kh({name}) = {kh}", kh.table()]
    want = catalog.get(name).expected.get("kh") if name in catalog.names() else None
    if want is not None:
        rep.verdicts["matches catalog"] = kh == want


def cmd_surgeries(args, rep: RunReport) -> None:
    name, obj = resolve(args.target)
    cp = as_cut(obj, name)
    rep.inputs["target"] = name
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    files = {}
    for side in (1, 2):
        for p in enumerate_nc(cp.n):
            d = surgery(cp, side, p)
            key = f"L{side}^{p}"
            text = dumps(d)
            if out_dir:
                fname = f"{Path(name).stem}_L{side}_{'-'.join(''.join(map(str, b)) for b in p.blocks) or 'empty'}.json"
                (out_dir / fname).write_text(text + "\n")
                files[key] = str(out_dir / fname)
                rep.text.append(f"{key}: {len(d.crossings)} crossings -> {out_dir / fname}")
            else:
                files[key] = json.loads(text)
                rep.text += [f"# {key}", text]
    rep.outputs["surgeries"] = files


def cmd_split(args, rep: RunReport) -> None:
    name, obj = resolve(args.target)
    cp = as_cut(obj, name)
    r = jones_split(cp, rule=args.rule)
    rep.inputs.update(target=name, rule=args.rule)
    idx = [str(p) for p in r.matrix.index]
    rep.outputs.update(
        index=idx,
        c=[[str(x) for x in row] for row in r.matrix.c.to_rows()],
        b=[[str(x) for x in row] for row in r.matrix.b.to_rows()],
        jones_L1={str(p): _poly(j) for p, j in r.jones1.items()},
        jones_L2={str(p): _poly(j) for p, j in r.jones2.items()},
        lhs=_poly(r.lhs), rhs=str(r.rhs), notes=r.notes)
    rep.verdicts["splitting identity"] = r.ok
    rep.text.append(f"cut {name}, n = {cp.n}, NC_n = {' '.join(idx)}")
    rep.text += ["c ="] + ["  " + ln for ln in format_matrix(r.matrix.c)]
    rep.text += ["b = c^-1 ="] + ["  " + ln for ln in format_matrix(r.matrix.b)]
    for side, js in ((1, r.jones1), (2, r.jones2)):
        for p, j in js.items():
            rep.text.append(f"J(L{side}^{p}) = {format_laurent(dict(j.items()), 'q')}")
    rep.text.append(f"J(L)              = {format_laurent(dict(r.lhs.items()), 'q')}")
    rep.text.append(f"sum J(L1) b J(L2) = {r.rhs}")
    rep.text += [f"note: {n}" for n in r.notes]


def cmd_dc(args, rep: RunReport) -> None:
    name, obj = resolve(args.target)
    cp = as_cut(obj, name)
    dc = build_double_complex(cp)
    cmp = compare_with_khovanov(cp, dc)
    problems = dc.check()
    rep.inputs["target"] = name
    rep.outputs.update(grid=_grid_json(dc.dims()), tot_homology=_dims(cmp.tot_homology), kh=_dims(cmp.kh),
                       generators_match=cmp.generators_match, exact_equal=cmp.exact_equal,
                       regauge_equal=cmp.regauge_equal, notes=cmp.notes, problems=problems)
    rep.verdicts["d^2 = 0 and block structure"] = not problems
    rep.verdicts["H(Tot) = Kh"] = cmp.homology_equal
    rep.text += [f"double complex of {name} (columns s from side 1, rows t from side 2):", format_grid(dc.dims())]
    rep.text.append(f"generator bijection: {cmp.generators_match}; Tot = C(L) exactly: {cmp.exact_equal}; "
                    f"after regauge: {cmp.regauge_equal}")
    rep.text.append(f"H(Tot) = {cmp.tot_homology}")
    rep.text.append(f"Kh(L)  = {cmp.kh}")
    rep.text += [f"note: {n}" for n in cmp.notes] + [f"problem: {p}" for p in problems]


def cmd_ss(args, rep: RunReport) -> None:
    name, obj = resolve(args.target)
    cp = as_cut(obj, name)
    ss = spectral_sequence(build_double_complex(cp))
    pages = [args.page] if args.page is not None else sorted(ss.pages)
    first = min(ss.pages)
    if any(r < first for r in pages):
        raise InputError(f"--page must be >= {first}")
    conv = check_convergence(ss, homology(khovanov_complex(glue(cp))))
    rep.inputs.update(target=name, pages=pages)
    rep.outputs.update(pages={str(r): _grid_json(ss.grid(r)) for r in pages},
                       collapse_page=ss.collapse_page, last_page=ss.last_page)
    rep.verdicts["E_inf totals = Kh"] = conv.ok
    rep.verdicts["pages weakly decrease"] = ss.monotone()
    for r in pages:
        rep.text += [f"E_{r}:", format_grid(ss.grid(r)), ""]
    rep.text.append(f"collapses at E_{ss.collapse_page} (stable from E_{ss.last_page} on by boundedness)")


def cmd_nc(args, rep: RunReport) -> None:
    if args.n is None or args.n < 0:
        raise InputError("nc needs --n k with k >= 0")
    idx = enumerate_nc(args.n)
    rep.inputs.update(n=args.n, rule=args.rule)
    rep.outputs["partitions"] = [str(p) for p in idx]
    rep.text.append(f"|NC_{args.n}| = {len(idx)}")
    rep.text += [f"  {k}: {p}" for k, p in enumerate(idx)]
    if args.matrix:
        m = build_splitting_matrix(args.n, rule=args.rule)
        rep.outputs["c"] = [[str(x) for x in row] for row in m.c.to_rows()]
        rep.outputs["b"] = [[str(x) for x in row] for row in m.b.to_rows()]
        rep.verdicts["c b = I"] = m.inverse_ok()
        rep.text += ["c =  (u = q + q^-1)"] + ["  " + ln for ln in format_matrix(m.c)]
        rep.text += ["b = c^-1 ="] + ["  " + ln for ln in format_matrix(m.b)]


def cmd_selftest(args, rep: RunReport) -> None:
    from .acceptance import run_all
    for r in run_all():
        rep.verdicts[f"criterion {r.cid}"] = r.ok
        rep.outputs[f"criterion {r.cid}"] = {"title": r.title, "ok": r.ok, "detail": r.detail,
                                              "seconds": round(r.seconds, 3)}
        rep.text.append(r.line())


HANDLERS = {"jones": cmd_jones, "kh": cmd_kh, "surgeries": cmd_surgeries, "split": cmd_split,
            "dc": cmd_dc, "ss": cmd_ss, "nc": cmd_nc, "selftest": cmd_selftest}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="khsplit", description="Khovanov homology and Jones splitting along admissible cuts")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("jones", "kh", "surgeries", "split", "dc", "ss"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("target", help="catalog name or JSON file")
        if name == "jones":
            sp.add_argument("--t-variable", action="store_true", help="also print J in t with q = -t^(1/2)")
        if name == "surgeries":
            sp.add_argument("--out", help="write one file per surgery into this directory")
        if name == "ss":
            sp.add_argument("--page", type=int, help="only this page (default: all computed pages)")
        if name == "split":
            sp.add_argument("--rule", choices=("loops", "closure"), default="loops",
                            help="exponent of u in c: true loop count or n + |AvB| - |A^B|")
    sp = sub.add_parser("nc", parents=[common])
    sp.add_argument("--n", type=int)
    sp.add_argument("--matrix", action="store_true", help="print c and its inverse b")
    sp.add_argument("--rule", choices=("loops", "closure"), default="closure")
    sub.add_parser("selftest", parents=[common])
    return p


def run(argv: list[str]) -> tuple[RunReport, int]:
    args = build_parser().parse_args(argv)
    rep = RunReport(["khsplit", *argv])
    t0 = time.perf_counter()
    HANDLERS[args.command](args, rep)
    rep.seconds = time.perf_counter() - t0
    if rep.verdicts:
        rep.text.append(("PASS" if rep.ok else "FAIL") + f"  ({rep.seconds:.2f}s)")
    return rep, (0 if rep.ok else 1)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "json" if "--format" in argv and argv[argv.index("--format") + 1:][:1] == ["json"] else "text"
    try:
        rep, code = run(argv)
    except InputError as exc:
        if fmt == "json":
            print(json.dumps({"command": ["khsplit", *argv], "error": str(exc)}))
        else:
            print(f"khsplit: error: {exc}", file=sys.stderr)
        return 2
    if fmt == "json":
        print(json.dumps(rep.to_json(), indent=1))
    else:
        print("\n".join(rep.text))
    return code


if __name__ == "__main__":
    sys.exit(main())
