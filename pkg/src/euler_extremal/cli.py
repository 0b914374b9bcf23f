"""Command-line front end.

Exit codes: 0 when every check passes, 1 when any check fails, 2 on usage,
input or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import isqrt
from pathlib import Path

from . import cycles, fas, generators, verify
from .graph import GraphError, dumps, is_eulerian, min_positive_out_degree, read_arc_list
from .reports import FAIL, PASS, SKIPPED, BoundReport, fmt

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rat(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)


def _load(path: str):
    try:
        return read_arc_list(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.family} requires {', '.join(missing)}")


# -- generate ---------------------------------------------------------------

def cmd_generate(args) -> int:
    fam = args.family
    labels = None
    if fam == "cayley":
        _need(args, "n", "t")
        g = generators.cayley_circulant(args.n, args.t)
    elif fam == "hst":
        _need(args, "s", "t")
        g = generators.gadget_hst(args.s, args.t)
    elif fam == "blowup":
        _need(args, "delta")
        if args.base:
            base = _load(args.base)
        else:
            _need(args, "s", "t")
            base = generators.gadget_hst(args.s, args.t)
        g = generators.blowup(generators.BlowupSpec(base, args.delta))
    elif fam == "dfs-cx":
        _need(args, "t")
        if not args.out:
            raise UsageError("dfs-cx writes a label side file and needs --out")
        g, labels = generators.dfs_counterexample(args.t)
    else:
        _need(args, "n", "m", "seed")
        g = generators.random_eulerian(args.n, args.m, args.seed)
    _emit(dumps(g), args.out)
    if labels is not None:
        side = Path(args.out + ".labels.json")
        side.write_text(json.dumps({str(v): labels[v] for v in sorted(labels)}, indent=0) + "\n")
    return EXIT_OK


# -- analyses ---------------------------------------------------------------

def cmd_fas(args) -> int:
    g = _load(args.graph)
    try:
        res = fas.exact_beta(g, cap=args.cap)
    except fas.CapExceeded as exc:
        raise UsageError(str(exc)) from None
    bound = fas.beta_lower_bound(g.n, g.m)
    eulerian = is_eulerian(g)
    if res.beta == bound:
        verdict = "TIGHT"
    elif res.beta > bound:
        verdict = "SLACK"
    else:
        verdict = "BELOW"  # only possible off the Eulerian class
    if args.json:
        print(json.dumps({
            "n": g.n, "m": g.m, "beta": res.beta, "witness": list(res.witness.seq),
            "bound": _rat(bound), "verdict": verdict, "eulerian": eulerian,
        }))
    else:
        print(f"beta={res.beta}")
        print(" ".join(map(str, res.witness.seq)))
        note = "" if eulerian else " (not Eulerian: bound does not apply)"
        print(f"bound={fmt(bound)} {verdict}{note}")
    return EXIT_OK


def cmd_girth(args) -> int:
    g = _load(args.graph)
    found = cycles.girth(g)
    report = cycles.girth_bound_check(g) if found and is_eulerian(g) else None
    if args.json:
        print(json.dumps({
            "girth": found[0] if found else None,
            "witness": list(found[1].vertices) if found else None,
            "report": report.to_dict() if report else None,
        }))
    elif found is None:
        print("acyclic")
    else:
        print(f"girth={found[0]}")
        print(" ".join(map(str, found[1].vertices)))
        if report:
            print(f"6n^2/m={fmt(report.bound)} {report.verdict}")
    return EXIT_OK if report is None or report.verdict == PASS else EXIT_FAIL


def cmd_subgraph(args) -> int:
    g = _load(args.graph)
    peeled, _ = cycles.peel_short_cycles(g)
    h, kept = cycles.min_degree_eulerian_subgraph(g, peeled)
    degree, _ = min_positive_out_degree(h)
    t = len(peeled)
    need = -(-t // g.n)
    bound = Fraction(g.m ** 2, 24 * g.n ** 3)
    if args.out:
        Path(args.out).write_text(dumps(h), encoding="ascii")
    if args.json:
        print(json.dumps({
            "peeled": t, "kept": len(kept), "arcs": h.m, "min_positive_out_degree": degree,
            "ceil_t_over_n": need, "bound": _rat(bound),
        }))
    else:
        print(f"peeled={t} kept={len(kept)} arcs={h.m}")
        print(f"min_positive_out_degree={degree} ceil(t/n)={need} m^2/24n^3={fmt(bound)}")
    return EXIT_OK if degree >= need and degree >= bound else EXIT_FAIL


def cmd_longcycle(args) -> int:
    g = _load(args.graph)
    if args.combined:
        cyc = cycles.long_cycle_combined(g)
        bound = cycles.long_cycle_guarantee(g.n, g.m)
    else:
        cyc = cycles.long_cycle(g)
        bound = Fraction(1 + isqrt(g.m // g.n))
    if args.json:
        print(json.dumps({"length": cyc.length, "cycle": list(cyc.vertices), "bound": _rat(bound)}))
    else:
        print(f"length={cyc.length} bound={fmt(bound)}")
        print(" ".join(map(str, cyc.vertices)))
    return EXIT_OK if cyc.length >= bound else EXIT_FAIL


def _read_labels(path: str) -> dict[int, str]:
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read labels {path}: {exc}") from None
    return {int(k): v for k, v in raw.items()}


def cmd_dfs(args) -> int:
    g = _load(args.graph)
    priority = None
    root = args.root
    if args.policy == "prop9":
        labels_path = args.labels or args.graph + ".labels.json"
        labels = _read_labels(labels_path)
        priority = cycles.prop9_priority(g, labels)
        if root is None:
            root = next(v for v, lab in labels.items() if lab == "r")
    if root is None:
        root = 0
    tree = cycles.dfs_tree(g, root, priority)
    if args.json:
        print(json.dumps({
            "root": tree.root, "depth": tree.depth,
            "depths": {str(k): v for k, v in tree.depths.items()},
            "order": list(tree.order), "tree_arcs": tree.tree_arcs(),
        }))
    else:
        print(f"root={tree.root} depth={tree.depth} trees={len(tree.depths)}")
        print(" ".join(map(str, tree.order)))
    return EXIT_OK


# -- verification -----------------------------------------------------------

def cmd_verify(args) -> int:
    g = _load(args.graph)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    if not checks:
        raise UsageError("no checks requested")
    try:
        reports = verify.run_checks(g, checks, cap=args.cap)
    except (ValueError, GraphError) as exc:
        raise UsageError(str(exc)) from None
    text = "".join(r.to_json() + "\n" for r in reports)
    if args.out:
        with open(args.out, "a", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if any(r.verdict == FAIL for r in reports):
        return EXIT_FAIL
    if args.strict and any(r.verdict == SKIPPED for r in reports):
        return EXIT_FAIL
    return EXIT_OK


def summarize(reports: list[BoundReport]) -> dict:
    rows: dict[str, dict] = {}
    total = Fraction(0)
    for r in reports:
        key = r.check or r.quantity
        row = rows.setdefault(key, {"check": key, "quantity": r.quantity, PASS: 0, FAIL: 0,
                                    SKIPPED: 0, "worst_slack": None})
        row[r.verdict] += 1
        s = r.slack
        if s is not None and (row["worst_slack"] is None or s < row["worst_slack"]):
            row["worst_slack"] = s
        total += r.timing_ms
    ordered = [rows[k] for k in sorted(rows)]
    return {"rows": ordered, "total_ms": total,
            "failed": [row["check"] for row in ordered if row[FAIL]]}


def cmd_report(args) -> int:
    folder = Path(args.batch_dir)
    if not folder.is_dir():
        raise UsageError(f"cannot read directory {folder}")
    reports = []
    try:
        for path in sorted(folder.glob("*.jsonl")):
            for line in path.read_text(encoding="utf-8").splitlines():
                if line.strip():
                    reports.append(BoundReport.from_json(line))
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"bad report file: {exc}") from None
    summary = summarize(reports)
    if args.json:
        print(json.dumps({
            "rows": [{**row, "worst_slack": None if row["worst_slack"] is None
                      else _rat(row["worst_slack"])} for row in summary["rows"]],
            "total_ms": _rat(summary["total_ms"]),
            "failed": summary["failed"],
        }))
    else:
        print(f"{'check':<10} {'quantity':<24} {'PASS':>5} {'FAIL':>5} {'SKIP':>5}  worst slack")
        for row in summary["rows"]:
            print(f"{row['check']:<10} {row['quantity']:<24} {row[PASS]:>5} {row[FAIL]:>5} "
                  f"{row[SKIPPED]:>5}  {fmt(row['worst_slack'])}")
        print(f"total runtime: {float(summary['total_ms']):.1f} ms")
    if summary["failed"]:
        failing = sorted({r.quantity for r in reports if r.verdict == FAIL})
        print(f"FAIL: {', '.join(failing)}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="euler-extremal",
                                description="Extremal bounds on Eulerian digraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write an instance in arc-list format")
    gen.add_argument("family", choices=["cayley", "hst", "blowup", "dfs-cx", "random"])
    gen.add_argument("--n", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--t", type=int)
    gen.add_argument("--s", type=int)
    gen.add_argument("--delta", type=int)
    gen.add_argument("--base", help="arc-list file to blow up instead of H(s,t)")
    gen.add_argument("--seed", type=int)
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_generate)

    def analysis(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("graph")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)
        return sp

    f = analysis("fas", cmd_fas, "exact minimum feedback arc set")
    f.add_argument("--cap", type=int, help="exact-solver vertex cap")
    analysis("girth", cmd_girth, "shortest cycle and the 6n^2/m bound")
    sg = analysis("subgraph", cmd_subgraph, "high min-degree Eulerian subgraph")
    sg.add_argument("--out")
    lc = analysis("longcycle", cmd_longcycle, "cycle of length >= 1 + floor(sqrt(m/n))")
    lc.add_argument("--combined", action="store_true",
                    help="also try the dense-subgraph route and keep the longer cycle")
    d = analysis("dfs", cmd_dfs, "depth-first search tree")
    d.add_argument("--root", type=int)
    d.add_argument("--policy", choices=["id", "prop9"], default="id")
    d.add_argument("--labels", help="role-label JSON (default: <graph>.labels.json)")

    v = sub.add_parser("verify", help="emit bound reports as JSON lines")
    v.add_argument("graph")
    v.add_argument("--checks", default=",".join(verify.CHECKS),
                   help=f"comma-separated subset of {','.join(verify.CHECKS)}")
    v.add_argument("--strict", action="store_true", help="treat SKIPPED as failure")
    v.add_argument("--cap", type=int)
    v.add_argument("--out", help="append reports to this file")
    v.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON lines")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report", help="summarise a directory of report files")
    r.add_argument("batch_dir")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, fas.CapExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
