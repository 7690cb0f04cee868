"""Command-line front end: generate families, analyse and classify graphs, run censuses and checks.

Exit status: 0 success, 1 a verification failed, 2 usage or size-guard error,
3 the input could not be parsed.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import families as fam
from . import guards
from .census import (
    census_col4_edge_bound,
    census_dcc5,
    find_ratio_threshold,
    property_sweep,
    summarize_col4,
)
from .classifier import ClaimViolation, NotApplicable, classify_dcc5
from .criticality import criticality_report
from .formats import FormatError, read_graphs, to_edge_list, to_graph6
from .graph import GraphError, complete_join
from .verify import SUITES, oracle_mismatches, random_corpus, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational a/b: {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


# name -> (argument names, builder)
FAMILIES = {
    "complete": (("n",), lambda n: fam.complete(n)),
    "edgeless": (("n",), lambda n: fam.edgeless(n)),
    "cycle": (("n",), lambda n: fam.cycle(n)),
    "path": (("n",), lambda n: fam.path(n)),
    "star": (("leaves",), lambda k: fam.star(k)),
    "cycle-square": (("n",), lambda n: fam.cycle_square(n)),
    "wheel": (("rim",), lambda n: fam.wheel(n)),
    "brick": (("kind",), lambda a: fam.brick(fam.BrickKind(a))),
    "glued": (("kind", "kind"), lambda a, b: fam.glued_pair(fam.BrickKind(a), fam.BrickKind(b))),
    "f-graph": (("k",), lambda k: fam.f_graph(k)),
    "f-graph-literal": (("k",), lambda k: fam.f_graph_literal(k)),
    "icosahedron": ((), lambda: fam.icosahedron()),
    "torus": (("rows", "cols"), lambda r, c: fam.toroidal_triangulated(r, c)),
    "ratio": (("p", "k"), lambda p, k: fam.ratio_family(p, k)),
    "cycle-square-join-complete": (("n", "t"), lambda n, t: complete_join(fam.cycle_square(n), fam.complete(t))),
    "petersen": ((), lambda: fam.petersen()),
}


def build_family(name: str, params: list):
    if name not in FAMILIES:
        raise UsageError(f"unknown family {name!r}; choose from {', '.join(sorted(FAMILIES))}")
    arg_names, make = FAMILIES[name]
    if len(params) != len(arg_names):
        raise UsageError(f"{name} takes {len(arg_names)} argument(s) ({' '.join(arg_names) or 'none'}), got {len(params)}")
    values = []
    for a, p in zip(arg_names, params):
        if a == "kind":
            if p not in {k.value for k in fam.BrickKind}:
                raise UsageError(f"brick kind must be k5 or k222, got {p!r}")
            values.append(p)
        else:
            try:
                values.append(int(p))
            except ValueError:
                raise UsageError(f"{a} must be an integer, got {p!r}")
    try:
        return make(*values)
    except GraphError as exc:
        raise UsageError(str(exc))


def load_graphs(source: str) -> list:
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source) as fh:
            text = fh.read()
    return read_graphs(text)


def label_of(G) -> str:
    if G.n > guards.CANON_CAP:
        return str(NotApplicable(f"n={G.n} exceeds the canonicalisation cap"))
    return str(classify_dcc5(G))


def analysis(G) -> dict:
    d = criticality_report(G).as_dict()
    d["class_label"] = label_of(G)
    return d


def emit(obj, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(obj, sort_keys=False) + "\n")
        return
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, list) and v and isinstance(v[0], (dict, list)):
                out.write(f"{k}:\n")
                for item in v:
                    out.write(f"  {json.dumps(item)}\n")
            else:
                out.write(f"{k}: {v if not isinstance(v, (list, dict)) else json.dumps(v)}\n")
    else:
        out.write(f"{obj}\n")


# ---------------------------------------------------------------- commands


def cmd_gen(args) -> int:
    G = build_family(args.family, args.params)
    if args.format == "edges":
        sys.stdout.write(to_edge_list(G))
    else:
        sys.stdout.write(to_graph6(G) + "\n")
    return EXIT_OK


def cmd_analyze(args) -> int:
    graphs = load_graphs(args.input)
    for i, G in enumerate(graphs):
        if i and not args.json:
            sys.stdout.write("\n")
        emit(analysis(G), args.json)
    return EXIT_OK


def cmd_classify(args) -> int:
    for G in load_graphs(args.input):
        label = label_of(G)
        emit({"graph6": to_graph6(G), "class_label": label} if args.json else label, args.json)
    return EXIT_OK


def write_sidecar(path: str, graph6s: list) -> None:
    if path:
        with open(path, "w") as fh:
            fh.writelines(g + "\n" for g in graph6s)


def cmd_census(args) -> int:
    if args.kind == "dcc5":
        rows = census_dcc5(args.nmax or 9, workers=args.workers)
        for row in rows:
            emit(row.as_dict(), args.json)
        write_sidecar(args.graph6_out, [g for row in rows for g, _ in row.hits])
        return EXIT_OK
    if args.kind == "col4-bound":
        records = census_col4_edge_bound(args.nmax or 8, workers=args.workers)
        for r in records:
            emit(r.as_dict(), args.json)
        summary = summarize_col4(records)
        emit({"summary": summary}, args.json)
        write_sidecar(args.graph6_out, [r.graph6 for r in records if r.is_extremal])
        return EXIT_FAIL if summary["bound_violations"] or not summary["extremal_all_wheels"] else EXIT_OK
    if args.kind == "sweep":
        rep = property_sweep(args.nmax or 7)
        emit(rep.as_dict(), args.json)
        write_sidecar(args.graph6_out, sorted({v.graph6 for v in rep.violations}))
        return EXIT_OK if rep.ok else EXIT_FAIL
    # ratio-threshold
    eps = args.epsilon if args.epsilon is not None else Fraction(1, 10)
    ps = [args.p] if args.p else [5, 6, 7]
    for p in ps:
        emit(find_ratio_threshold(p, eps).as_dict(), args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    ok = True
    for name in names:
        res = run_suite(name, args.nmax)
        ok &= res.passed
        if args.json:
            emit(res.as_dict(), True)
        else:
            sys.stdout.write(f"{name}: {'PASS' if res.passed else 'FAIL'}\n")
            for f in res.failures:
                sys.stdout.write(f"  {f}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    if args.input:
        graphs = load_graphs(args.input)
    else:
        graphs = random_corpus(args.count, args.seed if args.seed is not None else 0, args.nmax or 9)
    checked, bad = oracle_mismatches(graphs)
    emit({"checked": checked, "mismatches": bad}, args.json)
    return EXIT_FAIL if bad else EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON object per line")
    common.add_argument("--nmax", type=int, help="largest order to enumerate")
    common.add_argument("--epsilon", type=rational, help="rational a/b for ratio-threshold")
    common.add_argument("--format", choices=("graph6", "edges"), default="graph6", help="output format of gen")
    common.add_argument("--seed", type=int, help="seed for the random oracle corpus")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="degencrit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="print a named graph")
    p.add_argument("family", help=", ".join(sorted(FAMILIES)))
    p.add_argument("params", nargs="*")
    p.set_defaults(run=cmd_gen)

    p = sub.add_parser("analyze", parents=[common], help="colouring number and criticality report")
    p.add_argument("input", nargs="?", default="-", help="file of graph6 lines or one edge list; - for stdin")
    p.set_defaults(run=cmd_analyze)

    p = sub.add_parser("classify", parents=[common], help="class label for col-5 double-col-critical graphs")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("census", parents=[common], help="exhaustive enumeration censuses")
    p.add_argument("kind", choices=("dcc5", "col4-bound", "sweep", "ratio-threshold"))
    p.add_argument("--p", type=int, help="colouring number for ratio-threshold (default 5, 6, 7)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--graph6-out", help="write hit graphs to this file")
    p.set_defaults(run=cmd_census)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite", choices=("all",) + SUITES)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="compare fast and brute-force colouring numbers")
    p.add_argument("input", nargs="?", help="graphs to check; default is a seeded random corpus")
    p.add_argument("--count", type=int, default=500)
    p.set_defaults(run=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.run(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (FormatError, GraphError) as exc:
        sys.stderr.write(f"degencrit: input error: {exc}\n")
        return EXIT_PARSE
    except guards.GuardError as exc:
        sys.stderr.write(f"degencrit: {exc}\n")
        return EXIT_USAGE
    except ClaimViolation as exc:
        sys.stderr.write(f"degencrit: verification failed: {exc}\n")
        return EXIT_FAIL
    except OSError as exc:
        sys.stderr.write(f"degencrit: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
