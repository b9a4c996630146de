"""Command-line interface: ``hosoya {z,convert,inverse,seq,verify}``.

Exit codes: 0 success, 1 verification counterexample, 2 usage or parse
error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .caterpillar import (
    cf_from_spec,
    expand_spec,
    format_spec,
    parse_spec,
    spec_from_cf,
    z_fast,
)
from .contfrac import GeneralizedCF, Rational, evaluate, format_cf, parse_cf, simple_cf_expand
from .errors import HosoyaError, ParseError, SizeLimitError
from .inverse import inverse_exhaustive, inverse_paper
from .multigraph import format_edgelist, hosoya_index, matching_counts, parse_edgelist, to_dot
from .sequences import get_family
from .verify import run_verification

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class UsageError(Exception):
    pass


def _emit(args, lines: list[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text!r}")
    return value


def _read_graph(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return parse_edgelist(text)


def cmd_z(args) -> int:
    if args.spec is not None:
        spec = parse_spec(args.spec)
        z, graph = z_fast(spec), expand_spec(spec)
    elif args.cf is not None:
        cf = parse_cf(args.cf)
        z, graph = evaluate(cf).p, expand_spec(spec_from_cf(cf))
    else:
        graph = _read_graph(args.graph)
        z = None
    counts = matching_counts(graph) if args.counts else None
    if z is None:
        z = sum(counts) if counts is not None else hosoya_index(graph)
    lines = [str(z)]
    payload: dict = {"z": z}
    if counts is not None:
        lines.extend(f"{k} {c}" for k, c in enumerate(counts))
        payload["counts"] = counts
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_convert(args) -> int:
    if args.rational is not None:
        cf = GeneralizedCF.simple(simple_cf_expand(Rational.parse(args.rational)))
        spec = spec_from_cf(cf)
    elif args.cf is not None:
        cf = parse_cf(args.cf)
        spec = spec_from_cf(cf)
    else:
        spec = parse_spec(args.spec)
        cf = cf_from_spec(spec)
    if args.to == "cf":
        out = format_cf(cf)
    elif args.to == "spec":
        out = format_spec(spec)
    elif args.to == "dot":
        out = to_dot(expand_spec(spec)).rstrip("\n")
    else:
        out = format_edgelist(expand_spec(spec)).rstrip("\n")
    _emit(args, [out], {"to": args.to, "output": out})
    return EXIT_OK


def cmd_inverse(args) -> int:
    if args.mode == "paper":
        classes = inverse_paper(args.N)
    else:
        classes = inverse_exhaustive(args.N, args.max_spine)
    lines, records = [], []
    for c in classes:
        qs = ",".join(map(str, c.member_qs)) if c.members else "-"
        lines.append(f"{format_spec(c.representative)}\tq={qs}\tvertices={c.vertex_count}")
        records.append(
            {
                "spec": format_spec(c.representative),
                "q": list(c.member_qs),
                "cf": [format_cf(cf) for _, cf in c.members],
                "vertices": c.vertex_count,
            }
        )
    if args.dot:
        out_dir = Path(args.dot)
        out_dir.mkdir(parents=True, exist_ok=True)
        width = len(str(len(classes)))
        for i, c in enumerate(classes, start=1):
            (out_dir / f"class_{i:0{width}d}.dot").write_text(
                to_dot(expand_spec(c.representative), name=f"class_{i}")
            )
    _emit(args, lines, {"N": args.N, "mode": args.mode, "classes": records})
    return EXIT_OK


def cmd_seq(args) -> int:
    try:
        family = get_family(args.family)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    pairs = family.labelled_terms(args.count)
    records = []
    for label, value in pairs:
        spec = family.spec(label) if args.graph else None
        records.append(
            {"label": f"{family.symbol}_{label}", "value": value,
             "spec": format_spec(spec) if spec else None}
        )
    if args.graph:
        lines = [f"{r['label']}\t{r['value']}\t{r['spec'] or '-'}" for r in records]
    else:
        lines = [" ".join(str(v) for _, v in pairs)]
    _emit(args, lines, {"family": family.name, "terms": records})
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verification(args.max_n, args.max_entry, seed=args.seed, random_graphs=args.random)
    payload = {
        "specs_checked": report.specs_checked,
        "graphs_checked": report.graphs_checked,
        "ok": report.ok,
        "problems": report.problems,
    }
    if report.ok:
        lines = [f"OK: {report.specs_checked} specs, {report.graphs_checked} random graphs agree"]
    else:
        lines = ["COUNTEREXAMPLE"] + report.problems
    _emit(args, lines, payload)
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")

    parser = argparse.ArgumentParser(prog="hosoya", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("z", parents=[common], help="Hosoya index of a spec, CF or graph file")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--spec", help='caterpillar-bond literal, e.g. "D[3,1,2,4; 3,4,1]"')
    src.add_argument("--cf", help='continued fraction literal, e.g. "[3; 3/1, 4/2, 1/4]"')
    src.add_argument("--graph", metavar="FILE", help="edge-list file")
    p.add_argument("--counts", action="store_true", help="also print p(G,k) for each k")
    p.set_defaults(func=cmd_z)

    p = sub.add_parser("convert", parents=[common], help="convert between CF, spec and graph forms")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--cf")
    src.add_argument("--spec")
    src.add_argument("--rational", metavar="P/Q", help="expanded as a simple continued fraction")
    p.add_argument("--to", choices=["cf", "spec", "dot", "edgelist"], required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("inverse", parents=[common], help="graphs whose index equals N")
    p.add_argument("N", type=_positive_int)
    p.add_argument("--mode", choices=["paper", "exhaustive"], default="paper")
    p.add_argument("--max-spine", type=_positive_int, default=None)
    p.add_argument("--dot", metavar="DIR", help="write one DOT file per class")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("seq", parents=[common], help="terms of a two-term recurrence")
    p.add_argument("family", help="fibonacci, lucas, pell, pell-lucas, jacobsthal or custom(a,b,u0,u1)")
    p.add_argument("count", type=_positive_int)
    p.add_argument("--graph", action="store_true", help="show a spec realising each term")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", parents=[common], help="cross-check z_fast against the graph engine")
    p.add_argument("--max-n", type=_positive_int, default=4)
    p.add_argument("--max-entry", type=_positive_int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", type=int, default=0, metavar="R",
                   help="also check the deletion relations on R random multigraphs")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, UsageError, HosoyaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
