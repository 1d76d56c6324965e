"""Command line: ``python3 -m moyweb <subcommand> ...``.

Exit status is 1 for unreadable or invalid diagrams and 2 when a
verification finds a mismatch.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import standard_webs
from .coloring import colors_of, colorings_with_degree
from .evaluator import evaluate, relation_grid, verify_relation
from .bench import BenchConfig, format_table, run_bench
from .reduction import verify_reduction
from .web_diagram import WebDiagram, WebSyntaxError, WebValidityError, is_moy, parse, serialize, writhe

EXIT_INPUT, EXIT_VERIFY = 1, 2


class InputError(Exception):
    pass


def load(source: str, N=None) -> WebDiagram:
    """Read a diagram from a path, ``-`` for stdin, or inline text."""
    if source == "-":
        text = sys.stdin.read()
    elif os.path.exists(source):
        with open(source) as f:
            text = f.read()
    elif source.lstrip().startswith("web"):
        text = source.replace(";", "\n")
    else:
        raise InputError(f"{source}: no such file")
    try:
        w = parse(text)
    except (WebSyntaxError, WebValidityError) as exc:
        raise InputError(f"{source}: {exc}") from None
    return w.with_rank(N) if N is not None else w


def _degree_json(d: Fraction):
    return d.numerator if d.denominator == 1 else str(d)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def cmd_eval(args) -> int:
    for src in args.inputs:
        w = load(src, args.n)
        if not w.is_closed:
            raise InputError(f"{src}: eval needs a closed diagram")
        ev = evaluate(w, args.engine)
        if args.json:
            print(_dump({"web": serialize(w), "N": w.N, "value": str(ev.value),
                         "count": ev.coloring_count}))
        else:
            print(f"{src}: N={w.N} value {ev.value}  ({ev.coloring_count} colorings)")
    return 0


def cmd_colorings(args) -> int:
    w = load(args.inputs[0], args.n)
    for c, d in colorings_with_degree(w):
        edges = {str(e): colors_of(m) for e, m in sorted(c.items())}
        if args.json:
            print(_dump({"edges": edges, "degree": _degree_json(d)}))
        else:
            body = " ".join(f"{e}:{{{','.join(map(str, cs))}}}" for e, cs in edges.items())
            print(f"{body}  degree {d}")
    return 0


def cmd_writhe(args) -> int:
    for src in args.inputs:
        w = load(src, args.n)
        try:
            value = writhe(w)
        except ValueError as exc:
            raise InputError(f"{src}: {exc}") from None
        print(_dump({"web": serialize(w), "writhe": value}) if args.json else value)
    return 0


def _verify_one(job):
    rel, params, N, engine = job
    return verify_relation(rel, params, N, engine)


def cmd_verify(args) -> int:
    failed = 0
    if args.relation is None and not args.inputs:
        raise InputError("verify needs --relation or diagram files")
    if args.relation is not None:
        try:
            rels = (list(dict.fromkeys(standard_webs.ALIASES.values())) if args.relation == "all"
                    else [standard_webs.relation_id(args.relation)])
        except ValueError as exc:
            raise InputError(str(exc)) from None
        max_N = args.max_N if args.max_N is not None else 4
        jobs = [(rel, params, N, args.engine) for rel in rels for params, N in relation_grid(rel, max_N)]
        if args.threads > 1:
            with ProcessPoolExecutor(args.threads) as pool:
                reports = list(pool.map(_verify_one, jobs, chunksize=4))
        else:
            reports = map(_verify_one, jobs)
        for rep in reports:
            if args.json:
                print(_dump(rep.to_json()))
            elif not rep.ok:
                print(f"FAIL {rep.relation} {rep.params} N={rep.N}: "
                      f"{len(rep.failures)} of {rep.checked} boundary colorings differ")
            failed += not rep.ok
        if not args.json:
            print(f"{len(jobs)} instances, {failed} failed")
    for src in args.inputs:
        w = load(src)
        ranks = [args.n] if args.n is not None else range(2, (args.max_N or 4) + 1)
        for N in ranks:
            v = w.with_rank(N)
            if not (v.is_closed and is_moy(v)) or max(v.labels, default=0) > N:
                continue
            rep = verify_reduction(v, engine=args.engine)
            failed += not rep.ok
            if args.json:
                print(_dump({"web": serialize(v), "N": N, "ok": rep.ok, "lhs": str(rep.lhs),
                             "rhs_minus": str(rep.rhs_minus), "rhs_plus": str(rep.rhs_plus)}))
            else:
                print(f"{'ok  ' if rep.ok else 'FAIL'} {src} N={N}: {rep.lhs}")
    return EXIT_VERIFY if failed else 0


def cmd_reduce(args) -> int:
    w = load(args.inputs[0], args.n)
    try:
        rep = verify_reduction(w, engine=args.engine)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        print(_dump({
            "web": serialize(w), "N": rep.N, "lhs": str(rep.lhs),
            "rhs_minus": str(rep.rhs_minus), "rhs_plus": str(rep.rhs_plus), "ok": rep.ok,
            "terms": [{"cycles": sorted(t.cycles), "web": serialize(t.diagram), "writhe": t.writhe,
                       "value": str(t.value)} for t in rep.terms],
        }))
    else:
        for t in rep.terms:
            print(f"A = {sorted(t.cycles)}  writhe {t.writhe}  <.>_{rep.N - 1} = {t.value}")
            print("    " + serialize(t.diagram).rstrip().replace("\n", "\n    "))
        print(f"<w>_{rep.N}            = {rep.lhs}")
        print(f"sum q^-writhe <.>  = {rep.rhs_minus}")
        print(f"sum q^+writhe <.>  = {rep.rhs_plus}")
    return 0 if rep.ok else EXIT_VERIFY


def cmd_bench(args) -> int:
    cfg = BenchConfig(N=args.n or 2, max_height=args.max_N or 12, seed=args.seed)
    rows = run_bench(cfg)
    if args.json:
        for r in rows:
            print(_dump(r.to_json()))
    else:
        print(format_table(rows))
    return 0 if all(r.agree for r in rows) else EXIT_VERIFY


COMMANDS = {
    "eval": cmd_eval,
    "colorings": cmd_colorings,
    "writhe": cmd_writhe,
    "verify": cmd_verify,
    "reduce": cmd_reduce,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="moyweb", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("inputs", nargs="*", help="diagram files, '-' for stdin, or inline 'web N=...; ...' text")
    p.add_argument("--n", type=int, help="override the rank N of the input diagrams")
    p.add_argument("--engine", choices=("naive", "dp"), default="dp")
    p.add_argument("--relation", help="relation id 1-7 or name, or 'all'")
    p.add_argument("--max-N", dest="max_N", type=int, help="largest rank in a verification grid "
                   "(bench: largest ladder height)")
    p.add_argument("--json", action="store_true", help="one JSON object per line")
    p.add_argument("--threads", type=int, default=1, help="worker processes for verify")
    p.add_argument("--seed", type=int, default=0, help="seed for generated diagrams")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_intermixed_args(argv)
    if args.command in ("eval", "colorings", "writhe", "reduce") and not args.inputs:
        print(f"moyweb {args.command}: no input diagram", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"moyweb {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
