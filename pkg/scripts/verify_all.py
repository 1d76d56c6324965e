"""Run every relation grid and the rank-lowering expansion on the closed corpus.

    python3 scripts/verify_all.py [--max-N 4] [--engine dp]
"""
import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from moyweb.evaluator import relation_grid, verify_relation
from moyweb.reduction import degree_identity_violations, verify_reduction
from moyweb.standard_webs import PARAMS
from moyweb.web_diagram import is_moy, parse

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


@dataclass(frozen=True)
class VerifyConfig:
    max_N: int = 4
    circle_max_N: int = 6
    engine: str = "dp"
    corpus: Path = CORPUS


def verify_relations(cfg: VerifyConfig) -> int:
    failed = 0
    for rel in PARAMS:
        top = cfg.circle_max_N if rel == "circle" else cfg.max_N
        t = time.perf_counter()
        n = bad = 0
        for params, N in relation_grid(rel, top):
            rep = verify_relation(rel, params, N, cfg.engine)
            n += 1
            if not rep.ok:
                bad += 1
                print(f"  FAIL {rel} {params} N={N}")
        print(f"{rel:<8} N <= {top}: {n:4d} instances, {bad} failed ({time.perf_counter() - t:.2f} s)")
        failed += bad
    return failed


def verify_reductions(cfg: VerifyConfig) -> int:
    failed = n = 0
    t = time.perf_counter()
    for path in sorted(cfg.corpus.rglob("*.web")):
        w = parse(path.read_text())
        if not w.is_closed:
            continue
        for N in range(2, cfg.max_N + 1):
            v = w.with_rank(N)
            if max(v.labels, default=0) > N or not is_moy(v):
                continue
            n += 1
            ok = verify_reduction(v, engine=cfg.engine).ok and not degree_identity_violations(v)
            if not ok:
                failed += 1
                print(f"  FAIL {path.relative_to(cfg.corpus)} N={N}")
    print(f"reduction: {n} (web, N) pairs, {failed} failed ({time.perf_counter() - t:.2f} s)")
    return failed


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-N", type=int, default=4)
    ap.add_argument("--engine", choices=("naive", "dp"), default="dp")
    args = ap.parse_args()
    cfg = VerifyConfig(max_N=args.max_N, engine=args.engine)
    failed = verify_relations(cfg) + verify_reductions(cfg)
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
