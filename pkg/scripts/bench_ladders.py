"""Time naive enumeration against the transfer matrix on ladder diagrams.

    python3 scripts/bench_ladders.py [--max-height 14] [--N 2] [--csv out.csv]
"""
import argparse
import csv

from moyweb.bench import BenchConfig, format_table, run_bench


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-height", type=int, default=14)
    ap.add_argument("--N", type=int, default=2)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--csv", help="also write the rows to this file")
    args = ap.parse_args()
    cfg = BenchConfig(widths=(2, 3, 4), max_height=args.max_height, N=args.N,
                      repeat=args.repeat, seed=args.seed)
    rows = run_bench(cfg)
    print(format_table(rows))
    if args.csv:
        with open(args.csv, "w", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=list(rows[0].to_json()))
            writer.writeheader()
            for r in rows:
                writer.writerow(r.to_json())


if __name__ == "__main__":
    main()
