"""Regenerate the .web corpus used by the acceptance suite.

    python3 scripts/make_corpus.py [--out corpus] [--seed 2024]
"""
import argparse
import shutil
from pathlib import Path

from moyweb import standard_webs as sw
from moyweb.generators import ladder, random_corpus
from moyweb.web_diagram import closure, serialize


def write(root: Path, rel: str, w, note: str = ""):
    path = root / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    head = f"# {note}\n" if note else ""
    path.write_text(head + serialize(w))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "corpus"))
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    root = Path(args.out)
    if root.exists():
        shutil.rmtree(root)

    write(root, "circle-1.web", sw.circle(1, 1), "counterclockwise 1-circle")
    write(root, "circle-3-cw.web", sw.circle(3, 3, counterclockwise=False), "clockwise 3-circle")
    for N in range(1, 7):
        for k in range(1, N + 1):
            write(root, f"circles/circle-{k}-N{N}.web", sw.circle(N, k), f"{k}-circle at N={N}")

    for N in range(2, 5):
        for m in range(1, N):
            for n in range(1, N - m + 1):
                write(root, f"thetas/theta-{m}-{n}-N{N}.web", sw.theta(N, m, n),
                      f"theta with sides {m}, {n}")

    for (i, j, k), N in [((1, 1, 1), 3), ((1, 2, 1), 4), ((2, 1, 1), 4), ((1, 1, 2), 4)]:
        write(root, f"assoc/tree-left-{i}{j}{k}.web", sw.tree_left(N, i, j, k))
        write(root, f"assoc/tree-right-{i}{j}{k}.web", sw.tree_right(N, i, j, k))

    N = 4
    instances = [
        ("digon", {"m": 1, "n": 2}), ("digon2", {"m": 1, "n": 2}),
        ("square1", {"m": 1}), ("square1", {"m": 2}),
        ("square2", {"m": 2, "n": 1, "l": 1}), ("square2", {"m": 3, "n": 1, "l": 1}),
        ("square3", {"m": 1, "n": 1, "k": 1, "l": 1}), ("square3", {"m": 1, "n": 1, "k": 2, "l": 1}),
        ("square3", {"m": 2, "n": 1, "k": 1, "l": 1}),
    ]
    for rel, params in instances:
        tag = rel + "-" + "".join(str(params[p]) for p in sw.PARAMS[rel])
        lhs, terms = sw.relation_terms(rel, params, N)
        write(root, f"relations/{tag}-lhs.web", lhs, f"{rel} {params}, left-hand side")
        for t, (coeff, d) in enumerate(terms):
            write(root, f"relations/{tag}-rhs{t}.web", d, f"{rel} {params}, coefficient {coeff}")
        if lhs.top == lhs.bottom:
            write(root, f"closed/{tag}-closure.web", closure(lhs), f"trace closure of {rel} {params}")

    for width, height, n, label in [(2, 2, 2, 1), (3, 2, 2, 1), (3, 3, 3, 1), (2, 3, 3, 2)]:
        write(root, f"closed/ladder-{width}x{height}-N{n}.web", ladder(width, height, n, label),
              f"ladder, uprights labelled {label}")

    for i, w in enumerate(random_corpus(args.seed, 50)):
        write(root, f"random/random-{i:02d}.web", w, f"random closed web, seed {args.seed} #{i}")

    print(f"wrote {sum(1 for _ in root.rglob('*.web'))} diagrams to {root}")


if __name__ == "__main__":
    main()
