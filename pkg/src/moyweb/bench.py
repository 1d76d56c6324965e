"""Naive enumeration versus the slice transfer matrix on generated diagrams."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .evaluator import evaluate
from .generators import ladder, random_corpus


@dataclass(frozen=True)
class BenchConfig:
    widths: tuple[int, ...] = (2, 3)
    max_height: int = 12
    height_step: int = 2
    N: int = 2
    repeat: int = 3
    random_webs: int = 5
    seed: int = 0


@dataclass
class BenchRow:
    diagram: str
    slices: int
    naive_s: float
    dp_s: float
    agree: bool

    def to_json(self) -> dict:
        return {"diagram": self.diagram, "slices": self.slices, "naive_s": round(self.naive_s, 6),
                "dp_s": round(self.dp_s, 6), "agree": self.agree}


def best_time(w, engine: str, repeat: int = 3):
    best, value = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        value = evaluate(w, engine).value
        best = min(best, time.perf_counter() - t)
    return best, value


def _row(name, w, repeat) -> BenchRow:
    tn, vn = best_time(w, "naive", repeat)
    td, vd = best_time(w, "dp", repeat)
    return BenchRow(name, len(w.slices), tn, td, vn == vd)


def run_bench(cfg: BenchConfig) -> list[BenchRow]:
    rows = []
    for width in cfg.widths:
        for height in range(cfg.height_step, cfg.max_height + 1, cfg.height_step):
            rows.append(_row(f"ladder {width}x{height}", ladder(width, height, cfg.N), cfg.repeat))
    rng = random.Random(cfg.seed)
    for i, w in enumerate(random_corpus(rng.randrange(2 ** 31), cfg.random_webs)):
        rows.append(_row(f"random {i}", w, cfg.repeat))
    return rows


def format_table(rows: list[BenchRow]) -> str:
    lines = [f"{'diagram':<16}{'slices':>7}{'naive (s)':>12}{'dp (s)':>12}{'speedup':>9}  agree"]
    for r in rows:
        speedup = r.naive_s / r.dp_s if r.dp_s else float("inf")
        lines.append(f"{r.diagram:<16}{r.slices:>7}{r.naive_s:>12.6f}{r.dp_s:>12.6f}{speedup:>8.1f}x  {r.agree}")
    return "\n".join(lines)
