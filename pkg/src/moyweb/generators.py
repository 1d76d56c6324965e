"""Generated diagrams: seeded random closed MOY webs and ladders for benchmarks."""
from __future__ import annotations

import random
from dataclasses import replace
from typing import Optional

from .web_diagram import (DOWN, LEFTWARD, RIGHTWARD, UP, Slice, Strand, WebDiagram, cap, check,
                          closure, cup, is_moy, merge, split, up)


def _merge_result(a: Strand, b: Strand) -> Optional[Strand]:
    """Third leg of an exact merge vertex with bottom legs ``a, b``, if any."""
    # flow in from below: up legs bring +label, down legs take -label
    net = (a.label if a.dir == UP else -a.label) + (b.label if b.dir == UP else -b.label)
    if net > 0:
        return Strand(net, UP)
    if net < 0:
        return Strand(-net, DOWN)
    return None


def _local_moy(g: Slice, N: int) -> bool:
    return is_moy(WebDiagram(N, g.bottom, (replace(g, pos=0),)))


def _random_split(rng: random.Random, a: Strand, N: int) -> Optional[tuple[Strand, Strand]]:
    """Two top legs for a single bottom leg ``a`` forming an exact MOY vertex."""
    net = a.label if a.dir == UP else -a.label
    options = []
    for x in range(0, N + 1):
        for dx in (UP, DOWN):
            fx = x if dx == UP else -x
            rest = net - fx
            y, dy = (rest, UP) if rest >= 0 else (-rest, DOWN)
            if y > N:
                continue
            pair = (Strand(x, dx), Strand(y, dy))
            if _local_moy(split(0, a, *pair), N):
                options.append(pair)
    return rng.choice(options) if options else None


def random_closed_web(rng: random.Random, N: int, max_slices: int = 6,
                      max_tries: int = 100_000, min_vertices: int = 0,
                      vertex_weight: int = 3) -> WebDiagram:
    """A closed MOY web with at most ``max_slices`` slices, labels in ``[1, N]``.

    Slices are drawn among the moves that keep the word closable in the
    remaining budget (vertex moves weighted by ``vertex_weight``); diagrams
    that do not close or have fewer than ``min_vertices`` vertices are rejected.
    """
    for _ in range(max_tries):
        budget = rng.randint(2, max_slices)
        word: list[Strand] = []
        slices: list[Slice] = []
        for step in range(budget):
            left = budget - step - 1          # slices remaining after this one
            moves = []
            if len(word) + 2 <= 2 * left:
                for p in range(len(word) + 1):
                    moves.append(("cup", p))
            for p in range(len(word) - 1):
                a, b = word[p], word[p + 1]
                if a.label == b.label and a.dir != b.dir and len(word) - 2 <= 2 * left:
                    moves.append(("cap", p))
                if len(word) - 1 <= 2 * left + 1:
                    moves += [("merge", p)] * vertex_weight
            if len(word) + 1 <= 2 * left:
                for p in range(len(word)):
                    moves += [("split", p)] * vertex_weight
            if not moves:
                break
            kind, p = rng.choice(moves)
            if kind == "cup":
                g = cup(p, rng.randint(1, N), rng.choice((RIGHTWARD, LEFTWARD)))
            elif kind == "cap":
                a = word[p]
                g = cap(p, a.label, RIGHTWARD if a.dir == UP else LEFTWARD)
            elif kind == "merge":
                c = _merge_result(word[p], word[p + 1])
                if c is None or c.label > N:
                    continue
                g = merge(p, word[p], word[p + 1], c)
                if not _local_moy(g, N):
                    continue
            else:
                legs = _random_split(rng, word[p], N)
                if legs is None or 0 in (legs[0].label, legs[1].label):
                    continue
                g = split(p, word[p], *legs)
            slices.append(g)
            word[g.pos:g.pos + len(g.bottom)] = g.top
        if word or not slices:
            continue
        w = WebDiagram(N, (), tuple(slices))
        if sum(s.is_vertex for s in w.slices) < min_vertices:
            continue
        if is_moy(w):
            return check(w)
    raise RuntimeError("no closed web found; increase max_slices or max_tries")


def random_corpus(seed: int, count: int, N_values=(2, 3, 4), max_slices: int = 6,
                  min_vertices: int = 2) -> list[WebDiagram]:
    """``count`` random closed webs from one seed (reproducible)."""
    rng = random.Random(seed)
    return [random_closed_web(rng, rng.choice(N_values), max_slices, min_vertices=min_vertices)
            for _ in range(count)]


def ladder(width: int, height: int, N: int = 2, label: int = 1) -> WebDiagram:
    """Closure of ``width`` upward uprights joined by ``height`` levels of unit rungs.

    Even levels pass one unit of flow rightward along every rung, odd levels
    pass it back; uprights therefore stay between ``label - 1`` and ``label + 1``.
    """
    if width < 2:
        raise ValueError("a ladder needs at least two uprights")
    if label + 1 > N or label < 1:
        raise ValueError(f"uprights of label {label} need 1 <= label and label + 1 <= N")
    labels = [label] * width
    slices = []
    for level in range(height):
        pairs = range(width - 1) if level % 2 == 0 else reversed(range(width - 1))
        for i in pairs:
            a, b = labels[i], labels[i + 1]
            if level % 2 == 0:
                if a < 1 or b + 1 > N:
                    continue
                slices.append(split(i, up(a), up(a - 1), up(1)))
                slices.append(merge(i + 1, up(1), up(b), up(b + 1)))
                labels[i], labels[i + 1] = a - 1, b + 1
            else:
                if b < 1 or a + 1 > N:
                    continue
                slices.append(split(i + 1, up(b), up(1), up(b - 1)))
                slices.append(merge(i, up(a), up(1), up(a + 1)))
                labels[i], labels[i + 1] = a + 1, b - 1
    # return to the starting labels so the diagram closes
    for i in range(width - 1):
        while labels[i] != label:
            a, b = labels[i], labels[i + 1]
            if a > label:
                slices.append(split(i, up(a), up(a - 1), up(1)))
                slices.append(merge(i + 1, up(1), up(b), up(b + 1)))
                labels[i], labels[i + 1] = a - 1, b + 1
            else:
                slices.append(split(i + 1, up(b), up(1), up(b - 1)))
                slices.append(merge(i, up(a), up(1), up(a + 1)))
                labels[i], labels[i + 1] = a + 1, b - 1
    body = WebDiagram(N, tuple(up(label) for _ in range(width)), tuple(slices))
    return check(closure(body))
