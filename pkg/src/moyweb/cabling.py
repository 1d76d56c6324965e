"""Explicit cabling of a MOY diagram into unit circles.

An independent route to the writhe: every edge labelled ``i`` becomes ``i``
parallel unit strands, joined at cups, caps and vertices by nested
(non-crossing) matchings.  Each resulting circle is oriented by looking at its
lowest local minimum, and the writhe is the number of counterclockwise circles
minus the number of clockwise ones.
"""
from __future__ import annotations

from dataclasses import dataclass

from .web_diagram import DOWN, UP, WebDiagram, is_moy


@dataclass
class Circle:
    minima: int         # number of local minima
    lowest: tuple       # (slice index, -span) of its lowest minimum
    counterclockwise: bool


class _Components:
    def __init__(self):
        self.parent: list[int] = []
        self.mins: list[list] = []

    def new(self) -> int:
        self.parent.append(len(self.parent))
        self.mins.append([])
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> int:
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[b] = a
            self.mins[a].extend(self.mins[b])
            self.mins[b] = []
        return a


def _units(legs):
    """Unit strands of a list of legs, left to right: ``(leg index, dir)``."""
    return [(k, leg.dir) for k, leg in enumerate(legs) for _ in range(leg.label)]


def _vertex_matching(s):
    """Pairs of unit ends at a MOY vertex, as ``(("b"|"t", unit index), ...)``."""
    bottom, top = _units(s.bottom), _units(s.top)
    # counterclockwise around the vertex: bottom left to right, then top right to left
    ring = [("b", i, bottom[i][0]) for i in range(len(bottom))]
    ring += [("t", i, top[i][0]) for i in reversed(range(len(top)))]

    def incoming(side, leg):
        return (leg.dir == UP) if side == "b" else (leg.dir == DOWN)

    legs = [("b", k, leg) for k, leg in enumerate(s.bottom)] + [("t", k, leg) for k, leg in enumerate(s.top)]
    ins = [x for x in legs if incoming(x[0], x[2])]
    outs = [x for x in legs if not incoming(x[0], x[2])]
    big = ins[0] if len(ins) == 1 else outs[0]
    is_big = [r[0] == big[0] and r[2] == big[1] for r in ring]
    n = len(ring)
    if not any(is_big):
        return []
    # rotate so the big leg's block comes first
    start = next(i for i in range(n) if is_big[i] and not is_big[i - 1]) if not all(is_big) else 0
    ring = ring[start:] + ring[:start]
    width = big[2].label
    B, S = ring[:width], ring[width:]
    assert len(S) == width
    return [((B[i][0], B[i][1]), (S[width - 1 - i][0], S[width - 1 - i][1])) for i in range(width)]


def cable(w: WebDiagram) -> list[Circle]:
    """The unit circles of the cabled diagram."""
    if not w.is_closed:
        raise ValueError("cabling is defined for closed diagrams")
    if not is_moy(w):
        raise ValueError("cabling is defined for MOY graphs")
    comps = _Components()
    word: list[tuple[int, str]] = []   # (component, dir) per unit strand
    for t, s in enumerate(w.slices):
        # unit offset of the slice position in the current word
        offset = sum(st.label for st in w.words[t][:s.pos])
        nb = sum(leg.label for leg in s.bottom)
        below = word[offset:offset + nb]
        top_units = _units(s.top)
        above: list = [None] * len(top_units)
        if s.kind == "cup":
            n = len(top_units)
            for i in range(n // 2):
                j = n - 1 - i
                c = comps.new()
                rightward = top_units[i][1] == DOWN
                comps.mins[c].append(((t, -(j - i)), rightward))
                above[i] = above[j] = c
        elif s.kind == "cap":
            n = len(below)
            for i in range(n // 2):
                j = n - 1 - i
                assert below[i][1] != below[j][1], "cap joins two strands of the same direction"
                comps.union(below[i][0], below[j][0])
        else:
            for a, b in _vertex_matching(s):
                (sa, ia), (sb, ib) = sorted([a, b])
                if sa == "b" and sb == "b":
                    assert below[ia][1] != below[ib][1]
                    comps.union(below[ia][0], below[ib][0])
                elif sa == "t" and sb == "t":
                    i, j = sorted([ia, ib])
                    assert top_units[i][1] != top_units[j][1]
                    c = comps.new()
                    comps.mins[c].append(((t, -(j - i)), top_units[i][1] == DOWN))
                    above[i] = above[j] = c
                else:
                    assert below[ia][1] == top_units[ib][1], "unit strand changes direction"
                    above[ib] = below[ia][0]
        new = [(c, d) for c, (_, d) in zip(above, top_units)]
        word = word[:offset] + new + word[offset + nb:]
    assert not word
    roots = {comps.find(x) for x in range(len(comps.parent))}
    circles = []
    for r in sorted(roots):
        lowest, ccw = min(comps.mins[r])
        circles.append(Circle(len(comps.mins[r]), lowest, ccw))
    return circles


def cabled_writhe(w: WebDiagram) -> int:
    return sum(1 if c.counterclockwise else -1 for c in cable(w))
