"""Colorings of webs and their degrees.

A color set is an N-bit mask: color ``i`` (1-based) is bit ``i - 1``.  A
coloring maps edge ids to masks.

Two independent routes compute the degree of a coloring:

* :func:`coloring_degree` adds up slice-local turning weights (fast path);
* :func:`explicit_degree` builds every bicolor state as a set of oriented
  circles and arcs and reads off ``C+ - C- + (TR - TL - BR + BL)/2``.

Degrees are half-integers in general; internally they are carried doubled.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .ordered_partitions import partition_degree
from .web_diagram import DOWN, UP, Slice, WebDiagram, flip

Coloring = dict  # edge id -> mask
Boundary = tuple  # (bottom masks, top masks)


def colors_of(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def mask_of(colors) -> int:
    m = 0
    for c in colors:
        m |= 1 << (c - 1)
    return m


@lru_cache(maxsize=None)
def subsets(N: int, size: int) -> tuple[int, ...]:
    """Masks of all ``size``-subsets of ``[1, N]`` in increasing mask order."""
    if size < 0 or size > N:
        return ()
    return tuple(sorted(sum(1 << i for i in c) for c in combinations(range(N), size)))


def vertex_condition(in_masks: Sequence[int], out_masks: Sequence[int], N: int) -> bool:
    """Outgoing colors plus complements of incoming ones cover every color equally often."""
    full = (1 << N) - 1
    legs = list(out_masks) + [full & ~m for m in in_masks]
    counts = {sum(m >> i & 1 for m in legs) for i in range(N)}
    return len(counts) <= 1


def moy_vertex_condition(in_masks: Sequence[int], out_masks: Sequence[int]) -> bool:
    """The color of the thick leg is the disjoint union of the two thin ones."""
    if len(in_masks) == 2 and len(out_masks) == 1:
        thin, thick = in_masks, out_masks[0]
    elif len(in_masks) == 1 and len(out_masks) == 2:
        thin, thick = out_masks, in_masks[0]
    else:
        return False
    return thin[0] & thin[1] == 0 and thin[0] | thin[1] == thick


# local degrees ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _extremum_halves(sign: int, mask: int, N: int) -> int:
    full = (1 << N) - 1
    return sign * partition_degree(colors_of(full & ~mask), colors_of(mask))


def _turn_halves(survivors) -> int:
    """Doubled rotation at an event given the surviving legs ``(side, index, dir)``."""
    if not survivors:
        return 0
    if len(survivors) != 2:
        raise ValueError(f"state is not a 1-manifold at this event: {survivors}")
    (s1, k1, d1), (s2, k2, d2) = sorted(survivors, key=lambda x: (x[0], x[1]))
    if s1 != s2:
        return 0
    if s1 == "b":
        return -1 if d1 == UP else 1
    return 1 if d1 == DOWN else -1


@lru_cache(maxsize=None)
def _vertex_halves(bottom_dirs, top_dirs, bottom_masks, top_masks, N: int) -> int:
    total = 0
    for lo in range(N):
        for hi in range(lo + 1, N):
            b = (1 << lo) | (1 << hi)
            surv = []
            for side, dirs, masks in (("b", bottom_dirs, bottom_masks), ("t", top_dirs, top_masks)):
                for k, (d, m) in enumerate(zip(dirs, masks)):
                    x = m & b
                    if x and x != b:
                        surv.append((side, k, d if x >> hi & 1 else flip(d)))
            total += _turn_halves(surv)
    return total


def local_halves(g: Slice, bottom_masks: Sequence[int], top_masks: Sequence[int], N: int) -> int:
    if g.kind in ("cup", "cap"):
        return _extremum_halves(g.sign, (top_masks or bottom_masks)[0], N)
    return _vertex_halves(tuple(l.dir for l in g.bottom), tuple(l.dir for l in g.top),
                          tuple(bottom_masks), tuple(top_masks), N)


def local_degree(g: Slice, colors: Sequence[int], N: int) -> Fraction:
    """Degree contributed by one slice, summed over all bicolors.

    ``colors`` lists the masks of the bottom legs followed by the top legs.
    For a cup or cap colored ``S`` this is ``sign * d(complement(S), S) / 2``;
    a vertex contributes only where a state turns back through it.
    """
    nb = len(g.bottom)
    return Fraction(local_halves(g, colors[:nb], colors[nb:], N), 2)


# enumeration --------------------------------------------------------------------


def _slice_edges(w: WebDiagram):
    lay = w.layout
    se = lay.segment_edge
    return ([tuple(se[s] for s in b) for b in lay.slice_bottom],
            [tuple(se[s] for s in t) for t in lay.slice_top])


def _colorable(w: WebDiagram) -> bool:
    return all(0 <= e.label <= w.N for e in w.edges)


def _search(w: WebDiagram, bottom: Optional[Sequence[int]] = None,
            top: Optional[Sequence[int]] = None) -> Iterator[tuple[dict, int]]:
    """Depth-first enumeration of (coloring, doubled degree).

    Newly created edges branch over all color sets of their label; edges that
    already carry a color (e.g. re-entering after a cap) reuse it.  Vertex
    conditions are checked as soon as a vertex slice is reached.
    """
    if not _colorable(w):
        return
    N = w.N
    lay = w.layout
    labels = [e.label for e in w.edges]
    sb, st = _slice_edges(w)
    bottom_edges = [lay.segment_edge[s] for s in lay.bottom_segments]
    top_edges = [lay.segment_edge[s] for s in lay.top_segments]
    slices = w.slices
    n = len(slices)
    assign: dict[int, int] = {}

    def top_ok():
        return top is None or all(assign[e] == m for e, m in zip(top_edges, top))

    def assign_all(edges, k, then):
        # color the uncolored edges in ``edges[k:]`` then call ``then``
        if k == len(edges):
            yield from then()
            return
        e = edges[k]
        if e in assign:
            yield from assign_all(edges, k + 1, then)
            return
        for m in subsets(N, labels[e]):
            assign[e] = m
            yield from assign_all(edges, k + 1, then)
        del assign[e]

    def step(i, deg):
        if i == n:
            if top_ok():
                yield dict(assign), deg
            return
        g = slices[i]

        def after():
            bm = [assign[e] for e in sb[i]]
            tm = [assign[e] for e in st[i]]
            if g.is_vertex:
                ins = [m for leg, m in zip(g.bottom, bm) if leg.dir == UP]
                ins += [m for leg, m in zip(g.top, tm) if leg.dir == DOWN]
                outs = [m for leg, m in zip(g.bottom, bm) if leg.dir == DOWN]
                outs += [m for leg, m in zip(g.top, tm) if leg.dir == UP]
                if not vertex_condition(ins, outs, N):
                    return
            yield from step(i + 1, deg + local_halves(g, bm, tm, N))

        yield from assign_all(list(st[i]), 0, after)

    if bottom is not None:
        if len(bottom) != len(bottom_edges):
            raise ValueError("boundary coloring has the wrong width")
        for e, m in zip(bottom_edges, bottom):
            if bin(m).count("1") != labels[e] or m >> N:
                raise ValueError(f"bottom color {colors_of(m)} does not fit label {labels[e]}")
            if assign.get(e, m) != m:
                return
            assign[e] = m
        yield from step(0, 0)
    else:
        yield from assign_all(bottom_edges, 0, lambda: step(0, 0))


def enumerate_colorings(w: WebDiagram) -> Iterator[Coloring]:
    for c, _ in _search(w):
        yield c


def colorings_with_degree(w: WebDiagram, bottom=None, top=None) -> Iterator[tuple[Coloring, Fraction]]:
    for c, h in _search(w, bottom, top):
        yield c, Fraction(h, 2)


def boundary_coloring(w: WebDiagram, c: Coloring) -> Boundary:
    lay = w.layout
    se = lay.segment_edge
    return (tuple(c[se[s]] for s in lay.bottom_segments),
            tuple(c[se[s]] for s in lay.top_segments))


def is_coloring(w: WebDiagram, c: Coloring, moy: bool = False) -> bool:
    """Check conditions (E) and (V); with ``moy=True`` use the partition form of (V)."""
    N = w.N
    for e in w.edges:
        m = c.get(e.id)
        if m is None or m >> N or bin(m).count("1") != e.label:
            return False
    for i in w.vertices():
        ins, outs = w.vertex_edges(i)
        im, om = [c[e] for e in ins], [c[e] for e in outs]
        ok = moy_vertex_condition(im, om) if moy else vertex_condition(im, om, N)
        if not ok:
            return False
    return True


def degree_halves(w: WebDiagram, c: Coloring) -> int:
    sb, st = _slice_edges(w)
    return sum(local_halves(g, [c[e] for e in sb[i]], [c[e] for e in st[i]], w.N)
               for i, g in enumerate(w.slices))


def coloring_degree(w: WebDiagram, c: Coloring) -> Fraction:
    """Degree of ``c`` as a sum of slice-local contributions."""
    return Fraction(degree_halves(w, c), 2)


# explicit states ----------------------------------------------------------------


@dataclass
class State:
    """Oriented circles and arcs left by one bicolor.

    ``direction`` gives the state orientation (``u``/``d``) of every surviving
    segment; components list segment ids in traversal order.
    """
    web: WebDiagram
    bicolor: tuple[int, int]
    direction: dict[int, str]
    circles: list[list[int]]
    arcs: list[list[int]]

    @property
    def is_empty(self) -> bool:
        return not self.circles and not self.arcs


def _source_target(seg, d):
    # segments run from their lower event (start) to their upper one (end)
    if d == UP:
        return (seg.start, seg.start_port), (seg.end, seg.end_port)
    return (seg.end, seg.end_port), (seg.start, seg.start_port)


def state(w: WebDiagram, c: Coloring, b: tuple[int, int]) -> State:
    lo, hi = sorted(b)
    if not 1 <= lo < hi <= w.N:
        raise ValueError(f"bad bicolor {b}")
    bmask = (1 << (lo - 1)) | (1 << (hi - 1))
    lay = w.layout
    direction = {}
    for seg in lay.segments:
        m = c[lay.segment_edge[seg.id]] & bmask
        if m and m != bmask:
            direction[seg.id] = seg.dir if m >> (hi - 1) & 1 else flip(seg.dir)

    leaving: dict[tuple, int] = {}
    entering: dict[tuple, int] = {}
    for sid, d in direction.items():
        (src, _), (dst, _) = _source_target(lay.segments[sid], d)
        if src in leaving or dst in entering:
            raise ValueError(f"state of bicolor {b} is not a 1-manifold at {src if src in leaving else dst}")
        leaving[src] = sid
        entering[dst] = sid
    for ev in set(leaving) | set(entering):
        if ev[0] == "slice" and (ev in leaving) != (ev in entering):
            raise ValueError(f"state of bicolor {b} is not balanced at {ev}")

    seen = set()
    arcs, circles = [], []
    for sid in sorted(direction):
        src = _source_target(lay.segments[sid], direction[sid])[0][0]
        if sid in seen or src[0] == "slice":
            continue
        path = []
        cur = sid
        while True:
            path.append(cur)
            seen.add(cur)
            dst = _source_target(lay.segments[cur], direction[cur])[1][0]
            if dst[0] != "slice":
                break
            cur = leaving[dst]
        arcs.append(path)
    for sid in sorted(direction):
        if sid in seen:
            continue
        path = []
        cur = sid
        while cur not in seen:
            path.append(cur)
            seen.add(cur)
            dst = _source_target(lay.segments[cur], direction[cur])[1][0]
            cur = leaving[dst]
        circles.append(path)
    return State(w, (lo, hi), direction, circles, arcs)


def _circle_sign(s: State, path: list[int]) -> int:
    """+1 for counterclockwise: the lowest point of a circle is traversed rightward."""
    segs = s.web.layout.segments
    best = None
    for a, b in zip(path, path[1:] + path[:1]):
        (_, _), (ev, port_in) = _source_target(segs[a], s.direction[a])
        (ev2, port_out), _ = _source_target(segs[b], s.direction[b])
        assert ev == ev2
        # a local minimum arrives from above and leaves upward, both through top ports
        if port_in[0] == "t" and port_out[0] == "t":
            key = ev[1]
            if best is None or key < best[0]:
                best = (key, port_in[1] < port_out[1])
    if best is None:
        raise ValueError("circle without a local minimum")
    return 1 if best[1] else -1


def state_degree(s: State) -> Fraction:
    """``C+ - C- + (TR - TL - BR + BL) / 2``."""
    segs = s.web.layout.segments
    twice = 0
    for path in s.circles:
        twice += 2 * _circle_sign(s, path)
    for path in s.arcs:
        (start, _), _ = _source_target(segs[path[0]], s.direction[path[0]])
        _, (end, _) = _source_target(segs[path[-1]], s.direction[path[-1]])
        if start[0] != end[0]:
            continue
        rightward = start[1] < end[1]
        if start[0] == "top":
            twice += 1 if rightward else -1
        else:
            twice += -1 if rightward else 1
    return Fraction(twice, 2)


def bicolors(N: int):
    return list(combinations(range(1, N + 1), 2))


def explicit_degree(w: WebDiagram, c: Coloring) -> Fraction:
    """Degree of ``c`` summed over explicitly constructed states."""
    return sum((state_degree(state(w, c, b)) for b in bicolors(w.N)), Fraction(0))
