"""Slice presentation of sl_N webs.

A diagram is a bottom boundary word of oriented labelled strands followed by a
list of elementary slices (cup, cap, merge, split), read bottom to top.  Each
slice acts on a contiguous run of the current word starting at ``pos``.

Conventions
-----------
* ``u`` / ``d`` is the vertical direction of a strand where it crosses a slice
  line.
* A rightward cup inserts ``(d, u)`` and a leftward cup ``(u, d)``.  A cap is
  rightward when it consumes ``(u, d)`` and leftward for ``(d, u)``, i.e. the
  turn always names the direction of travel at the extremum.
* Counterclockwise is positive: rightward cups and leftward caps weigh +1/2
  per unit of label, the other two -1/2.
* At a vertex, bottom legs pointing up and top legs pointing down are incoming.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable, Optional, Sequence

UP, DOWN = "u", "d"
RIGHTWARD, LEFTWARD = "rightward", "leftward"
KINDS = ("cup", "cap", "merge", "split")


class WebSyntaxError(ValueError):
    def __init__(self, msg: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line, self.col = line, col


class WebValidityError(ValueError):
    pass


def flip(d: str) -> str:
    return DOWN if d == UP else UP


@dataclass(frozen=True)
class Strand:
    label: int
    dir: str

    def __post_init__(self):
        if self.dir not in (UP, DOWN):
            raise ValueError(f"bad direction {self.dir!r}")

    def __str__(self):
        return f"{self.dir}{self.label}"

    def reversed(self, N: int) -> "Strand":
        return Strand(N - self.label, flip(self.dir))


def up(label: int) -> Strand:
    return Strand(label, UP)


def down(label: int) -> Strand:
    return Strand(label, DOWN)


@dataclass(frozen=True)
class Slice:
    """One elementary generator.

    ``bottom`` are the consumed strands, ``top`` the produced ones, both left to
    right.  ``turn`` is set for cups and caps only.
    """
    kind: str
    pos: int
    bottom: tuple[Strand, ...]
    top: tuple[Strand, ...]
    turn: Optional[str] = None

    @property
    def is_vertex(self) -> bool:
        return self.kind in ("merge", "split")

    @property
    def label(self) -> int:
        """Label of a cup or cap."""
        return (self.top or self.bottom)[0].label

    @property
    def sign(self) -> int:
        """+1 for counterclockwise extrema (rightward cup, leftward cap)."""
        if self.kind == "cup":
            return 1 if self.turn == RIGHTWARD else -1
        if self.kind == "cap":
            return 1 if self.turn == LEFTWARD else -1
        return 0


def cup(pos: int, label: int, turn: str = RIGHTWARD) -> Slice:
    legs = (down(label), up(label)) if turn == RIGHTWARD else (up(label), down(label))
    return Slice("cup", pos, (), legs, turn)


def cap(pos: int, label: int, turn: str = LEFTWARD) -> Slice:
    legs = (up(label), down(label)) if turn == RIGHTWARD else (down(label), up(label))
    return Slice("cap", pos, legs, (), turn)


def merge(pos: int, a: Strand, b: Strand, c: Strand) -> Slice:
    return Slice("merge", pos, (a, b), (c,))


def split(pos: int, a: Strand, b: Strand, c: Strand) -> Slice:
    return Slice("split", pos, (a,), (b, c))


def flow_excess(s: Slice) -> int:
    """Sum of outgoing labels minus incoming labels at a vertex."""
    out = 0
    for leg in s.bottom:
        out += leg.label if leg.dir == DOWN else -leg.label
    for leg in s.top:
        out += leg.label if leg.dir == UP else -leg.label
    return out


# derived geometry ---------------------------------------------------------------

@dataclass(frozen=True)
class Segment:
    """A strand piece between two events.

    Events are ``("bottom", i)``, ``("top", i)`` or ``("slice", s)``; ports are
    the leg indices at those events (for slices: ``("b", k)`` or ``("t", k)``).
    """
    id: int
    label: int
    dir: str
    start: tuple
    start_port: tuple
    end: tuple = None
    end_port: tuple = None


@dataclass
class Edge:
    id: int
    label: int
    segments: list[int]
    tail: Optional[tuple] = None
    head: Optional[tuple] = None

    @property
    def is_loop(self) -> bool:
        return self.tail is None and self.head is None


@dataclass
class Layout:
    words: list[list[int]]               # segment ids of the word below each slice, plus the top word
    segments: list[Segment]
    segment_edge: list[int]
    edges: list[Edge]
    slice_bottom: list[tuple[int, ...]]  # consumed segment ids per slice
    slice_top: list[tuple[int, ...]]     # produced segment ids per slice
    bottom_segments: tuple[int, ...]
    top_segments: tuple[int, ...]


class _UnionFind:
    def __init__(self):
        self.parent: list[int] = []

    def add(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class WebDiagram:
    N: int
    bottom: tuple[Strand, ...] = ()
    slices: tuple[Slice, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "bottom", tuple(self.bottom))
        object.__setattr__(self, "slices", tuple(self.slices))

    @cached_property
    def words(self) -> list[tuple[Strand, ...]]:
        """Running word below each slice, followed by the top word.

        Raises :class:`WebValidityError` when a slice does not compose.
        """
        word = list(self.bottom)
        out = [tuple(word)]
        for i, s in enumerate(self.slices):
            n = len(s.bottom)
            if s.pos < 0 or s.pos + n > len(word):
                raise WebValidityError(f"slice {i} ({s.kind} at {s.pos}): position out of range "
                                       f"for word of width {len(word)}")
            got = tuple(word[s.pos:s.pos + n])
            if got != s.bottom:
                raise WebValidityError(
                    f"slice {i} ({s.kind} at {s.pos}): expects {' '.join(map(str, s.bottom))}, "
                    f"word has {' '.join(map(str, got))}")
            word[s.pos:s.pos + n] = s.top
            out.append(tuple(word))
        return out

    @property
    def top(self) -> tuple[Strand, ...]:
        return self.words[-1]

    @property
    def is_closed(self) -> bool:
        return not self.bottom and not self.top

    @property
    def labels(self) -> set[int]:
        return {e.label for e in self.edges}

    @cached_property
    def layout(self) -> Layout:
        self.words  # composability check
        uf = _UnionFind()
        segments: list[Segment] = []
        ends: dict[int, tuple] = {}

        def new(strand: Strand, event, port) -> int:
            sid = uf.add()
            segments.append(Segment(sid, strand.label, strand.dir, event, port))
            return sid

        word = [new(st, ("bottom", i), ("t", 0)) for i, st in enumerate(self.bottom)]
        bottom_segments = tuple(word)
        words = [list(word)]
        slice_bottom, slice_top = [], []
        for i, s in enumerate(self.slices):
            consumed = tuple(word[s.pos:s.pos + len(s.bottom)])
            for k, sid in enumerate(consumed):
                ends[sid] = (("slice", i), ("b", k))
            produced = tuple(new(st, ("slice", i), ("t", k)) for k, st in enumerate(s.top))
            if s.kind == "cup":
                uf.union(*produced)
            elif s.kind == "cap":
                uf.union(*consumed)
            word[s.pos:s.pos + len(consumed)] = produced
            slice_bottom.append(consumed)
            slice_top.append(produced)
            words.append(list(word))
        for i, sid in enumerate(word):
            ends[sid] = (("top", i), ("b", 0))
        segments = [replace(seg, end=ends[seg.id][0], end_port=ends[seg.id][1]) for seg in segments]

        # canonical edge ids in order of first segment creation
        root_to_edge: dict[int, int] = {}
        segment_edge = []
        for seg in segments:
            r = uf.find(seg.id)
            if r not in root_to_edge:
                root_to_edge[r] = len(root_to_edge)
            segment_edge.append(root_to_edge[r])
        edges = [Edge(i, 0, []) for i in range(len(root_to_edge))]
        for seg in segments:
            e = edges[segment_edge[seg.id]]
            e.segments.append(seg.id)
            e.label = seg.label

        def is_extremum(event) -> bool:
            return event[0] == "slice" and not self.slices[event[1]].is_vertex

        for e in edges:
            for sid in e.segments:
                seg = segments[sid]
                if not is_extremum(seg.start):
                    # flow leaves the start event when the segment points up
                    if seg.dir == UP:
                        e.tail = seg.start
                    else:
                        e.head = seg.start
                if not is_extremum(seg.end):
                    if seg.dir == UP:
                        e.head = seg.end
                    else:
                        e.tail = seg.end
        return Layout(words, segments, segment_edge, edges, slice_bottom, slice_top,
                      bottom_segments, tuple(word))

    @property
    def edges(self) -> list[Edge]:
        return self.layout.edges

    def vertices(self) -> list[int]:
        return [i for i, s in enumerate(self.slices) if s.is_vertex]

    def vertex_edges(self, i: int) -> tuple[list[int], list[int]]:
        """(incoming, outgoing) edge ids at vertex slice ``i``."""
        lay = self.layout
        s = self.slices[i]
        ins, outs = [], []
        for leg, sid in zip(s.bottom, lay.slice_bottom[i]):
            (ins if leg.dir == UP else outs).append(lay.segment_edge[sid])
        for leg, sid in zip(s.top, lay.slice_top[i]):
            (outs if leg.dir == UP else ins).append(lay.segment_edge[sid])
        return ins, outs

    def with_rank(self, N: int) -> "WebDiagram":
        return WebDiagram(N, self.bottom, self.slices)

    def __str__(self):
        return serialize(self)


# validity -----------------------------------------------------------------------


def validate(w: WebDiagram) -> list[str]:
    """All violations of composability and of the mod-N flow condition."""
    problems = []
    word = list(w.bottom)
    if w.N < 1:
        problems.append(f"rank N must be positive, got {w.N}")
    for i, s in enumerate(w.slices):
        n = len(s.bottom)
        tag = f"slice {i} ({s.kind} at {s.pos})"
        if s.pos < 0 or s.pos + n > len(word) or (s.kind == "cup" and s.pos > len(word)):
            problems.append(f"{tag}: position out of range for word of width {len(word)}")
            return problems
        got = tuple(word[s.pos:s.pos + n])
        if got != s.bottom:
            problems.append(f"{tag}: expects {' '.join(map(str, s.bottom))}, "
                            f"word has {' '.join(map(str, got)) or 'nothing'}")
            return problems
        if s.kind in ("cup", "cap"):
            legs = s.top or s.bottom
            if len(legs) != 2 or legs[0].label != legs[1].label or legs[0].dir == legs[1].dir:
                problems.append(f"{tag}: legs must carry equal labels and opposite directions")
            else:
                expected = cup(0, legs[0].label, s.turn) if s.kind == "cup" else cap(0, legs[0].label, s.turn)
                if (expected.top or expected.bottom) != legs:
                    problems.append(f"{tag}: turn {s.turn} does not match legs "
                                    f"{' '.join(map(str, legs))}")
        elif s.kind in ("merge", "split"):
            shape = (2, 1) if s.kind == "merge" else (1, 2)
            if (len(s.bottom), len(s.top)) != shape:
                problems.append(f"{tag}: wrong number of legs")
            elif flow_excess(s) % w.N:
                problems.append(f"{tag}: flow {flow_excess(s)} is not 0 mod {w.N}")
        else:
            problems.append(f"{tag}: unknown kind")
        word[s.pos:s.pos + n] = s.top
    return problems


def check(w: WebDiagram) -> WebDiagram:
    problems = validate(w)
    if problems:
        raise WebValidityError("; ".join(problems))
    return w


def is_moy(w: WebDiagram) -> bool:
    """Exact flow at every vertex and no negative label."""
    if any(e.label < 0 for e in w.edges):
        return False
    return all(flow_excess(s) == 0 for s in w.slices if s.is_vertex)


# DSL --------------------------------------------------------------------------

_LEG = re.compile(r"^([ud])(-?\d+)$")


def _parse_leg(tok: str, line: int, col: int) -> Strand:
    m = _LEG.match(tok.strip())
    if not m:
        raise WebSyntaxError(f"bad strand {tok.strip()!r}, expected u<label> or d<label>", line, col)
    return Strand(int(m.group(2)), m.group(1))


def _parse_legs(text: str, line: int, col: int) -> tuple[Strand, ...]:
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise WebSyntaxError(f"expected parenthesised legs, got {t!r}", line, col)
    return tuple(_parse_leg(tok, line, col) for tok in t[1:-1].split(","))


def _int(tok: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise WebSyntaxError(f"expected an integer, got {tok!r}", line, col) from None


def parse(text: str) -> WebDiagram:
    N = None
    bottom: tuple[Strand, ...] = ()
    slices: list[Slice] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        head, _, rest = line.strip().partition(" ")
        rest = rest.strip()
        if N is None:
            m = re.fullmatch(r"web\s+N\s*=\s*(-?\d+)", line.strip())
            if not m:
                raise WebSyntaxError("first statement must be 'web N=<int>'", lineno, col)
            N = int(m.group(1))
            continue
        if head == "bottom":
            if slices:
                raise WebSyntaxError("'bottom' must precede all slices", lineno, col)
            body = rest.strip("[]").replace(",", " ")
            bottom = tuple(_parse_leg(t, lineno, col) for t in body.split())
        elif head == "cup":
            toks = rest.split()
            if len(toks) != 3 or toks[2] not in (RIGHTWARD, LEFTWARD):
                raise WebSyntaxError("expected 'cup <pos> <label> <rightward|leftward>'", lineno, col)
            slices.append(cup(_int(toks[0], lineno, col), _int(toks[1], lineno, col), toks[2]))
        elif head == "cap":
            toks = rest.split()
            if len(toks) != 2 or toks[1] not in (RIGHTWARD, LEFTWARD):
                raise WebSyntaxError("expected 'cap <pos> <rightward|leftward>'", lineno, col)
            slices.append(Slice("cap", _int(toks[0], lineno, col), None, (), toks[1]))
        elif head in ("merge", "split"):
            m = re.fullmatch(r"(-?\d+)\s*(\(.*?\))\s*->\s*(\(.*?\))", rest)
            if not m:
                raise WebSyntaxError(f"expected '{head} <pos> (legs) -> (legs)'", lineno, col)
            a, b = _parse_legs(m.group(2), lineno, col), _parse_legs(m.group(3), lineno, col)
            shape = (2, 1) if head == "merge" else (1, 2)
            if (len(a), len(b)) != shape:
                raise WebSyntaxError(f"{head} takes {shape[0]} leg(s) to {shape[1]}", lineno, col)
            slices.append(Slice(head, int(m.group(1)), a, b))
        else:
            raise WebSyntaxError(f"unknown statement {head!r}", lineno, col)
    if N is None:
        raise WebSyntaxError("empty diagram: missing 'web N=<int>'", 1)
    slices = _resolve_caps(N, bottom, slices)
    return check(WebDiagram(N, bottom, slices))


def _resolve_caps(N, bottom, slices):
    """Fill in the consumed legs of caps from the running word."""
    word = list(bottom)
    out = []
    for i, s in enumerate(slices):
        if s.kind == "cap" and s.bottom is None:
            if s.pos < 0 or s.pos + 2 > len(word):
                raise WebValidityError(f"slice {i} (cap at {s.pos}): position out of range "
                                       f"for word of width {len(word)}")
            a, b = word[s.pos], word[s.pos + 1]
            if a.label != b.label or a.dir == b.dir:
                raise WebValidityError(f"slice {i} (cap at {s.pos}): legs {a} {b} do not match")
            expected = cap(s.pos, a.label, s.turn)
            if expected.bottom != (a, b):
                raise WebValidityError(f"slice {i} (cap at {s.pos}): turn {s.turn} does not match "
                                       f"legs {a} {b}")
            s = expected
        n = len(s.bottom)
        if s.pos < 0 or s.pos + n > len(word) or (s.kind == "cup" and s.pos > len(word)):
            raise WebValidityError(f"slice {i} ({s.kind} at {s.pos}): position out of range")
        if tuple(word[s.pos:s.pos + n]) != s.bottom:
            raise WebValidityError(
                f"slice {i} ({s.kind} at {s.pos}): expects {' '.join(map(str, s.bottom))}, "
                f"word has {' '.join(map(str, word[s.pos:s.pos + n])) or 'nothing'}")
        word[s.pos:s.pos + n] = s.top
        out.append(s)
    return out


def serialize(w: WebDiagram) -> str:
    lines = [f"web N={w.N}"]
    if w.bottom:
        lines.append("bottom " + " ".join(map(str, w.bottom)))
    for s in w.slices:
        if s.kind == "cup":
            lines.append(f"cup {s.pos} {s.label} {s.turn}")
        elif s.kind == "cap":
            lines.append(f"cap {s.pos} {s.turn}")
        else:
            a = ",".join(map(str, s.bottom))
            b = ",".join(map(str, s.top))
            lines.append(f"{s.kind} {s.pos} ({a}) -> ({b})")
    return "\n".join(lines) + "\n"


def canonical(text: str) -> str:
    return serialize(parse(text))


# transformations ----------------------------------------------------------------


def _rebuild(w: WebDiagram, strand_map) -> WebDiagram:
    """Apply ``strand_map(segment_id, strand) -> strand`` to every leg."""
    lay = w.layout
    bottom = tuple(strand_map(sid, st) for sid, st in zip(lay.bottom_segments, w.bottom))
    slices = []
    for i, s in enumerate(w.slices):
        b = tuple(strand_map(sid, st) for sid, st in zip(lay.slice_bottom[i], s.bottom))
        t = tuple(strand_map(sid, st) for sid, st in zip(lay.slice_top[i], s.top))
        turn = s.turn
        if s.kind in ("cup", "cap"):
            legs = t or b
            if s.kind == "cup":
                turn = RIGHTWARD if legs[0].dir == DOWN else LEFTWARD
            else:
                turn = RIGHTWARD if legs[0].dir == UP else LEFTWARD
        slices.append(Slice(s.kind, s.pos, b, t, turn))
    return WebDiagram(w.N, bottom, slices)


def reverse_edges(w: WebDiagram, E: Iterable[int]) -> WebDiagram:
    """Reverse every edge in ``E`` and relabel it ``N - label``.

    Edge ids are preserved: the result has the same layout as ``w``.
    """
    E = set(E)
    unknown = E - {e.id for e in w.edges}
    if unknown:
        raise KeyError(f"unknown edge ids {sorted(unknown)}")
    if not E:
        return w
    seg_edge = w.layout.segment_edge
    return _rebuild(w, lambda sid, st: st.reversed(w.N) if seg_edge[sid] in E else st)


def disjoint_union(a: WebDiagram, b: WebDiagram) -> WebDiagram:
    """Closed diagrams placed one after the other (planar-isotopic to side by side)."""
    if a.N != b.N:
        raise ValueError(f"rank mismatch: {a.N} vs {b.N}")
    if not (a.is_closed and b.is_closed):
        raise ValueError("disjoint_union takes closed diagrams")
    return WebDiagram(a.N, (), a.slices + b.slices)


def stack(lower: WebDiagram, upper: WebDiagram) -> WebDiagram:
    """Compose open webs: ``upper`` sits on top of ``lower``."""
    if lower.N != upper.N:
        raise ValueError(f"rank mismatch: {lower.N} vs {upper.N}")
    if lower.top != upper.bottom:
        raise ValueError("top word of the lower web differs from the bottom word of the upper one")
    return WebDiagram(lower.N, lower.bottom, lower.slices + upper.slices)


def identity(N: int, word: Sequence[Strand]) -> WebDiagram:
    return WebDiagram(N, tuple(word), ())


def mirror(w: WebDiagram) -> WebDiagram:
    """Left-right reflection."""
    words = w.words
    slices = []
    for i, s in enumerate(w.slices):
        width = len(words[i])
        pos = width - s.pos - len(s.bottom)
        b, t = tuple(reversed(s.bottom)), tuple(reversed(s.top))
        turn = None
        if s.turn:
            turn = LEFTWARD if s.turn == RIGHTWARD else RIGHTWARD
        slices.append(Slice(s.kind, pos, b, t, turn))
    return WebDiagram(w.N, tuple(reversed(w.bottom)), slices)


def closure(w: WebDiagram) -> WebDiagram:
    """Trace closure of an open web whose top word equals its bottom word.

    The returning strands run up the right-hand side.
    """
    if w.top != w.bottom:
        raise ValueError("closure needs identical top and bottom words")
    n = len(w.bottom)
    slices = []
    for i, st in enumerate(w.bottom):
        slices.append(cup(i, st.label, LEFTWARD if st.dir == UP else RIGHTWARD))
    slices.extend(w.slices)
    for i in reversed(range(n)):
        st = w.bottom[i]
        slices.append(cap(i, st.label, RIGHTWARD if st.dir == UP else LEFTWARD))
    return WebDiagram(w.N, (), slices)


def remove_trivial_edges(w: WebDiagram) -> WebDiagram:
    """Delete the edges labelled ``0`` or ``N`` and dissolve the vertices they leave.

    A dissolved vertex joins its two surviving legs.  When they meet head to
    head or tail to tail, the edge on one side is first reversed to its
    ``N - label`` equivalent so the joined edge is consistently oriented.
    """
    trivial = {e.id for e in w.edges if e.label in (0, w.N)}
    if not trivial:
        return w
    w = _orient_for_removal(w, trivial)
    lay = w.layout
    seg_edge = lay.segment_edge
    keep = lambda sid: seg_edge[sid] not in trivial  # noqa: E731

    bottom = tuple(st for sid, st in zip(lay.bottom_segments, w.bottom) if keep(sid))
    slices = []
    for i, s in enumerate(w.slices):
        below = lay.words[i]
        pos = sum(1 for sid in below[:s.pos] if keep(sid))
        b = [(st, sid) for st, sid in zip(s.bottom, lay.slice_bottom[i]) if keep(sid)]
        t = [(st, sid) for st, sid in zip(s.top, lay.slice_top[i]) if keep(sid)]
        if s.kind in ("cup", "cap"):
            if b or t:
                slices.append(replace(s, pos=pos))
            continue
        if len(b) + len(t) == 3:
            slices.append(replace(s, pos=pos))
        elif len(b) + len(t) == 2:
            if len(b) == 2:
                slices.append(cap(pos, b[0][0].label, RIGHTWARD if b[0][0].dir == UP else LEFTWARD))
            elif len(t) == 2:
                slices.append(cup(pos, t[0][0].label, RIGHTWARD if t[0][0].dir == DOWN else LEFTWARD))
            elif b[0][0] != t[0][0]:
                raise WebValidityError(f"slice {i}: cannot join {b[0][0]} to {t[0][0]}")
        elif len(b) + len(t) == 1:
            raise WebValidityError(f"slice {i}: vertex left with a single leg of label "
                                   f"{(b or t)[0][0].label}")
    return check(WebDiagram(w.N, bottom, slices))


def _orient_for_removal(w: WebDiagram, trivial: set[int]) -> WebDiagram:
    """Reverse surviving edges so every dissolved vertex has one leg in, one out.

    Each dissolved vertex asks its two legs to have equal or opposite flip
    bits; the bits are assigned by a breadth-first search over these links.
    """
    links: dict[int, list[tuple[int, int]]] = {}
    for i in w.vertices():
        ins, outs = w.vertex_edges(i)
        ins = [e for e in ins if e not in trivial]
        outs = [e for e in outs if e not in trivial]
        if len(ins) + len(outs) != 2:
            continue
        a, b = ins + outs
        parity = 1 if len(ins) != 1 else 0
        if a == b:
            if parity:
                raise WebValidityError(f"slice {i}: edge {a} meets itself head to head")
            continue
        links.setdefault(a, []).append((b, parity))
        links.setdefault(b, []).append((a, parity))
    flip_bit: dict[int, int] = {}
    for root in sorted(links):
        if root in flip_bit:
            continue
        flip_bit[root] = 0
        queue = deque([root])
        while queue:
            e = queue.popleft()
            for f, parity in links[e]:
                want = flip_bit[e] ^ parity
                if f not in flip_bit:
                    flip_bit[f] = want
                    queue.append(f)
                elif flip_bit[f] != want:
                    raise WebValidityError("cannot orient the web consistently after removing 0/N edges")
    flipped = {e for e, bit in flip_bit.items() if bit}
    return reverse_edges(w, flipped) if flipped else w


# writhe -------------------------------------------------------------------------


def vertex_turning(s: Slice) -> int:
    """Doubled rotation of the cabled strands turning back at a MOY vertex.

    The big leg (alone on its in/out side) feeds both small legs; a small leg
    on the same side of the slice as the big one makes all of its strands turn.
    """
    legs = [("b", k, leg) for k, leg in enumerate(s.bottom)] + [("t", k, leg) for k, leg in enumerate(s.top)]

    def incoming(side, leg):
        return (leg.dir == UP) if side == "b" else (leg.dir == DOWN)

    ins = [x for x in legs if incoming(x[0], x[2])]
    outs = [x for x in legs if not incoming(x[0], x[2])]
    if len(ins) == 1:
        big, smalls = ins[0], outs
    elif len(outs) == 1:
        big, smalls = outs[0], ins
    else:
        return 0
    total = 0
    for small in smalls:
        if small[0] != big[0]:
            continue
        left, _ = sorted([big, small], key=lambda x: x[1])
        ldir = left[2].dir
        if big[0] == "b":
            total += (-1 if ldir == UP else 1) * small[2].label
        else:
            total += (1 if ldir == DOWN else -1) * small[2].label
    return total


def writhe(w: WebDiagram) -> int:
    """Algebraic number of circles in the cabling (counterclockwise positive)."""
    if not w.is_closed:
        raise ValueError("writhe is defined for closed diagrams")
    if not is_moy(w):
        raise ValueError("writhe is defined for MOY graphs")
    twice = 0
    for s in w.slices:
        if s.is_vertex:
            twice += vertex_turning(s)
        else:
            twice += s.sign * s.label
    assert twice % 2 == 0
    return twice // 2
