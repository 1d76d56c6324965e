"""Reversal of cycle collections and the rank-lowering expansion.

For a closed MOY graph ``G``:

    <G>_N = sum_A q^(-w(G^A)) <G^A>_(N-1) = sum_A q^(+w(G^A)) <G^A>_(N-1)

where ``A`` runs over collections of disjoint directed cycles and ``G^A``
reverses the edges of ``A`` relabelling ``i -> N - i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .coloring import colorings_with_degree, coloring_degree
from .evaluator import evaluate
from .laurent import LaurentPoly, ZERO
from .web_diagram import WebDiagram, is_moy, reverse_edges, writhe

CycleCollection = frozenset


def _incidence(w: WebDiagram):
    """Per edge: (tail vertex or None, head vertex or None)."""
    if not w.is_closed:
        raise ValueError("cycle collections are defined on closed webs")
    return [(e.tail[1] if e.tail else None, e.head[1] if e.head else None) for e in w.edges]


def is_cycle_collection(w: WebDiagram, A: Iterable[int]) -> bool:
    """Every vertex has in-degree equal to out-degree, and at most one, within ``A``."""
    A = set(A)
    inc = _incidence(w)
    if not A <= set(range(len(inc))):
        return False
    ins: dict[int, int] = {}
    outs: dict[int, int] = {}
    for e in A:
        t, h = inc[e]
        if t is not None:
            outs[t] = outs.get(t, 0) + 1
        if h is not None:
            ins[h] = ins.get(h, 0) + 1
    for v in set(ins) | set(outs):
        if ins.get(v, 0) != outs.get(v, 0) or ins.get(v, 0) > 1:
            return False
    return True


def enumerate_cycle_collections(w: WebDiagram) -> Iterator[CycleCollection]:
    """Backtracking over edges in id order with per-vertex degree pruning."""
    inc = _incidence(w)
    n = len(inc)
    ins: dict[int, int] = {}
    outs: dict[int, int] = {}
    # last edge index touching each vertex: past it the vertex must be balanced
    last: dict[int, int] = {}
    for e, (t, h) in enumerate(inc):
        for v in (t, h):
            if v is not None:
                last[v] = e
    closing = {}
    for v, e in last.items():
        closing.setdefault(e, []).append(v)
    chosen: list[int] = []

    def balanced(e):
        return all(ins.get(v, 0) == outs.get(v, 0) for v in closing.get(e, ()))

    def go(e):
        if e == n:
            yield frozenset(chosen)
            return
        t, h = inc[e]
        if balanced(e):
            yield from go(e + 1)
        if (t is None or outs.get(t, 0) == 0) and (h is None or ins.get(h, 0) == 0):
            if t is not None:
                outs[t] = 1
            if h is not None:
                ins[h] = 1
            chosen.append(e)
            if balanced(e):
                yield from go(e + 1)
            chosen.pop()
            if t is not None:
                outs[t] = 0
            if h is not None:
                ins[h] = 0

    yield from go(0)


def cycle_collections_by_filter(w: WebDiagram) -> list[CycleCollection]:
    """Every edge subset passing :func:`is_cycle_collection` (exponential; for tests)."""
    ids = [e.id for e in w.edges]
    out = []
    for r in range(len(ids) + 1):
        for sub in combinations(ids, r):
            if is_cycle_collection(w, sub):
                out.append(frozenset(sub))
    return out


def reduce_cycles(w: WebDiagram, A: Iterable[int], N: Optional[int] = None) -> WebDiagram:
    """Reverse the cycles of ``A`` at rank ``N`` (labels ``i -> N - i``)."""
    A = frozenset(A)
    if not is_cycle_collection(w, A):
        raise ValueError(f"{sorted(A)} is not a collection of disjoint directed cycles")
    if N is not None and N != w.N:
        w = w.with_rank(N)
    return reverse_edges(w, A)


@dataclass
class ReductionTerm:
    cycles: CycleCollection
    diagram: WebDiagram
    writhe: int
    value: LaurentPoly


@dataclass
class ReductionReport:
    N: int
    lhs: LaurentPoly
    rhs_minus: LaurentPoly = ZERO
    rhs_plus: LaurentPoly = ZERO
    terms: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs_minus and self.lhs == self.rhs_plus


def verify_reduction(w: WebDiagram, N: Optional[int] = None, engine: str = "dp") -> ReductionReport:
    """Compare ``<w>_N`` with both forms of the expansion over cycle collections."""
    N = w.N if N is None else N
    if N < 2:
        raise ValueError("the expansion needs N >= 2")
    w = w.with_rank(N)
    if not (w.is_closed and is_moy(w)):
        raise ValueError("verify_reduction takes a closed MOY graph")
    report = ReductionReport(N, evaluate(w, engine).value)
    for A in enumerate_cycle_collections(w):
        g = reduce_cycles(w, A)
        wr = writhe(g)
        val = evaluate(g.with_rank(N - 1), engine).value
        report.terms.append(ReductionTerm(A, g, wr, val))
        report.rhs_minus = report.rhs_minus + val.shift(-wr)
        report.rhs_plus = report.rhs_plus + val.shift(wr)
    return report


def color_n_edges(w: WebDiagram, c: dict) -> CycleCollection:
    top = 1 << (w.N - 1)
    return frozenset(e for e, m in c.items() if m & top)


def degree_identity_violations(w: WebDiagram) -> list:
    """Check, coloring by coloring, the bookkeeping behind the expansion.

    For each coloring ``c`` at rank N, the edges containing color N form a
    cycle collection ``A``; on ``G^A`` the transported coloring avoids N and
    ``d_N(c) = d_(N-1)(c') - w(G^A)``.
    """
    N = w.N
    full = (1 << N) - 1
    bad = []
    for c, d in colorings_with_degree(w):
        A = color_n_edges(w, c)
        if not is_cycle_collection(w, A):
            bad.append((c, "color-N edges are not a cycle collection"))
            continue
        g = reverse_edges(w, A)
        c2 = {e: (full & ~m if e in A else m) for e, m in c.items()}
        d_same_rank = coloring_degree(g, c2)
        d_lower = coloring_degree(g.with_rank(N - 1), c2)
        if d_same_rank != d or d_lower - writhe(g) != d:
            bad.append((c, f"d_N={d}, transported={d_same_rank}, d_N-1={d_lower}, writhe={writhe(g)}"))
    return bad
