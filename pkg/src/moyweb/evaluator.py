"""Evaluation of closed and open webs, and skein-relation checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Optional, Sequence

from . import standard_webs
from .coloring import _search, local_halves, subsets, vertex_condition
from .laurent import LaurentPoly, ZERO, qbinom
from .web_diagram import DOWN, UP, WebDiagram, remove_trivial_edges


@dataclass(frozen=True)
class Evaluation:
    value: LaurentPoly
    coloring_count: int

    def __str__(self):
        return str(self.value)


def evaluate_closed(w: WebDiagram) -> Evaluation:
    """Sum of ``q^degree`` over all colorings, by exhaustive enumeration."""
    if not w.is_closed:
        raise ValueError("evaluate_closed needs a closed diagram; use evaluate_open")
    degs = [h for _, h in _search(w)]
    return Evaluation(LaurentPoly.from_half_degrees(degs), len(degs))


def _check_boundary(w: WebDiagram, masks: Sequence[int], word) -> None:
    if len(masks) != len(word):
        raise ValueError(f"boundary coloring has {len(masks)} entries for {len(word)} strands")
    for m, st in zip(masks, word):
        if bin(m).count("1") != st.label or m >> w.N:
            raise ValueError(f"color mask {m:b} does not fit strand {st}")


def evaluate_open(w: WebDiagram, boundary) -> LaurentPoly:
    """Sum over colorings inducing ``boundary = (bottom masks, top masks)``."""
    bottom, top = boundary
    _check_boundary(w, bottom, w.bottom)
    _check_boundary(w, top, w.top)
    return LaurentPoly.from_half_degrees(h for _, h in _search(w, bottom, top))


def open_values(w: WebDiagram, bottom: Sequence[int]) -> dict[tuple, LaurentPoly]:
    """All nonzero ``top coloring -> value`` for one fixed bottom coloring."""
    _check_boundary(w, bottom, w.bottom)
    lay = w.layout
    top_edges = [lay.segment_edge[s] for s in lay.top_segments]
    acc: dict[tuple, list[int]] = {}
    for c, h in _search(w, bottom):
        acc.setdefault(tuple(c[e] for e in top_edges), []).append(h)
    return {k: LaurentPoly.from_half_degrees(v) for k, v in acc.items()}


# transfer matrix -------------------------------------------------------------------


def transfer(w: WebDiagram, bottom: Optional[Sequence[int]] = None) -> dict[tuple, dict[int, int]]:
    """Propagate colored boundary words slice by slice.

    The state is the tuple of color masks on the current word; values are
    ``{doubled degree: count}``.  Cups branch over color sets, caps require
    equal colors on both legs, vertices enumerate the colors of their new legs.
    """
    N = w.N
    if any(not 0 <= st.label <= N for word in w.words for st in word):
        return {}
    if bottom is None:
        starts = product(*(subsets(N, st.label) for st in w.bottom))
    else:
        _check_boundary(w, bottom, w.bottom)
        starts = [tuple(bottom)]
    layer: dict[tuple, dict[int, int]] = {tuple(s): {0: 1} for s in starts}
    for g in w.slices:
        nxt: dict[tuple, dict[int, int]] = {}
        p, nb = g.pos, len(g.bottom)
        for word, poly in layer.items():
            bm = word[p:p + nb]
            if g.kind == "cap":
                if bm[0] != bm[1]:
                    continue
                choices = [()]
            elif g.kind == "cup":
                choices = [(m, m) for m in subsets(N, g.label)]
            else:
                choices = product(*(subsets(N, leg.label) for leg in g.top))
            for tm in choices:
                if g.is_vertex:
                    ins = [m for leg, m in zip(g.bottom, bm) if leg.dir == UP]
                    ins += [m for leg, m in zip(g.top, tm) if leg.dir == DOWN]
                    outs = [m for leg, m in zip(g.bottom, bm) if leg.dir == DOWN]
                    outs += [m for leg, m in zip(g.top, tm) if leg.dir == UP]
                    if not vertex_condition(ins, outs, N):
                        continue
                dh = local_halves(g, bm, tm, N)
                key = word[:p] + tuple(tm) + word[p + nb:]
                target = nxt.setdefault(key, {})
                for h, c in poly.items():
                    target[h + dh] = target.get(h + dh, 0) + c
        layer = nxt
    return layer


def _to_poly(halves: Mapping[int, int]) -> LaurentPoly:
    return LaurentPoly._raw(dict(halves))


def evaluate_dp(w: WebDiagram) -> Evaluation:
    """Same value as :func:`evaluate_closed`, by dynamic programming over slices."""
    if not w.is_closed:
        raise ValueError("evaluate_dp needs a closed diagram")
    layer = transfer(w)
    halves = layer.get((), {})
    return Evaluation(_to_poly(halves), sum(halves.values()))


def evaluate(w: WebDiagram, engine: str = "dp") -> Evaluation:
    if engine == "dp":
        return evaluate_dp(w)
    if engine == "naive":
        return evaluate_closed(w)
    raise ValueError(f"unknown engine {engine!r}")


# relations ---------------------------------------------------------------------


@dataclass
class RelationReport:
    relation: str
    params: dict
    N: int
    checked: int = 0
    failures: list = field(default_factory=list)
    coefficients: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "params": self.params,
            "N": self.N,
            "ok": self.ok,
            "boundary_colorings": self.checked,
            "coefficients": [str(c) for c in self.coefficients],
            "failures": [
                {"bottom": list(b), "top": list(t), "lhs": str(l), "rhs": str(r)}
                for b, t, l, r in self.failures
            ],
        }


def _open_table(w: WebDiagram, bottom, engine: str) -> dict[tuple, LaurentPoly]:
    if engine == "dp":
        return {k: _to_poly(v) for k, v in transfer(w, bottom).items() if v}
    return open_values(w, bottom)


def verify_relation(rel, params: Mapping[str, int], N: int, engine: str = "naive") -> RelationReport:
    """Check one relation instance coloring by coloring on the common boundary.

    For every bottom coloring, the left side and the weighted right sides are
    compared on every top coloring (absent entries are zero).
    """
    rel = standard_webs.relation_id(rel)
    lhs, terms = standard_webs.relation_terms(rel, params, N)
    report = RelationReport(rel, dict(params), N, coefficients=[c for c, _ in terms])
    if rel == "circle":
        got = evaluate_closed(lhs).value
        want = qbinom(N, int(params["k"]))
        report.checked = 1
        if got != want:
            report.failures.append(((), (), got, want))
        return report
    for d in (t for _, t in terms):
        if d.bottom != lhs.bottom or d.top != lhs.top:
            raise AssertionError(f"{rel}: right-hand diagram has a different boundary")
    if any(not 0 <= st.label <= N for st in lhs.bottom + lhs.top):
        return report  # no boundary coloring exists: both sides vanish
    top_choices = list(product(*(subsets(N, st.label) for st in lhs.top)))
    for bottom in product(*(subsets(N, st.label) for st in lhs.bottom)):
        left = _open_table(lhs, bottom, engine)
        right: dict[tuple, LaurentPoly] = {}
        for coeff, d in terms:
            if coeff.is_zero():
                continue
            for top, v in _open_table(d, bottom, engine).items():
                right[top] = right.get(top, ZERO) + coeff * v
        for top in top_choices:
            report.checked += 1
            l, r = left.get(top, ZERO), right.get(top, ZERO)
            if l != r:
                report.failures.append((bottom, top, l, r))
    return report


def relation_grid(rel, max_N: int, min_N: int = 1):
    """Parameter tuples whose labels all lie in ``[0, N]`` (negatives are vacuous)."""
    rel = standard_webs.relation_id(rel)
    names = standard_webs.PARAMS[rel]
    for N in range(min_N, max_N + 1):
        for values in product(range(N + 1), repeat=len(names)):
            params = dict(zip(names, values))
            if not standard_webs.admissible(rel, params, N):
                continue
            try:
                labels = standard_webs.relation_labels(rel, params, N)
            except ValueError:
                continue
            if max(labels) <= N:
                yield params, N


def verify_trivial_edge_removal(w: WebDiagram) -> bool:
    return evaluate_closed(w).value == evaluate_closed(remove_trivial_edges(w)).value
