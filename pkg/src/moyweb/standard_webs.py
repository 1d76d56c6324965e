"""Builders for the diagrams appearing in the MOY skein relations.

Every open web reads its boundary points left to right; vertices drawn at
equal height in the usual pictures are staggered so each slice carries one
generator (a planar isotopy fixing the boundary).

Relation ids::

    1 / circle    closed k-circle
    2 / assoc     the two trivalent trees with legs i, j, k
    3 / digon     bigon on an (m+n)-strand
    4 / digon2    bigon with one reversed side
    5 / square1   square with [N-m-1] on the right
    6 / square2   square with two q-binomial terms
    7 / square3   square with the sum over j
"""
from __future__ import annotations

from typing import Mapping

from .laurent import ONE, qbinom, qint
from .web_diagram import (LEFTWARD, RIGHTWARD, WebDiagram, cap, check, cup, down, identity,
                          merge, split, up)

ALIASES = {
    "1": "circle", "circle": "circle",
    "2": "assoc", "assoc": "assoc",
    "3": "digon", "digon": "digon",
    "4": "digon2", "digon2": "digon2",
    "5": "square1", "square1": "square1",
    "6": "square2", "square2": "square2",
    "7": "square3", "square3": "square3",
}

PARAMS = {
    "circle": ("k",),
    "assoc": ("i", "j", "k"),
    "digon": ("m", "n"),
    "digon2": ("m", "n"),
    "square1": ("m",),
    "square2": ("m", "n", "l"),
    "square3": ("m", "n", "k", "l"),
}


def relation_id(rel) -> str:
    try:
        return ALIASES[str(rel)]
    except KeyError:
        raise ValueError(f"unknown relation {rel!r}") from None


def circle(N: int, k: int, counterclockwise: bool = True) -> WebDiagram:
    if counterclockwise:
        return check(WebDiagram(N, (), (cup(0, k, RIGHTWARD), cap(0, k, LEFTWARD))))
    return check(WebDiagram(N, (), (cup(0, k, LEFTWARD), cap(0, k, RIGHTWARD))))


def theta(N: int, m: int, n: int) -> WebDiagram:
    """Counterclockwise (m+n)-circle whose right side is split into m | n."""
    s = m + n
    return check(WebDiagram(N, (), (
        cup(0, s, RIGHTWARD),
        split(1, up(s), up(m), up(n)),
        merge(1, up(m), up(n), up(s)),
        cap(0, s, LEFTWARD),
    )))


def tree_left(N, i, j, k) -> WebDiagram:
    """``i+j+k`` splits into ``i`` and ``j+k``, then ``j+k`` into ``j`` and ``k``."""
    return check(WebDiagram(N, (up(i + j + k),), (
        split(0, up(i + j + k), up(i), up(j + k)),
        split(1, up(j + k), up(j), up(k)),
    )))


def tree_right(N, i, j, k) -> WebDiagram:
    return check(WebDiagram(N, (up(i + j + k),), (
        split(0, up(i + j + k), up(i + j), up(k)),
        split(0, up(i + j), up(i), up(j)),
    )))


def digon(N, m, n) -> WebDiagram:
    s = m + n
    return check(WebDiagram(N, (up(s),), (
        split(0, up(s), up(m), up(n)),
        merge(0, up(m), up(n), up(s)),
    )))


def digon_reversed(N, m, n) -> WebDiagram:
    """m-strand with an (m+n)-edge up the left and an n-edge coming back down the right."""
    return check(WebDiagram(N, (up(m),), (
        split(0, up(m), up(m + n), down(n)),
        merge(0, up(m + n), down(n), up(m)),
    )))


def square1(N, m) -> WebDiagram:
    return check(WebDiagram(N, (up(1), down(m)), (
        split(0, up(1), down(m), up(m + 1)),
        merge(1, up(m + 1), down(m), up(1)),
        split(1, up(1), up(m + 1), down(m)),
        merge(0, down(m), up(m + 1), up(1)),
    )))


def double_y1(N, m) -> WebDiagram:
    return check(WebDiagram(N, (up(1), down(m)), (
        merge(0, up(1), down(m), down(m - 1)),
        split(0, down(m - 1), up(1), down(m)),
    )))


def square2(N, m, n, l) -> WebDiagram:
    return check(WebDiagram(N, (up(1), up(m + l - 1)), (
        split(1, up(m + l - 1), up(l + n - 1), up(m - n)),
        merge(0, up(1), up(l + n - 1), up(l + n)),
        split(0, up(l + n), up(l), up(n)),
        merge(1, up(n), up(m - n), up(m)),
    )))


def big_h(N, m, l) -> WebDiagram:
    return check(WebDiagram(N, (up(1), up(m + l - 1)), (
        split(1, up(m + l - 1), up(l - 1), up(m)),
        merge(0, up(1), up(l - 1), up(l)),
    )))


def double_y2(N, m, l) -> WebDiagram:
    return check(WebDiagram(N, (up(1), up(m + l - 1)), (
        merge(0, up(1), up(m + l - 1), up(m + l)),
        split(0, up(m + l), up(l), up(m)),
    )))


def square3(N, m, n, k, l) -> WebDiagram:
    return check(WebDiagram(N, (up(n), up(m + l)), (
        split(1, up(m + l), up(k), up(m + l - k)),
        merge(0, up(n), up(k), up(n + k)),
        split(0, up(n + k), up(m), up(n + k - m)),
        merge(1, up(n + k - m), up(m + l - k), up(n + l)),
    )))


def square3_rhs(N, m, n, l, j) -> WebDiagram:
    return check(WebDiagram(N, (up(n), up(m + l)), (
        split(0, up(n), up(m - j), up(n + j - m)),
        merge(1, up(n + j - m), up(m + l), up(n + l + j)),
        split(1, up(n + l + j), up(j), up(n + l)),
        merge(0, up(m - j), up(j), up(m)),
    )))


def relation_terms(rel, params: Mapping[str, int], N: int):
    """``(lhs, [(coefficient, rhs_diagram), ...])`` for one relation instance."""
    rel = relation_id(rel)
    missing = set(PARAMS[rel]) - set(params)
    if missing:
        raise ValueError(f"relation {rel} needs parameters {sorted(missing)}")
    p = {k: int(params[k]) for k in PARAMS[rel]}
    if any(v < 0 for v in p.values()):
        raise ValueError(f"relation {rel}: parameters must be non-negative, got {p}")
    if rel == "circle":
        return circle(N, p["k"]), []
    if rel == "assoc":
        return tree_left(N, **p), [(ONE, tree_right(N, **p))]
    if rel == "digon":
        m, n = p["m"], p["n"]
        return digon(N, m, n), [(qbinom(m + n, m), identity(N, [up(m + n)]))]
    if rel == "digon2":
        m, n = p["m"], p["n"]
        return digon_reversed(N, m, n), [(qbinom(N - m, n), identity(N, [up(m)]))]
    if rel == "square1":
        m = p["m"]
        if N - m - 1 < 0:
            raise ValueError(f"square1 needs m <= N - 1, got m={m}, N={N}")
        return square1(N, m), [(ONE, identity(N, [up(1), down(m)])),
                               (qint(N - m - 1), double_y1(N, m))]
    if rel == "square2":
        m, n, l = p["m"], p["n"], p["l"]
        return square2(N, m, n, l), [(qbinom(m - 1, n), big_h(N, m, l)),
                                     (qbinom(m - 1, n - 1), double_y2(N, m, l))]
    m, n, k, l = p["m"], p["n"], p["k"], p["l"]
    terms = [(qbinom(l, k - j), square3_rhs(N, m, n, l, j)) for j in range(0, k + 1)]
    return square3(N, m, n, k, l), terms


def standard_web(pattern, params: Mapping[str, int], side="lhs", N: int = 2) -> WebDiagram:
    """One side of a relation: ``side`` is ``"lhs"`` or the index of a right-hand term.

    For the square with the j-sum, ``side`` is the summation index ``j`` itself.
    """
    rel = relation_id(pattern)
    if rel == "circle" and side == "lhs":
        return circle(N, int(params["k"]))
    if rel == "square3" and side != "lhs":
        p = params
        return square3_rhs(N, p["m"], p["n"], p["l"], int(side))
    lhs, terms = relation_terms(rel, params, N)
    if side == "lhs":
        return lhs
    return terms[int(side)][1]


def admissible(rel, params: Mapping[str, int], N: int) -> bool:
    """Parameter tuples for which the relation is claimed.

    The two-term square needs ``m >= 1``: it is the ``n = 1`` case of the j-sum
    square with ``l = m - 1``.  The ``[N-m-1]`` square needs ``m <= N - 1``.
    """
    rel = relation_id(rel)
    if any(int(params[k]) < 0 for k in PARAMS[rel]):
        return False
    if rel == "square2" and params["m"] < 1:
        return False
    if rel == "square1" and params["m"] > N - 1:
        return False
    if rel == "circle" and params["k"] < 1:
        return False
    return True


def relation_labels(rel, params: Mapping[str, int], N: int) -> set[int]:
    lhs, terms = relation_terms(rel, params, N)
    labels = set(lhs.labels)
    for _, d in terms:
        labels |= d.labels
    return labels
