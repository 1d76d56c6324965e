"""Degrees of ordered set partitions and the q-identities built on them.

Every sum here is a literal enumeration over subsets; these functions are the
oracles the evaluator's coefficients are checked against.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .laurent import LaurentPoly, ZERO, qbinom


def partition_degree(Y: Iterable[int], Z: Iterable[int]) -> int:
    """``#{(y, z): y < z} - #{(y, z): y > z}`` over ``Y x Z``."""
    Y, Z = set(Y), set(Z)
    if Y & Z:
        raise ValueError(f"sets are not disjoint: {sorted(Y & Z)}")
    d = 0
    for y in Y:
        for z in Z:
            d += 1 if y < z else -1
    return d


def _subsets(X: Iterable[int], size: int):
    items = sorted(X)
    for chosen in combinations(items, size):
        yield set(chosen), set(items) - set(chosen)


def partition_sum(X: Iterable[int], m: int, n: int) -> LaurentPoly:
    """Sum of ``q^d(Y, Z)`` over splittings ``X = Y + Z`` with ``#Y = m``, ``#Z = n``."""
    X = set(X)
    if m < 0 or n < 0 or len(X) != m + n:
        raise ValueError(f"#X = {len(X)} does not match m + n = {m + n}")
    return LaurentPoly.from_half_degrees(
        2 * partition_degree(Y, Z) for Y, Z in _subsets(X, m))


def split_degree_check(X: Iterable[int], Y: Iterable[int], M: int, k: int) -> bool:
    """Check the cut formula for ``d(X, Y)`` at the interval split ``[1,k] | [k+1,M]``."""
    X, Y = set(X), set(Y)
    if not 1 <= k <= M - 1:
        raise ValueError(f"k must lie in [1, {M - 1}], got {k}")
    if not X | Y <= set(range(1, M + 1)):
        raise ValueError("X and Y must be subsets of [1, M]")
    X1, Y1 = {x for x in X if x <= k}, {y for y in Y if y <= k}
    X2, Y2 = X - X1, Y - Y1
    rhs = (partition_degree(X1, Y1) + partition_degree(X2, Y2)
           + len(X1) * len(Y2) - len(Y1) * len(X2))
    return partition_degree(X, Y) == rhs


def key_identity_sides(X: Iterable[int], Y: Iterable[int], k1: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the exchange identity used for the square relation.

    LHS sums over ``X = X1 + X2`` with ``#X1 = k1`` the weight
    ``q^(d(X1, X2) + d(Y, X1))``.  RHS sums over ``j`` the coefficient
    ``qbinom(l, k1 - j)`` (``l = #X - #Y``) times the sum over ``Y = Y1 + Y2`` with
    ``#Y2 = j`` of ``q^(d(Y1, Y2) + d(Y2, X))``.
    """
    X, Y = set(X), set(Y)
    if X & Y:
        raise ValueError("X and Y must be disjoint")
    l = len(X) - len(Y)
    if l < 0:
        raise ValueError(f"need #X >= #Y, got {len(X)} < {len(Y)}")
    if 0 <= k1 <= len(X):
        lhs = LaurentPoly.from_half_degrees(
            2 * (partition_degree(X1, X2) + partition_degree(Y, X1))
            for X1, X2 in _subsets(X, k1))
    else:
        lhs = ZERO
    rhs = ZERO
    for j in range(0, min(k1, len(Y)) + 1):
        coeff = qbinom(l, k1 - j)
        if coeff.is_zero():
            continue
        inner = LaurentPoly.from_half_degrees(
            2 * (partition_degree(Y1, Y2) + partition_degree(Y2, X))
            for Y2, Y1 in _subsets(Y, j))
        rhs = rhs + coeff * inner
    return lhs, rhs
