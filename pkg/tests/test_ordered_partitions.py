from itertools import product

import pytest
from hypothesis import given, strategies as st

from moyweb.laurent import ONE, parse_poly, qbinom
from moyweb.ordered_partitions import (key_identity_sides, partition_degree, partition_sum,
                                       split_degree_check)


def disjoint_pairs(M):
    """All ordered pairs of disjoint subsets of [1, M]."""
    for labels in product((0, 1, 2), repeat=M):
        X = {i + 1 for i, t in enumerate(labels) if t == 1}
        Y = {i + 1 for i, t in enumerate(labels) if t == 2}
        yield X, Y


def test_partition_degree_examples():
    assert partition_degree(set(), {3, 7}) == 0
    assert partition_degree({1}, {2}) == 1
    assert partition_degree({1, 4}, {2, 3}) == 0
    with pytest.raises(ValueError):
        partition_degree({1, 2}, {2})


@given(st.sets(st.integers(1, 8), max_size=8), st.data())
def test_partition_degree_antisymmetric(S, data):
    Y = data.draw(st.sets(st.sampled_from(sorted(S)), max_size=len(S))) if S else set()
    Z = S - Y
    assert partition_degree(Y, Z) == -partition_degree(Z, Y)


def test_partition_sum_examples():
    assert partition_sum({5}, 1, 0) == ONE
    assert partition_sum({1, 2}, 1, 1) == parse_poly("q + q^-1")
    assert partition_sum({1, 2, 3, 4}, 2, 2) == qbinom(4, 2)
    with pytest.raises(ValueError):
        partition_sum({1, 2}, 2, 1)


def test_partition_sum_is_qbinom():
    for total in range(11):
        for m in range(total + 1):
            assert partition_sum(range(1, total + 1), m, total - m) == qbinom(total, m)


@pytest.mark.parametrize("ground", [range(1, 7), [2, 5, 9, 11, 40, 41], [-3, 0, 8, 13, 21, 34]])
def test_partition_sum_depends_only_on_sizes(ground):
    for m in range(7):
        assert partition_sum(ground, m, 6 - m) == partition_sum(range(6), m, 6 - m)


def test_split_degree_examples():
    assert split_degree_check({1}, {2}, 2, 1)
    assert split_degree_check({1, 3}, {2, 4}, 4, 2)
    assert split_degree_check(set(), set(), 3, 1)
    with pytest.raises(ValueError):
        split_degree_check({1}, {2}, 2, 2)


def test_split_degree_exhaustive():
    for M in range(2, 7):
        for X, Y in disjoint_pairs(M):
            for k in range(1, M):
                assert split_degree_check(X, Y, M, k)


def test_key_identity_examples():
    assert key_identity_sides({1}, set(), 1) == (ONE, ONE)
    assert key_identity_sides({1, 2}, set(), 1) == (parse_poly("q + q^-1"), qbinom(2, 1))
    lhs, rhs = key_identity_sides({1, 3}, {2}, 1)
    assert lhs == rhs
    with pytest.raises(ValueError):
        key_identity_sides({1}, {2, 3}, 0)


def test_key_identity_frozen_value():
    # enumerated by hand: X1 = {1}: d({1},{3}) + d({2},{1}) = 1 - 1; X1 = {3}: -1 + 1
    lhs, rhs = key_identity_sides({1, 3}, {2}, 1)
    assert lhs == parse_poly("2")


def test_key_identity_exhaustive_small():
    for M in range(0, 6):
        for X, Y in disjoint_pairs(M):
            if len(X) < len(Y):
                continue
            for k1 in range(len(X) + 1):
                lhs, rhs = key_identity_sides(X, Y, k1)
                assert lhs == rhs, (X, Y, k1)
