import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from moyweb import standard_webs as sw
from moyweb.coloring import (bicolors, boundary_coloring, colorings_with_degree, coloring_degree,
                             enumerate_colorings, explicit_degree, is_coloring, local_degree,
                             mask_of, moy_vertex_condition, state, state_degree, subsets,
                             vertex_condition)
from moyweb.generators import random_closed_web
from moyweb.web_diagram import cap, cup, identity, reverse_edges, up, LEFTWARD, RIGHTWARD

from conftest import corpus_files, load


def test_enumeration_counts():
    assert sorted(c[0] for c in enumerate_colorings(sw.circle(2, 1))) == [0b01, 0b10]
    assert list(enumerate_colorings(sw.circle(3, 4))) == []
    assert len(list(enumerate_colorings(sw.theta(3, 1, 1)))) == 6


def test_enumeration_is_deterministic():
    w = sw.theta(4, 1, 2)
    assert list(enumerate_colorings(w)) == list(enumerate_colorings(w))


def test_colorings_satisfy_both_vertex_conditions():
    w = sw.theta(4, 1, 2)
    for c in enumerate_colorings(w):
        assert is_coloring(w, c) and is_coloring(w, c, moy=True)
    # and nothing is missed: brute force over all label-respecting assignments
    choices = [subsets(4, e.label) for e in w.edges]
    valid = [dict(enumerate(m)) for m in product(*choices) if is_coloring(w, dict(enumerate(m)))]
    assert sorted(map(sorted_items, valid)) == sorted(map(sorted_items, enumerate_colorings(w)))


def sorted_items(c):
    return tuple(sorted(c.items()))


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 5), st.data())
def test_moy_condition_equals_flow_condition(N, data):
    a = data.draw(st.integers(0, N))
    b = data.draw(st.integers(0, N - a))
    ma = data.draw(st.sampled_from(subsets(N, a)))
    mb = data.draw(st.sampled_from(subsets(N, b)))
    mc = data.draw(st.sampled_from(subsets(N, a + b)))
    assert vertex_condition([ma, mb], [mc], N) == moy_vertex_condition([ma, mb], [mc])
    assert vertex_condition([mc], [ma, mb], N) == moy_vertex_condition([mc], [ma, mb])


def test_boundary_coloring():
    assert boundary_coloring(sw.circle(2, 1), {0: 1}) == ((), ())
    strand = identity(3, [up(1)])
    assert boundary_coloring(strand, {0: 0b010}) == ((0b010,), (0b010,))
    d = sw.digon(3, 1, 1)
    for c in enumerate_colorings(d):
        bottom, top = boundary_coloring(d, c)
        assert bottom == top == (c[0],)


def test_state_examples():
    w = sw.circle(2, 1)
    s = state(w, {0: 0b10}, (1, 2))
    assert len(s.circles) == 1 and state_degree(s) == 1
    s = state(w, {0: 0b01}, (1, 2))
    assert len(s.circles) == 1 and state_degree(s) == -1
    w2 = sw.circle(3, 2)
    assert state(w2, {0: 0b011}, (1, 2)).is_empty
    assert state_degree(state(w2, {0: 0b011}, (1, 2))) == 0


def test_open_state_arc():
    # a single rightward cup colored {2}: one arc with both ends on top, traversed rightward
    w = load_text("web N=2\ncup 0 1 rightward\n")
    s = state(w, {0: 0b10}, (1, 2))
    assert len(s.arcs) == 1 and state_degree(s) == Fraction(1, 2)


def load_text(text):
    from moyweb.web_diagram import parse
    return parse(text)


def test_local_degree_examples():
    assert local_degree(cup(0, 1, RIGHTWARD), [0b10, 0b10], 2) == Fraction(1, 2)
    assert local_degree(cup(0, 2, RIGHTWARD), [0b11, 0b11], 2) == 0
    assert local_degree(cap(0, 1, LEFTWARD), [0b001, 0b001], 3) == -1


def test_local_degree_matches_bicolor_sum_at_extrema():
    # each cup's contribution is the sum over bicolors of its arc weight
    for N in range(1, 6):
        for k in range(N + 1):
            for m in subsets(N, k):
                w = load_text(f"web N={N}\ncup 0 {k} rightward\n")
                assert local_degree(w.slices[0], [m, m], N) == explicit_degree(w, {0: m})


def test_coloring_degree_examples():
    w = sw.circle(2, 1)
    assert coloring_degree(w, {0: 0b10}) == 1
    assert coloring_degree(w, {0: 0b01}) == -1
    w3 = sw.circle(3, 2)
    c = {0: mask_of([1, 2])}
    assert coloring_degree(w3, c) == explicit_degree(w3, c) == -2


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.relative_to(p.parents[1]).as_posix())
def test_dual_path_degree_on_corpus(path):
    w = load(path)
    for c, d in colorings_with_degree(w):
        assert d == explicit_degree(w, c)
        if w.is_closed:
            assert d.denominator == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.data())
def test_states_are_invariant_under_reversal(seed, data):
    rng = random.Random(seed)
    w = random_closed_web(rng, rng.choice((2, 3)), 6)
    E = data.draw(st.sets(st.sampled_from([e.id for e in w.edges])))
    v = reverse_edges(w, E)
    full = (1 << w.N) - 1
    for c in enumerate_colorings(w):
        c2 = {e: (full & ~m if e in E else m) for e, m in c.items()}
        assert is_coloring(v, c2)
        for b in bicolors(w.N):
            s, s2 = state(w, c, b), state(v, c2, b)
            assert s.direction == s2.direction
            assert state_degree(s) == state_degree(s2)
        assert coloring_degree(v, c2) == coloring_degree(w, c)


def test_open_degrees_are_half_integers():
    d = sw.square1(3, 1)
    halves = {coloring_degree(d, c).denominator for c, _ in colorings_with_degree(d)}
    assert halves <= {1, 2}
