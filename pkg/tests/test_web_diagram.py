import random

import pytest
from hypothesis import given, settings, strategies as st

from moyweb import standard_webs as sw
from moyweb.cabling import cable, cabled_writhe
from moyweb.generators import ladder, random_closed_web
from moyweb.web_diagram import (WebDiagram, WebSyntaxError, WebValidityError, canonical, check,
                                disjoint_union, down, is_moy, merge, mirror, parse,
                                remove_trivial_edges, reverse_edges, serialize, up, validate,
                                writhe)

from conftest import corpus_files

seeds = st.integers(0, 2 ** 32 - 1)


def random_web(seed, N=None, max_slices=6):
    rng = random.Random(seed)
    return random_closed_web(rng, N or rng.choice((2, 3)), max_slices)


# parsing --------------------------------------------------------------------


def test_parse_smallest_circle():
    w = parse("web N=2\ncup 0 1 rightward\ncap 0 leftward")
    assert w.is_closed and w.N == 2
    assert [e.label for e in w.edges] == [1]


def test_cap_turn_names_direction_of_travel():
    # after a rightward cup the word is (d1, u1); closing it travels leftward
    with pytest.raises(WebValidityError, match="slice 1"):
        parse("web N=2\ncup 0 1 rightward\ncap 0 rightward")


def test_parse_rejects_mismatched_cap_labels():
    with pytest.raises(WebValidityError, match="slice 2"):
        parse("web N=3\ncup 0 1 rightward\ncup 2 2 rightward\ncap 1 leftward")


def test_syntax_errors_carry_position():
    with pytest.raises(WebSyntaxError) as exc:
        parse("web N=3\ncup 0 1 rightward\n  twist 0\n")
    assert exc.value.line == 3 and exc.value.col == 3
    with pytest.raises(WebSyntaxError):
        parse("cup 0 1 rightward")
    with pytest.raises(WebSyntaxError):
        parse("web N=2\nmerge 0 (u1) -> (u1)")


def test_mod_n_violation_names_slice():
    with pytest.raises(WebValidityError, match=r"slice 0 \(merge at 0\)"):
        parse("web N=3\nbottom u1 u1\nmerge 0 (u1,u1) -> (u1)")


def test_bottom_word_and_comments():
    w = parse("# a digon\nweb N=3\nbottom [u2]   # boundary\nsplit 0 (u2) -> (u1,u1)\n"
              "merge 0 (u1,u1) -> (u2)\n")
    assert w.bottom == (up(2),) and w.top == (up(2),)
    assert serialize(w) == serialize(sw.digon(3, 1, 1))


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.name)
def test_corpus_roundtrip(path):
    text = path.read_text()
    assert serialize(parse(text)) == canonical(text)
    assert parse(serialize(parse(text))) == parse(text)


# validity -------------------------------------------------------------------


def test_validate_examples():
    assert validate(sw.circle(3, 1)) == []
    ok = WebDiagram(3, (up(1), up(1)), (merge(0, up(1), up(1), up(2)),))
    bad = WebDiagram(3, (up(1), up(1)), (merge(0, up(1), up(1), up(1)),))
    assert validate(ok) == []
    assert len(validate(bad)) == 1


def test_is_moy_examples():
    assert is_moy(sw.circle(4, 2))
    assert is_moy(sw.theta(3, 1, 1))
    # all three legs incoming, labels summing to N: valid mod N but not MOY
    w = check(WebDiagram(3, (up(1), up(1)), (merge(0, up(1), up(1), down(1)),)))
    assert validate(w) == [] and not is_moy(w)


def test_words_are_conserved():
    for rel in sw.PARAMS:
        params = {p: 1 for p in sw.PARAMS[rel]}
        if rel == "square2":
            params["m"] = 2
        lhs, terms = sw.relation_terms(rel, params, 4)
        for d in [lhs] + [t for _, t in terms]:
            assert validate(d) == [] and is_moy(d)
            assert d.words[-1] == d.top


def test_labels_outside_range_are_valid():
    assert validate(sw.circle(3, 4)) == []


# standard webs --------------------------------------------------------------


def test_standard_web_examples():
    c = sw.standard_web("circle", {"k": 2}, "lhs", 3)
    assert c.is_closed and c.labels == {2}
    d = sw.standard_web("3", {"m": 1, "n": 1}, "lhs", 2)
    assert d.bottom == d.top == (up(2),) and sorted(d.labels) == [1, 2]
    assert len(d.vertices()) == 2
    s = sw.standard_web("square3", {"m": 2, "n": 1, "k": 1, "l": 1}, 1, 4)
    assert s == sw.square3_rhs(4, 2, 1, 1, 1)
    with pytest.raises(ValueError):
        sw.standard_web("digon", {"m": -1, "n": 1}, "lhs", 3)
    with pytest.raises(ValueError):
        sw.relation_id("8")


# writhe ---------------------------------------------------------------------


def test_writhe_examples():
    for k in range(1, 5):
        assert writhe(sw.circle(5, k)) == k
        assert writhe(sw.circle(5, k, counterclockwise=False)) == -k
    both = disjoint_union(sw.circle(4, 2), sw.circle(4, 2, counterclockwise=False))
    assert writhe(both) == 0
    with pytest.raises(ValueError):
        writhe(sw.digon(3, 1, 1))


def test_writhe_rejects_non_moy():
    w = sw.theta(3, 1, 1)
    # reversing only the outer edge leaves vertices valid mod N but not MOY
    with pytest.raises(ValueError):
        writhe(reverse_edges(w, {0}))


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_writhe_mirror_and_union(seed):
    w = random_web(seed)
    assert writhe(mirror(w)) == -writhe(w)
    v = random_web(seed + 1, N=w.N)
    assert writhe(disjoint_union(w, v)) == writhe(w) + writhe(v)


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_writhe_matches_cabling(seed):
    rng = random.Random(seed)
    w = random_closed_web(rng, rng.choice((1, 2, 3)), 6)
    assert writhe(w) == cabled_writhe(w)


def test_cabling_counts_circles():
    assert len(cable(sw.circle(4, 3))) == 3
    # theta with sides 1, 2: the 3-edge carries three strands, split 1 | 2
    assert len(cable(sw.theta(4, 1, 2))) == 3
    assert cabled_writhe(ladder(3, 4, 3)) == writhe(ladder(3, 4, 3))


# transformations ------------------------------------------------------------


def test_reverse_edges_examples():
    w = sw.circle(3, 1)
    assert reverse_edges(w, set()) == w
    assert reverse_edges(w, {0}) == sw.circle(3, 2, counterclockwise=False)
    with pytest.raises(KeyError):
        reverse_edges(w, {5})


@settings(max_examples=60, deadline=None)
@given(seeds, st.data())
def test_reverse_edges_is_an_involution(seed, data):
    w = random_web(seed)
    E = data.draw(st.sets(st.sampled_from([e.id for e in w.edges])))
    v = reverse_edges(w, E)
    assert validate(v) == []
    assert [e.label for e in v.edges] == [w.N - e.label if e.id in E else e.label for e in w.edges]
    assert reverse_edges(v, E) == w


def test_remove_trivial_edges_examples():
    w = sw.theta(3, 1, 1)
    assert remove_trivial_edges(w) == w
    # every edge of a digon on an N-strand with sides N and 0 is trivial
    gone = remove_trivial_edges(sw.digon(3, 3, 0))
    assert gone.slices == () and gone.bottom == ()
    strand = remove_trivial_edges(sw.digon(4, 2, 0))
    assert strand.slices == () and strand.bottom == (up(2),)
    circle = remove_trivial_edges(sw.theta(3, 1, 2))   # outer edge labelled N
    assert circle.is_closed and len(circle.edges) == 1 and len(circle.slices) == 2


def test_remove_trivial_edges_reorients_head_to_head():
    # two unit edges meeting head to head at a vertex whose third leg is the N-edge
    w = ladder(3, 2, 2)
    v = remove_trivial_edges(w)
    assert not v.vertices() or all(0 < e.label < v.N for e in v.edges)
    assert validate(v) == []


def test_disjoint_union_and_mirror():
    a, b = sw.circle(3, 1), sw.theta(3, 1, 1)
    empty = WebDiagram(3)
    assert disjoint_union(a, empty) == a
    assert serialize(disjoint_union(disjoint_union(a, b), a)) == serialize(disjoint_union(a, disjoint_union(b, a)))
    with pytest.raises(ValueError):
        disjoint_union(a, sw.circle(4, 1))
    assert mirror(mirror(b)) == b
