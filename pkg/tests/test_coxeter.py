import itertools
import random

import pytest
from hypothesis import given, strategies as st

from garside_kit.coxeter import (
    INF,
    build_graph,
    classify,
    disjoint_union,
    elements_equal,
    enumerate_group,
    is_spherical,
    le_left,
    longest_element,
    reduce_word,
    weak_order_join,
    weak_order_meet,
)
from garside_kit.errors import (
    BadParameter,
    GraphMismatch,
    LetterNotInGraph,
    MalformedSpec,
    NotSpherical,
    UnknownBuiltin,
)

from oracles import COXETER_ORACLES, cayley_lengths, evaluate


def test_build_a3_is_path():
    g = build_graph("A3")
    assert g.vertices == ("1", "2", "3")
    assert g.label("1", "2") == 3 and g.label("2", "3") == 3 and g.label("1", "3") == 2


def test_build_dihedral_and_rank_one():
    g = build_graph("I2(7)")
    assert g.rank == 2 and g.label("1", "2") == 7
    z2 = build_graph({"vertices": ["a"], "edges": []})
    assert enumerate_group(z2, 5) and len(enumerate_group(z2, 5)) == 2


def test_json_text_and_infinity():
    g = build_graph('{"vertices":["a","b"],"edges":[["a","b","inf"]]}')
    assert g.label("a", "b") == INF
    assert not is_spherical(g)


@pytest.mark.parametrize(
    "spec, err",
    [
        ("Q3", UnknownBuiltin),
        ("I2(4)", BadParameter),
        ("D3", BadParameter),
        ('{"vertices":["a","a"]}', MalformedSpec),
        ('{"vertices":["a","b"],"edges":[["a","b",1]]}', MalformedSpec),
        ("{not json", MalformedSpec),
    ],
)
def test_build_errors(spec, err):
    with pytest.raises(err):
        build_graph(spec)


def test_letter_not_in_graph():
    with pytest.raises(LetterNotInGraph):
        reduce_word(build_graph("A2"), "1 3")


def test_reduce_examples():
    a2, b2 = build_graph("A2"), build_graph("B2")
    assert reduce_word(a2, "1 2 1 2").canonical == ("2", "1")
    assert reduce_word(a2, "2 2").is_identity()
    # 12121 = 1·(2121) = 1·(1212) = 212 (the trailing deletions leave length 3)
    assert reduce_word(b2, "1 2 1 2 1").canonical == ("2", "1", "2")


def test_equal_examples():
    a2, b2 = build_graph("A2"), build_graph("B2")
    assert elements_equal(a2, "1 2 1", "2 1 2")
    assert not elements_equal(a2, "1", "")
    assert elements_equal(b2, "1 2 1 2", "2 1 2 1")


def test_meet_join_examples():
    a2, b2 = build_graph("A2"), build_graph("B2")
    r = lambda g, w: reduce_word(g, w)
    assert weak_order_meet(r(a2, "1 2"), r(a2, "1")) == r(a2, "1")
    assert weak_order_meet(r(a2, "1"), r(a2, "2")).is_identity()
    assert weak_order_meet(r(a2, "1 2"), r(a2, "")).is_identity()
    assert weak_order_join(r(a2, "1"), r(a2, "2")) == r(a2, "1 2 1")
    assert weak_order_join(r(a2, "1 2"), r(a2, "")) == r(a2, "1 2")
    assert weak_order_join(r(b2, "1"), r(b2, "2")) == r(b2, "1 2 1 2")


def test_join_needs_spherical():
    g = build_graph("affA2")
    with pytest.raises(NotSpherical):
        weak_order_join(reduce_word(g, "1"), reduce_word(g, "2"))


def test_graph_mismatch():
    with pytest.raises(GraphMismatch):
        reduce_word(build_graph("A2"), "1") * reduce_word(build_graph("B2"), "1")


def test_longest_examples():
    assert longest_element(build_graph("A2")).canonical == ("1", "2", "1")
    assert longest_element(build_graph("A1")).canonical == ("1",)
    assert longest_element(build_graph("H3")).length == 15


def test_enumerate_counts():
    assert len(enumerate_group(build_graph("A2"), 10)) == 6
    assert len(enumerate_group(build_graph("affA2"), 0)) == 1
    assert len(enumerate_group(build_graph("F4"), 24)) == 1152


@pytest.mark.parametrize(
    "name, spherical",
    [("A5", True), ("affA2", False), ("A2+H3", True), ("E8", True), ("affA1", False)],
)
def test_spherical_examples(name, spherical):
    assert is_spherical(build_graph(name)) is spherical


def test_classify_union():
    assert classify(disjoint_union(build_graph("A2"), build_graph("H3"))) == ["A2", "H3"]


@pytest.mark.parametrize("name", ["A2", "B2", "A3"])
def test_tits_agrees_with_cayley_bfs(name):
    g = build_graph(name)
    gens = COXETER_ORACLES[name]()
    words = [w for L in range(5) for w in itertools.product(range(g.rank), repeat=L)]
    perm = {w: evaluate(gens, w) for w in words}
    rng = random.Random(1)
    for _ in range(400):
        u, v = rng.choice(words), rng.choice(words)
        for method in ("tits", "roots", "table"):
            assert elements_equal(g, g.names(u), g.names(v), method) == (perm[u] == perm[v])


@pytest.mark.parametrize("name", ["A2", "B2", "A3", "B3"])
def test_lengths_match_cayley(name):
    g = build_graph(name)
    dist = cayley_lengths(COXETER_ORACLES[name]())
    gens = COXETER_ORACLES[name]()
    elems = enumerate_group(g, 100)
    assert len(elems) == len(dist)
    for w in elems:
        assert dist[evaluate(gens, w.letters)] == w.length


WORDS_A3 = st.lists(st.integers(0, 2), max_size=12)


@given(WORDS_A3)
def test_reduce_idempotent(w):
    g = build_graph("A3")
    x = reduce_word(g, g.names(w))
    assert reduce_word(g, x.canonical) == x


@given(st.lists(st.integers(0, 2), max_size=10), st.lists(st.integers(0, 2), max_size=10))
def test_length_subadditive_and_parity(u, v):
    g = build_graph("affA2")
    x, y = reduce_word(g, g.names(u)), reduce_word(g, g.names(v))
    L = (x * y).length
    assert L <= x.length + y.length
    assert (L - x.length - y.length) % 2 == 0


@given(st.lists(st.integers(0, 3), max_size=9))
def test_three_engines_agree(w):
    g = build_graph("B4")
    names = g.names(w)
    assert reduce_word(g, names, "tits") == reduce_word(g, names, "roots") == reduce_word(g, names, "table")


@pytest.mark.parametrize("name", ["A3", "B3"])
def test_weak_order_lattice_axioms(name):
    g = build_graph(name)
    W = enumerate_group(g, 100)
    rng = random.Random(7)
    meet = lambda a, b: weak_order_meet(a, b)
    join = lambda a, b: weak_order_join(a, b)
    for u in W:
        for v in rng.sample(W, 6):
            m, j = meet(u, v), join(u, v)
            assert m == meet(v, u) and j == join(v, u)
            assert le_left(m, u) and le_left(m, v)
            assert le_left(u, j) and le_left(v, j)
            assert meet(u, join(u, v)) == u and join(u, meet(u, v)) == u
            w = rng.choice(W)
            assert meet(meet(u, v), w) == meet(u, meet(v, w))
            assert join(join(u, v), w) == join(u, join(v, w))
    # right order through inverses
    for _ in range(40):
        u, v = rng.choice(W), rng.choice(W)
        assert weak_order_meet(u, v, "R") == weak_order_meet(u.inverse(), v.inverse()).inverse()


@pytest.mark.parametrize("name", ["A4", "B3", "D4", "H3", "F4", "I2(7)"])
def test_longest_element_properties(name):
    g = build_graph(name)
    w0 = longest_element(g)
    images = set()
    for s in range(g.rank):
        sw = reduce_word(g, (g.vertices[s],) + w0.canonical)
        assert sw.length < w0.length
        conj = reduce_word(g, w0.canonical + (g.vertices[s],) + w0.canonical)
        assert conj.length == 1
        images.add(conj.letters[0])
    assert images == set(range(g.rank))
    assert (w0 * w0).is_identity()


BATTERY_SPHERICAL = [
    "A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "D4", "D5", "D6",
    "E6", "F4", "H3", "H4", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "I2(12)", "A1+A1", "A2+H3",
    "B2+A1+A1",
]
BATTERY_INFINITE = [
    "affA1",
    "affA2",
    "affA3",
    '{"vertices":["a","b","c"],"edges":[["a","b",3],["b","c",3],["a","c",3]]}',
    '{"vertices":["a","b","c","d"],"edges":[["a","b",3],["b","c",4],["c","d",4]]}',
    '{"vertices":["a","b","c"],"edges":[["a","b",6],["b","c",3]]}',
]


@pytest.mark.parametrize("spec", BATTERY_SPHERICAL + BATTERY_INFINITE)
def test_spherical_iff_positive_definite(spec):
    from garside_kit.roots import bilinear_form, is_positive_definite

    g = build_graph(spec)
    assert is_spherical(g) == is_positive_definite(bilinear_form(g)) == (spec in BATTERY_SPHERICAL)


def test_budget_applies_to_cached_tables():
    from garside_kit.coxeter import finite_table
    from garside_kit.errors import EnumerationBudgetExceeded

    g = build_graph("A3")
    assert finite_table(g).size == 24
    with pytest.raises(EnumerationBudgetExceeded):
        finite_table(g, budget=23)
    assert finite_table(g, budget=24).size == 24
