import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from garside_kit.coxeter import build_graph, enumerate_group, reduce_word
from garside_kit.cyclo import RealCyclotomicField, minimal_polynomial
from garside_kit.errors import NotSpherical
from garside_kit.roots import (
    Root,
    act,
    bilinear_form,
    inner_product,
    inversion_set,
    is_positive_definite,
    leading_minors,
    longest_word,
    positive_roots,
    reflect,
    root_system,
)


def approx(c):
    """Float value of a field element via its coefficient vector."""
    t = c.field.approx
    return sum(float(a) * t**k for k, a in enumerate(c.coeffs))


def test_form_a2():
    form = bilinear_form(build_graph("A2"))
    assert [[str(c) for c in row] for row in form] == [["1", "-1/2"], ["-1/2", "1"]]


def test_form_infinite_label():
    g = build_graph('{"vertices":["a","b"],"edges":[["a","b","inf"]]}')
    assert str(bilinear_form(g)[0][1]) == "-1"
    assert not is_positive_definite(bilinear_form(g))


def test_form_b2_is_quadratic_irrational():
    c = bilinear_form(build_graph("B2"))[0][1]
    assert not c.is_rational()
    assert math.isclose(approx(c), -math.cos(math.pi / 4))
    assert (c * c) == c.field.from_rational(Fraction(1, 2))


@pytest.mark.parametrize("L", [3, 4, 5, 6, 7, 8, 10, 12, 15])
def test_minimal_polynomial_vanishes_at_two_cos(L):
    p = minimal_polynomial(L)
    t = 2 * math.cos(math.pi / L)
    assert abs(sum(c * t**k for k, c in enumerate(p))) < 1e-9
    assert p[-1] == 1


def test_field_signs_exact():
    K = RealCyclotomicField(5)
    phi = K.t  # golden ratio
    assert (phi * phi - phi - K.one).is_zero()
    assert (phi - K.from_rational(Fraction(161803, 100000))).sign() == 1
    assert (phi - K.from_rational(Fraction(161804, 100000))).sign() == -1


def test_reflect_examples():
    g = build_graph("A2")
    e1, e2 = Root.simple(g, "1"), Root.simple(g, "2")
    assert reflect(g, "1", e1) == -e1
    assert reflect(g, "1", e2) == e1 + e2
    g3 = build_graph("A3")
    assert reflect(g3, "1", Root.simple(g3, "3")) == Root.simple(g3, "3")


def test_act_examples():
    g = build_graph("A2")
    e1, e2 = Root.simple(g, "1"), Root.simple(g, "2")
    assert act(reduce_word(g, ""), e1) == e1
    # s1 s2 · e1 = s1 · (e1 + e2) = e2
    assert act(reduce_word(g, "1 2"), e1) == e2
    w0 = reduce_word(g, "1 2 1")
    assert act(w0, e1) == -e2
    assert all(not act(w0, Root.simple(g, s)).is_positive() for s in g.vertices)


def test_positive_root_counts():
    assert [str(r) for r in positive_roots(build_graph("A2"))] == ["e1", "e2", "e1 + e2"]
    assert len(positive_roots(build_graph("A1"))) == 1
    assert len(positive_roots(build_graph("H3"))) == 15
    assert len(positive_roots(build_graph("E8"))) == 120


def test_infinite_needs_depth():
    with pytest.raises(NotSpherical):
        positive_roots(build_graph("affA2"))
    assert positive_roots(build_graph("affA2"), 4)


def test_inversion_examples():
    g = build_graph("A2")
    assert inversion_set(reduce_word(g, "")) == []
    assert [str(r) for r in inversion_set(reduce_word(g, "1"))] == ["e1"]
    assert len(inversion_set(reduce_word(g, "1 2 1"))) == 3


def test_minors_a2():
    assert [str(m) for m in leading_minors(bilinear_form(build_graph("A2")))] == ["1", "3/4"]
    assert not is_positive_definite(bilinear_form(build_graph("affA2")))


@pytest.mark.parametrize("name", ["A3", "B3", "H3"])
def test_inversion_count_is_length(name):
    g = build_graph(name)
    for w in enumerate_group(g, 100):
        assert len(inversion_set(w)) == w.length


@pytest.mark.parametrize("name", ["A4", "B4", "D4", "F4", "H4", "E6", "E7", "E8", "I2(9)"])
def test_longest_word_length_is_root_count(name):
    g = build_graph(name)
    w = longest_word(g)
    assert len(w) == len(positive_roots(g))


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "A3", "B3", "D4", "H3", "I2(5)", "I2(8)", "A2+B2"])
def test_every_root_has_a_sign(name):
    rs = root_system(build_graph(name))
    assert all(s != 0 for s in rs.signs)
    assert sum(s > 0 for s in rs.signs) == len(rs.roots) // 2


AFF = build_graph("affA2")


@given(st.lists(st.integers(0, 2), max_size=12))
def test_affine_inversions_match_length(w):
    x = reduce_word(AFF, AFF.names(w))
    assert len(inversion_set(x, 14)) == x.length


@given(st.lists(st.integers(0, 2), max_size=8), st.integers(0, 2), st.integers(0, 2))
def test_form_invariance_and_involution(w, a, b):
    g = build_graph("H3")
    x = reduce_word(g, g.names(w))
    ea, eb = Root.simple(g, a), Root.simple(g, b) + Root.simple(g, (b + 1) % 3)
    assert inner_product(act(x, ea), act(x, eb)) == inner_product(ea, eb)
    assert reflect(g, a, reflect(g, a, eb)) == eb


@given(st.lists(st.integers(0, 3), max_size=7), st.lists(st.integers(0, 3), max_size=7))
def test_action_is_multiplicative(u, v):
    g = build_graph("F4")
    x, y = reduce_word(g, g.names(u)), reduce_word(g, g.names(v))
    e = Root.simple(g, 2)
    assert act(x * y, e) == act(x, act(y, e))


def test_random_affine_roots_classify():
    rs = root_system(AFF, 12)
    assert all(s != 0 for s in rs.signs)
    rng = random.Random(3)
    for _ in range(100):
        w = reduce_word(AFF, AFF.names([rng.randrange(3) for _ in range(rng.randrange(13))]))
        for s in range(3):
            act(w, Root.simple(AFF, s)).sign()
