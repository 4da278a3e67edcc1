import json

import pytest
from hypothesis import given, strategies as st

from garside_kit.artin import (
    ArtinSystem,
    braid_permutation,
    braid_structure,
    format_signed,
    garside_structure_of,
    parse_signed,
    pure_braid_generator,
)
from garside_kit.coxeter import build_graph, elements_equal
from garside_kit.errors import BadParameters, NotSpherical, OutOfRange
from garside_kit.garside import word_problem
from garside_kit.presentations import (
    Presentation,
    mcg_graph,
    mcg_presentation,
    mcg_skipped,
    presentation,
    substitute,
    verify_relators,
)

from oracles import braid_perm


def garside_target(n):
    G = braid_structure(n)
    return lambda w: word_problem(G, w)


def test_braid_permutation_examples():
    assert braid_permutation(3, (1, -2, 1)) == (3, 2, 1)
    assert braid_permutation(4, ()) == (1, 2, 3, 4)
    assert braid_permutation(4, pure_braid_generator(4, 1, 3)) == (1, 2, 3, 4)
    with pytest.raises(OutOfRange):
        braid_permutation(3, (3,))


def test_pure_generator_examples():
    assert pure_braid_generator(3, 1, 2) == (1, 1)
    assert pure_braid_generator(3, 1, 3) == (2, 1, 1, -2)
    assert pure_braid_generator(4, 2, 4) == (3, 2, 2, -3)
    with pytest.raises(OutOfRange):
        pure_braid_generator(3, 2, 2)


@given(st.lists(st.sampled_from([1, 2, 3, 4, -1, -2, -3, -4]), max_size=10),
       st.lists(st.sampled_from([1, 2, 3, 4, -1, -2, -3, -4]), max_size=10))
def test_permutation_is_homomorphism(u, v):
    p, q = braid_permutation(5, u), braid_permutation(5, v)
    pq = braid_permutation(5, tuple(u) + tuple(v))
    # (uv)(j) = u(v(j))
    assert pq == tuple(p[q[j] - 1] for j in range(5))
    # the oracle swaps array slots left to right; slot j then holds w(j+1) - 1
    assert tuple(r + 1 for r in braid_perm(5, u)) == p


def test_braid_presentation_n3():
    P = presentation("braid", 3)
    assert P.relators == ((1, 2, 1, -2, -1, -2),)
    assert P.generators == ("s1", "s2")


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_braid_relators_trivial(n):
    P = presentation("braid", n)
    rep = verify_relators(P, garside_target(n))
    assert rep.ok and rep.checked == len(P.relators)
    for r in P.relators:
        assert braid_permutation(n, r) == tuple(range(1, n + 1))


@pytest.mark.parametrize("n, count", [(3, 2), (4, 11), (5, 35)])
def test_pure_braid_relators_trivial(n, count):
    P = presentation("pure_braid", n)
    assert len(P.relators) == count
    assert len(P.generators) == n * (n - 1) // 2
    rep = verify_relators(P, garside_target(n))
    assert rep.ok, rep.failures
    for img in P.images:
        assert braid_permutation(n, img) == tuple(range(1, n + 1))


def test_empty_relator_list_passes():
    P = Presentation(("a",), (), "free group", (), None, 0)
    assert verify_relators(P, lambda w: False).ok


def test_verify_reports_failures():
    P = presentation("braid", 4)
    rep = verify_relators(P, lambda w: len(w) != 4)
    assert not rep.ok and all(isinstance(i, int) for i, _ in rep.failures)
    assert rep.to_dict()["ok"] is False


def test_artin_presentation_relators():
    g = build_graph("B3")
    P = presentation("artin", g)
    G = garside_structure_of(g)
    assert verify_relators(P, lambda w: word_problem(G, w)).ok
    assert len(P.relators) == len(ArtinSystem(g).relators()) == 3


def test_coxeter_presentation_relators():
    g = build_graph("H3")
    P = presentation("coxeter", g)
    for r in P.relators:
        assert elements_equal(g, [g.vertices[abs(x) - 1] for x in r], "")


def test_presentation_json_shape():
    d = presentation("braid", 3).to_dict()
    assert set(d) == {"generators", "relators", "provenance"}
    json.dumps(d)


def test_unknown_kind():
    with pytest.raises(BadParameters):
        presentation("torus", 3)


def test_parse_format_round_trip():
    g = build_graph("D4")
    w = parse_signed(g, "1 -3 4 2")
    assert w == (1, -3, 4, 2)
    assert format_signed(g, w) == "1 -3 4 2"


def test_non_spherical_has_no_structure():
    with pytest.raises(NotSpherical):
        garside_structure_of(build_graph("affA2"))


# -- mapping class groups -------------------------------------------------------


def test_mcg_110_has_no_extras():
    P = mcg_presentation(1, 1, 0)
    assert P.extra_relators == ()
    assert P.graph.rank == 2  # x0 - y1, the braid group on three strands


def test_mcg_100_contains_sixth_power():
    P = mcg_presentation(1, 0, 0)
    x0, y1 = P.generators.index("x0") + 1, P.generators.index("y1") + 1
    assert (x0, y1) * 6 in P.extra_relators


def test_mcg_graph_shapes():
    g = mcg_graph(2, 1, 0)
    assert set(g.vertices) == {"x0", "y1", "y2", "y3", "z"}
    assert g.label("z", "y3") == 3 and g.label("x0", "y1") == 3
    g = mcg_graph(1, 1, 2)
    assert g.label("x1", "v1") == 4


def test_mcg_low_genus_relators_hold_in_known_quotient():
    # Γ(1,1,0) is A2 and all its Artin relators hold in B3
    P = mcg_presentation(1, 1, 0)
    G = braid_structure(3)
    assert verify_relators(P, lambda w: word_problem(G, w)).ok


def test_mcg_skipped_reports_missing_vertices():
    assert mcg_skipped(1, 1, 0) == []
    skipped = mcg_skipped(1, 3, 0)
    assert len(skipped) == 1 and "x3" in skipped[0]


@pytest.mark.parametrize("params", [(1, 0, 0), (2, 0, 0), (2, 1, 0), (1, 2, 0), (2, 2, 1), (1, 0, 3), (3, 1, 0)])
def test_mcg_presentations_are_well_formed(params):
    P = mcg_presentation(*params)
    n = len(P.generators)
    assert P.n_standard <= len(P.relators) == len(P.labels)
    assert all(1 <= abs(x) <= n for r in P.relators for x in r)
    assert P.to_dict()["provenance"].startswith("mapping class group")


def test_mcg_rejects_bad_parameters():
    with pytest.raises(BadParameters):
        mcg_presentation(0, 1, 0)


def test_substitute_identity_without_images():
    P = presentation("braid", 3)
    assert substitute(P, (1, -2)) == (1, -2)
