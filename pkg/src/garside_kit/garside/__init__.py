"""Generic Garside machinery: reversing, normal forms, lattices and conjugacy."""

from __future__ import annotations

from typing import Sequence

from ..config import REVERSING_BUDGET
from .complement import (
    Complement,
    check_coherence,
    complement_left,
    complement_right,
    equivalent_by_reversing,
    free_reduce,
    invert_signed,
    is_trivial_by_reversing,
    join_by_reversing,
    left_reverse_pair,
    meet_by_reversing,
    pos_letters,
    reverse,
    reverse_to_signed,
)
from .conjugacy import (
    SlidingCircuits,
    conjugacy_test,
    cyclic_sliding,
    final_factor,
    in_sliding_circuit,
    initial_factor,
    preferred_prefix,
    sliding_circuits,
    to_circuit,
)
from .elements import (
    GarsideElement,
    conjugate,
    delta_normal_form,
    delta_power,
    from_positive_simples,
    head,
    identity,
    inverse,
    is_trivial,
    lattice_join,
    lattice_meet,
    left_weight,
    monoid_normal_form,
    multiply,
    normal_form_factors,
    simple_element,
    simple_inverse,
    sweep_to_fixpoint,
)
from .structure import CoxeterGarside, GarsideStructure, PermGarside


class RoutesDisagree(AssertionError):
    """The normal-form and reversing answers to the same question differ."""


def word_problem(G: GarsideStructure, word: Sequence[int], budget: int = REVERSING_BUDGET) -> bool:
    """Decide whether a signed atom word is trivial.

    Answers by Δ-normal form and, when ``G`` carries a left complement, also
    by double reversing; the two answers must match.
    """
    by_nf = is_trivial(G, word)
    f = G.left_complement
    if f is not None:
        by_rev = is_trivial_by_reversing(f, word, budget)
        if by_rev != by_nf:
            raise RoutesDisagree(f"normal form says {by_nf}, reversing says {by_rev}")
    return by_nf


def positive_join_by_reversing(G: GarsideStructure, u: Sequence[int], v: Sequence[int]) -> GarsideElement:
    """``u ∨_L v`` for positive words as ``u · C_L(u, v)``."""
    return monoid_normal_form(G, join_by_reversing(G.left_complement, u, v))


def positive_meet_by_reversing(G: GarsideStructure, u: Sequence[int], v: Sequence[int]) -> GarsideElement:
    return monoid_normal_form(G, meet_by_reversing(G.left_complement, G.right_complement, u, v))


def to_dict(x: GarsideElement) -> dict:
    """``{"delta_power": p, "factors": [[...], ...]}`` with 1-based atom numbers."""
    return {"delta_power": x.delta_power, "factors": [[i + 1 for i in w] for w in x.factor_words()]}


__all__ = [
    "Complement",
    "CoxeterGarside",
    "GarsideElement",
    "GarsideStructure",
    "PermGarside",
    "RoutesDisagree",
    "SlidingCircuits",
    "check_coherence",
    "complement_left",
    "complement_right",
    "conjugacy_test",
    "conjugate",
    "cyclic_sliding",
    "delta_normal_form",
    "delta_power",
    "equivalent_by_reversing",
    "final_factor",
    "free_reduce",
    "from_positive_simples",
    "head",
    "identity",
    "in_sliding_circuit",
    "initial_factor",
    "inverse",
    "invert_signed",
    "is_trivial",
    "is_trivial_by_reversing",
    "join_by_reversing",
    "lattice_join",
    "lattice_meet",
    "left_reverse_pair",
    "left_weight",
    "meet_by_reversing",
    "monoid_normal_form",
    "multiply",
    "normal_form_factors",
    "pos_letters",
    "positive_join_by_reversing",
    "positive_meet_by_reversing",
    "preferred_prefix",
    "reverse",
    "reverse_to_signed",
    "simple_element",
    "simple_inverse",
    "sliding_circuits",
    "sweep_to_fixpoint",
    "to_circuit",
    "to_dict",
    "word_problem",
]
