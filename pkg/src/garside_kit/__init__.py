"""Exact computation in Coxeter groups, Artin groups and Garside groups."""

from .errors import GarsideKitError
from .coxeter import (
    CoxElement,
    CoxeterGraph,
    build_graph,
    elements_equal,
    enumerate_group,
    is_spherical,
    longest_element,
    reduce_word,
    weak_order_join,
    weak_order_meet,
)

__all__ = [
    "CoxElement",
    "CoxeterGraph",
    "GarsideKitError",
    "build_graph",
    "elements_equal",
    "enumerate_group",
    "is_spherical",
    "longest_element",
    "reduce_word",
    "weak_order_join",
    "weak_order_meet",
]

__version__ = "0.1.0"
