"""Artin systems over Coxeter graphs and braid-group specialisations."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

from .coxeter import INF, CoxElement, CoxeterGraph, finite_table, is_spherical
from .errors import NotSpherical, OutOfRange
from .garside.complement import Complement
from .garside.elements import GarsideElement, monoid_normal_form, simple_element
from .garside.structure import CoxeterGarside, GarsideStructure, PermGarside


def alternating(s: int, t: int, m: int) -> tuple[int, ...]:
    """``prod(s, t : m) = s t s t ...`` with ``m`` letters."""
    return tuple(s if k % 2 == 0 else t for k in range(m))


def artin_complements(graph: CoxeterGraph) -> tuple[Complement, Complement]:
    """Left complement ``f(s, t) = prod(t, s : m-1)`` and right complement
    ``g(s, t) = rev(f(t, s))``; pairs with label ``inf`` are left undefined."""
    n = graph.rank
    f: dict[tuple[int, int], tuple[int, ...]] = {}
    for s in range(n):
        for t in range(n):
            if s == t:
                continue
            m = graph.matrix[s][t]
            if m == INF:
                continue
            f[(s, t)] = alternating(t, s, m - 1)
    g = {(s, t): tuple(reversed(f[(t, s)])) for (s, t) in f}
    return Complement(n, f), Complement(n, g)


@dataclass(frozen=True)
class ArtinSystem:
    graph: CoxeterGraph

    @property
    def atoms(self) -> tuple[str, ...]:
        return self.graph.vertices

    @property
    def complements(self) -> tuple[Complement, Complement]:
        return _complements(self.graph)

    def relators(self) -> list[tuple[int, ...]]:
        """Signed relators ``prod(s,t:m) prod(t,s:m)^-1`` for finite labels."""
        out = []
        n = self.graph.rank
        for s in range(n):
            for t in range(s + 1, n):
                m = self.graph.matrix[s][t]
                if m == INF:
                    continue
                lhs = tuple(x + 1 for x in alternating(s, t, m))
                rhs = tuple(-(x + 1) for x in reversed(alternating(t, s, m)))
                out.append(lhs + rhs)
        return out


_LOCK = threading.RLock()
_COMPLEMENTS: dict[CoxeterGraph, tuple[Complement, Complement]] = {}
_STRUCTURES: dict[tuple[CoxeterGraph, str], GarsideStructure] = {}


def _complements(graph: CoxeterGraph) -> tuple[Complement, Complement]:
    with _LOCK:
        c = _COMPLEMENTS.get(graph)
        if c is None:
            c = _COMPLEMENTS[graph] = artin_complements(graph)
        return c


def is_type_a_path(graph: CoxeterGraph) -> bool:
    """The graph is ``A_n`` with vertices numbered along the path."""
    n = graph.rank
    return all(
        graph.matrix[i][j] == (3 if abs(i - j) == 1 else 1 if i == j else 2) for i in range(n) for j in range(n)
    )


def garside_structure_of(graph: CoxeterGraph, backend: str = "auto", budget: int | None = None) -> GarsideStructure:
    """The Garside structure of the Artin monoid of a spherical graph.

    ``backend="perm"`` uses permutation braids (type A only, no enumeration),
    ``"table"`` the Coxeter group tables; ``"auto"`` prefers permutations.
    """
    if not is_spherical(graph):
        raise NotSpherical(f"{graph} is not of spherical type")
    if backend == "auto":
        backend = "perm" if is_type_a_path(graph) else "table"
    if backend == "perm" and not is_type_a_path(graph):
        raise ValueError("the permutation backend needs a type A path graph")
    key = (graph, backend)
    with _LOCK:
        G = _STRUCTURES.get(key)
        if G is None:
            f, g = _complements(graph)
            if backend == "perm":
                G = PermGarside(graph.rank + 1, f, g)
            else:
                G = CoxeterGarside(finite_table(graph, budget), f, g)
            G.graph = graph
            _STRUCTURES[key] = G
        return G


def kappa(w: CoxElement, backend: str = "auto") -> GarsideElement:
    """``κ(w)``: the simple element read off a reduced word of ``w``."""
    G = garside_structure_of(w.graph, backend)
    return simple_element(G, G.simple_from_word(w.letters))


def head_delta(G: GarsideStructure, word: Sequence[int]):
    """``δ(α)`` by a right-to-left pass of ``δ(x·β) = δ(x·δ(β))``.

    The two-simple base case ``δ(x·h)`` is the first factor of the
    left-weighted pair, ``x·(∂_R(x) ∧_L h)``.
    """
    h = G.identity
    for i in reversed(word):
        x = G.atom(i)
        c = G.meet_left(G.d_right(x), h)
        h = G.mul(x, c)
    return h


def parse_signed(graph: CoxeterGraph, text) -> tuple[int, ...]:
    """``"1 2 -1"`` (vertex names, ``-`` for inverses) to signed indices."""
    tokens = text.split() if isinstance(text, str) else list(text)
    out = []
    for tok in tokens:
        tok = str(tok)
        if tok.startswith("-"):
            out.append(-(graph.index(tok[1:]) + 1))
        else:
            out.append(graph.index(tok) + 1)
    return tuple(out)


def format_signed(graph: CoxeterGraph, word: Sequence[int]) -> str:
    return " ".join(("-" if x < 0 else "") + graph.vertices[abs(x) - 1] for x in word)


# -- braid groups -----------------------------------------------------------


def _check_braid_letters(n: int, word: Sequence[int]) -> None:
    for x in word:
        if x == 0 or abs(x) > n - 1:
            raise OutOfRange(f"letter {x} is not a generator of B_{n}")


def braid_permutation(n: int, word: Sequence[int]) -> tuple[int, ...]:
    """Image of a braid word under ``σ_k -> (k, k+1)``, as ``(w(1), ..., w(n))``."""
    _check_braid_letters(n, word)
    perm = list(range(1, n + 1))
    # (uv)(j) = u(v(j)): apply letters right to left
    for x in reversed(word):
        k = abs(x)
        perm = [k + 1 if p == k else k if p == k + 1 else p for p in perm]
    return tuple(perm)


def pure_braid_generator(n: int, k: int, l: int) -> tuple[int, ...]:
    """``δ_kl = σ_{l-1}...σ_{k+1} σ_k^2 σ_{k+1}^-1...σ_{l-1}^-1``."""
    if not 1 <= k < l <= n:
        raise OutOfRange(f"need 1 <= k < l <= n, got k={k}, l={l}, n={n}")
    up = tuple(range(l - 1, k, -1))
    return up + (k, k) + tuple(-x for x in reversed(up))


def braid_structure(n: int, backend: str = "auto") -> GarsideStructure:
    """Garside structure of ``B_n`` (type ``A_{n-1}``)."""
    from .coxeter import build_graph

    if n < 2:
        raise OutOfRange("braid groups need at least 2 strands")
    return garside_structure_of(build_graph(f"A{n - 1}"), backend)


def braid_element(n: int, word: Sequence[int], backend: str = "auto") -> GarsideElement:
    from .garside.elements import delta_normal_form

    _check_braid_letters(n, word)
    return delta_normal_form(braid_structure(n, backend), word)


def monoid_element(G: GarsideStructure, word: Sequence[int]) -> GarsideElement:
    return monoid_normal_form(G, word)
