"""Cohomology of spherical Artin groups from a free resolution indexed by generator subsets.

For ``T ⊆ S`` (listed in construction order, ``T = {s_1 < ... < s_q}``) the
free generator ``E_T`` has boundary

    d E_T = sum_j (-1)^(j-1) sum_u (-1)^lg(u) κ(u) E_{T - s_j}

where ``u`` runs over the elements of ``W_T`` with no right descent in
``T - s_j``.  Trivial coefficients replace every ``κ(u)`` by 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .coxeter import CoxElement, CoxeterGraph, finite_table, identity, is_spherical, reduce_word
from .errors import EnumerationBudgetExceeded, NotSpherical
from .snf import smith_diagonal

Subset = tuple[int, ...]


# -- coset minima ---------------------------------------------------------------


@dataclass(frozen=True)
class CosetDecomposition:
    minimum: CoxElement
    remainder: CoxElement


def coset_minima(graph: CoxeterGraph, T: Iterable, w: CoxElement) -> CosetDecomposition:
    """``w = min_T(w) · π_T(w)`` with lengths adding, by stripping right descents in ``T``."""
    T = {t if isinstance(t, int) else graph.index(t) for t in T}
    u = w
    while True:
        d = [s for s in u.right_descents() if s in T]
        if not d:
            break
        u = u * reduce_word(graph, (graph.vertices[d[0]],))
    return CosetDecomposition(u, u.inverse() * w)


# -- boundary -------------------------------------------------------------------------


def subsets(n: int, q: int) -> list[Subset]:
    return list(itertools.combinations(range(n), q))


def _parabolic(graph: CoxeterGraph, T: Subset, budget: int | None):
    sub = graph.subgraph(T)
    return sub, finite_table(sub, budget)


@dataclass
class BoundaryData:
    """Symbolic and integer boundaries of the resolution."""

    graph: CoxeterGraph
    #: (T, T - s) -> list of (sign, positive word of κ(u) in global vertex indices)
    symbolic: dict
    #: integer matrices d_q : C_q -> C_{q-1}, rows by (q-1)-subsets, columns by q-subsets
    integer: list[list[list[int]]]

    def ranks(self) -> list[int]:
        n = self.graph.rank
        return [len(subsets(n, q)) for q in range(n + 1)]


def boundary_matrices(graph: CoxeterGraph, budget: int | None = None) -> BoundaryData:
    if not is_spherical(graph):
        raise NotSpherical(f"{graph} is not spherical")
    n = graph.rank
    symbolic: dict = {}
    integer: list[list[list[int]]] = [[] for _ in range(n + 1)]
    integer[0] = [[] for _ in range(0)]
    for q in range(1, n + 1):
        rows, cols = subsets(n, q - 1), subsets(n, q)
        rindex = {R: i for i, R in enumerate(rows)}
        M = [[0] * len(cols) for _ in rows]
        for c, T in enumerate(cols):
            sub, table = _parabolic(graph, T, budget)
            for j, s in enumerate(T):
                R = tuple(t for t in T if t != s)
                # local indices of R inside the parabolic subgraph
                rmask = 0
                for k, t in enumerate(T):
                    if t != s:
                        rmask |= 1 << k
                terms = []
                total = 0
                for u in range(table.size):
                    if table.rdesc[u] & rmask:
                        continue
                    sign = -1 if table.length[u] % 2 else 1
                    terms.append((sign, tuple(T[i] for i in table.word(u))))
                    total += sign
                eps = 1 if j % 2 == 0 else -1
                symbolic[(T, R)] = [(eps * sg, w) for sg, w in terms]
                M[rindex[R]][c] = eps * total
        integer[q] = M
    return BoundaryData(graph, symbolic, integer)


def chain_complex(graph: CoxeterGraph, budget: int | None = None) -> list[list[list[int]]]:
    """Integer boundary matrices ``d_1, ..., d_n`` (index ``q`` holds ``d_q``)."""
    return boundary_matrices(graph, budget).integer


@dataclass(frozen=True)
class CohomologyGroup:
    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z_{t}" for t in self.torsion]
        return " x ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def integer_cohomology(graph: CoxeterGraph, budget: int | None = None) -> list[CohomologyGroup]:
    """``H^q(G_Γ, Z)`` for ``q = 0..|S|`` from the transposed boundaries."""
    data = boundary_matrices(graph, budget)
    n = graph.rank
    dims = data.ranks()
    inv = [[] for _ in range(n + 2)]  # invariant factors of d_q
    for q in range(1, n + 1):
        inv[q] = smith_diagonal(data.integer[q])
    out = []
    for q in range(n + 1):
        # δ^q = d_{q+1}^T, δ^{q-1} = d_q^T
        rank_out = len(inv[q + 1]) if q + 1 <= n else 0
        rank_in = len(inv[q]) if q >= 1 else 0
        free = dims[q] - rank_out - rank_in
        torsion = tuple(d for d in inv[q] if d > 1) if q >= 1 else ()
        out.append(CohomologyGroup(free, torsion))
    return out


def format_cohomology(name: str, groups: Sequence[CohomologyGroup]) -> str:
    cells = [str(g) for g in groups]
    width = max(max(len(c) for c in cells), len(f"H^{len(cells) - 1}"))
    header = "  ".join(f"H^{q}".ljust(width) for q in range(len(cells)))
    pad = max(8, len(name) + 2)
    row = "  ".join(c.ljust(width) for c in cells)
    return f"{'':{pad}}{header}".rstrip() + "\n" + f"{name:<{pad}}{row}".rstrip()


# -- verification of d∘d = 0 ------------------------------------------------------------


def _int_compose_zero(A: list[list[int]], B: list[list[int]]) -> bool:
    if not A or not B or not B[0]:
        return True
    for i in range(len(A)):
        for j in range(len(B[0])):
            if sum(A[i][k] * B[k][j] for k in range(len(B))):
                return False
    return True


def verify_resolution(graph: CoxeterGraph, budget: int | None = None, group_ring: bool = True) -> dict:
    """Check ``d∘d = 0`` over Z and, when asked, over the group ring of the Artin group."""
    from .artin import garside_structure_of
    from .garside import monoid_normal_form

    data = boundary_matrices(graph, budget)
    n = graph.rank
    integer_ok = {q: _int_compose_zero(data.integer[q - 1], data.integer[q]) for q in range(2, n + 1)}
    ring_ok: dict = {}
    if group_ring:
        if n > 4:
            raise EnumerationBudgetExceeded("the group-ring check is limited to rank <= 4")
        G = garside_structure_of(graph)

        def key(word):
            e = monoid_normal_form(G, word)
            return (e.delta_power, e.factors)

        for q in range(2, n + 1):
            good = True
            for T in subsets(n, q):
                acc: dict = {}
                for s in T:
                    R = tuple(t for t in T if t != s)
                    for s2 in R:
                        Q = tuple(t for t in R if t != s2)
                        for a, u in data.symbolic[(T, R)]:
                            for b, v in data.symbolic[(R, Q)]:
                                k = (Q, key(u + v))
                                acc[k] = acc.get(k, 0) + a * b
                if any(acc.values()):
                    good = False
                    break
            ring_ok[q] = good
    ok = all(integer_ok.values()) and all(ring_ok.values())
    return {"ok": ok, "integer": integer_ok, "group_ring": ring_ok}


# -- the poset of pairs (T, w) -----------------------------------------------------------


@dataclass
class HatCoxPoset:
    graph: CoxeterGraph
    table: object
    elements: list[tuple[int, int]]  # (subset bitmask, element id)

    def _min_pi(self, mask: int, w: int) -> tuple[int, int]:
        t = self.table
        u = w
        while t.rdesc[u] & mask:
            d = t.rdesc[u] & mask
            s = (d & -d).bit_length() - 1
            u = t.right[s][u]
        return u, t.mul(t.inv[u], w)

    def le(self, a: tuple[int, int], b: tuple[int, int]) -> bool:
        """``(T1, w1) <= (T2, w2)``: ``T1 ⊇ T2``, ``w1 W_T1 = w2 W_T1``, and the
        chamber ``w1`` projects onto the face ``w2 F(T2)`` at ``w2``, i.e.
        ``w1^-1 w2`` is ``T2``-minimal.  At ``w1 = 1`` this is the base-face
        condition ``π_T2(w1) = π_T2(w2)``; the translated form keeps the order
        ``W``-invariant."""
        (T1, w1), (T2, w2) = a, b
        if T2 & ~T1:
            return False
        t = self.table
        if self._min_pi(T1, w1)[0] != self._min_pi(T1, w2)[0]:
            return False
        return not (t.rdesc[t.mul(t.inv[w1], w2)] & T2)

    @staticmethod
    def dimension(a: tuple[int, int]) -> int:
        return bin(a[0]).count("1")

    def act(self, u: int, a: tuple[int, int]) -> tuple[int, int]:
        """``u · (T, w) = (T, uw)``."""
        return (a[0], self.table.mul(u, a[1]))

    def quotient_cells(self) -> dict[int, list[tuple[int, int]]]:
        """One cell ``U_N(T)`` per subset; each collects its ``W``-orbit."""
        cells: dict[int, list] = {}
        for a in self.elements:
            cells.setdefault(a[0], []).append(a)
        return cells

    def two_cell_boundary(self, s: int, t: int) -> tuple[int, ...]:
        """Boundary word of the 2-cell ``({s, t}, 1)`` read from its edge faces.

        Edges ``({r}, u)`` with ``u`` r-minimal run from ``u`` to ``ur`` and
        carry the label ``r``; the boundary is the two monotone edge paths
        from 1 to the longest element of ``W_{s,t}``, as ``path_s · path_t^-1``.
        """
        tab = self.table
        cell = ((1 << s) | (1 << t), tab.id_of(()))
        faces = [a for a in self.elements if self.dimension(a) == 1 and self.le(cell, a)]
        out_edges: dict[int, list[int]] = {}
        for mask, u in faces:
            r = mask.bit_length() - 1
            out_edges.setdefault(u, []).append(r)

        def walk(first: int) -> list[int]:
            path, v, last = [], tab.id_of(()), None
            r = first
            while True:
                path.append(r)
                v = tab.right[r][v]
                last = r
                nxt = [q for q in out_edges.get(v, []) if q != last]
                if not nxt:
                    return path
                r = nxt[0]

        p1 = walk(s)
        p2 = walk(t)
        return tuple(x + 1 for x in p1) + tuple(-(x + 1) for x in reversed(p2))


def hat_cox_poset(graph: CoxeterGraph, budget: int | None = None) -> HatCoxPoset:
    if not is_spherical(graph):
        raise NotSpherical(f"{graph} is not spherical")
    table = finite_table(graph, budget)
    n = graph.rank
    limit = budget if budget is not None else 200_000
    if table.size * (1 << n) > limit:
        raise EnumerationBudgetExceeded(f"{table.size * (1 << n)} pairs exceed the budget of {limit}")
    elements = [(mask, w) for mask in range(1 << n) for w in range(table.size)]
    return HatCoxPoset(graph, table, elements)


# -- abelianization ------------------------------------------------------------------


def abelianization(graph: CoxeterGraph) -> tuple[int, list[int]]:
    """``(rank, torsion)`` of ``G_Γ^ab`` from the abelianized Artin relators."""
    n = graph.rank
    rows = []
    for s in range(n):
        for t in range(s + 1, n):
            m = graph.matrix[s][t]
            if m != float("inf") and m % 2 == 1:
                row = [0] * n
                row[s], row[t] = 1, -1
                rows.append(row)
    inv = smith_diagonal(rows) if rows else []
    return n - len(inv), [d for d in inv if d > 1]


def odd_components(graph: CoxeterGraph) -> int:
    """Connected components of the graph keeping only odd-labelled edges."""
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(range(graph.rank))
    for a, b, m in graph.edges():
        if m != float("inf") and m % 2 == 1:
            g.add_edge(graph.index(a), graph.index(b))
    return nx.number_connected_components(g)
