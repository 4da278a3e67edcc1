"""Coxeter graphs and Coxeter group elements.

Elements are stored as their ShortLex-least reduced word, with letters encoded
as vertex indices in construction order.  Three engines compute that word:

* ``"tits"``: orbit saturation under braid moves plus ``ss`` deletion;
* ``"roots"``: descent detection through the reflection representation, valid
  for every Coxeter graph;
* ``"table"``: precomputed multiplication tables of a finite group.

``"auto"`` picks the table for spherical graphs and the root engine otherwise.
"""

from __future__ import annotations

import json
import math
import re
import threading
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .config import enumeration_budget
from .errors import (
    BadParameter,
    EnumerationBudgetExceeded,
    GraphMismatch,
    LetterNotInGraph,
    MalformedSpec,
    NotSpherical,
    UnknownBuiltin,
)

INF = math.inf


def _fmt_label(m) -> object:
    return "inf" if m == INF else int(m)


@dataclass(frozen=True)
class CoxeterGraph:
    """Ordered vertex names with a symmetric Coxeter matrix (``inf`` allowed)."""

    vertices: tuple[str, ...]
    matrix: tuple[tuple, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise MalformedSpec("duplicate vertex names")
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise MalformedSpec("matrix shape does not match vertex count")
        for i in range(n):
            if self.matrix[i][i] != 1:
                raise MalformedSpec(f"diagonal entry at {self.vertices[i]!r} must be 1")
            for j in range(n):
                m = self.matrix[i][j]
                if m != self.matrix[j][i]:
                    raise MalformedSpec("labels must be symmetric")
                if i != j and not (m == INF or (isinstance(m, int) and m >= 2)):
                    raise MalformedSpec(f"invalid label {m!r}")

    @classmethod
    def from_edges(cls, vertices: Sequence[str], edges: Iterable[tuple], name: str | None = None) -> "CoxeterGraph":
        """Build from labelled edges; missing pairs get label 2."""
        vertices = tuple(str(v) for v in vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        n = len(vertices)
        mat = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        seen = set()
        for edge in edges:
            if len(edge) != 3:
                raise MalformedSpec(f"edge {edge!r} must be [u, v, label]")
            a, b, m = str(edge[0]), str(edge[1]), _parse_label(edge[2])
            if a not in pos or b not in pos:
                raise MalformedSpec(f"edge {edge!r} names an unknown vertex")
            i, j = pos[a], pos[b]
            if i == j:
                raise MalformedSpec("self-loops are not allowed")
            key = frozenset((i, j))
            if key in seen and mat[i][j] != m:
                raise MalformedSpec(f"conflicting labels for {a}-{b}")
            seen.add(key)
            mat[i][j] = mat[j][i] = m
        return cls(vertices, tuple(tuple(r) for r in mat), name)

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def index(self, vertex) -> int:
        try:
            return self._positions[str(vertex)]
        except KeyError:
            raise LetterNotInGraph(f"{vertex!r} is not a vertex") from None

    @property
    def _positions(self) -> dict[str, int]:
        pos = self.__dict__.get("_pos")
        if pos is None:
            pos = {v: i for i, v in enumerate(self.vertices)}
            object.__setattr__(self, "_pos", pos)
        return pos

    def label(self, s, t):
        return self.matrix[self.index(s)][self.index(t)]

    def edges(self) -> list[tuple[str, str, object]]:
        n = self.rank
        return [
            (self.vertices[i], self.vertices[j], self.matrix[i][j])
            for i in range(n)
            for j in range(i + 1, n)
            if self.matrix[i][j] != 2
        ]

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(self.rank) if j != i and self.matrix[i][j] != 2]

    def components(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        comps = []
        for start in range(self.rank):
            if start in seen:
                continue
            comp, stack = [], [start]
            seen.add(start)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in self.neighbours(i):
                    if j not in seen:
                        seen.add(j)
                        stack.append(j)
            comps.append(tuple(sorted(comp)))
        return comps

    def subgraph(self, indices: Iterable[int]) -> "CoxeterGraph":
        idx = sorted(set(indices))
        return CoxeterGraph(
            tuple(self.vertices[i] for i in idx),
            tuple(tuple(self.matrix[i][j] for j in idx) for i in idx),
        )

    def parse_word(self, word) -> tuple[int, ...]:
        """Vertex indices of a word given as text or a sequence of names."""
        if isinstance(word, str):
            word = word.split()
        return tuple(self.index(x) for x in word)

    def names(self, letters: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in letters)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [[a, b, _fmt_label(m)] for a, b, m in self.edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        return self.name or self.to_json()


def _parse_label(m):
    if isinstance(m, str):
        if m.strip().lower() in ("inf", "infinity", "∞"):
            return INF
        try:
            m = int(m)
        except ValueError:
            raise MalformedSpec(f"invalid label {m!r}") from None
    if isinstance(m, float) and m == INF:
        return INF
    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise MalformedSpec(f"invalid label {m!r}")
    return m


# -- builtins -------------------------------------------------------------


def _path(n: int, labels: dict[int, int] | None = None, name=None) -> CoxeterGraph:
    labels = labels or {}
    verts = [str(i + 1) for i in range(n)]
    edges = [(verts[i], verts[i + 1], labels.get(i, 3)) for i in range(n - 1)]
    return CoxeterGraph.from_edges(verts, edges, name)


def _builtin_one(text: str) -> CoxeterGraph:
    m = re.fullmatch(r"I2\((\d+)\)", text)
    if m:
        p = int(m.group(1))
        if p < 5:
            raise BadParameter(f"I2(p) needs p >= 5 (use A1+A1, A2 or B2 for p = 2, 3, 4); got {p}")
        return _path(2, {0: p}, text)
    m = re.fullmatch(r"(affA|A|B|D|E|F|H)(\d+)", text)
    if not m:
        raise UnknownBuiltin(f"unknown builtin graph {text!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "A":
        if n < 1:
            raise BadParameter("A_n needs n >= 1")
        return _path(n, name=text)
    if kind == "B":
        if n < 2:
            raise BadParameter("B_n needs n >= 2")
        return _path(n, {0: 4}, text)
    if kind == "D":
        if n < 4:
            raise BadParameter("D_n needs n >= 4")
        verts = [str(i + 1) for i in range(n)]
        # vertices 1 and 2 both attach to 3, then a path 3-4-...-n
        edges = [("1", "3", 3), ("2", "3", 3)] + [(verts[i], verts[i + 1], 3) for i in range(2, n - 1)]
        return CoxeterGraph.from_edges(verts, edges, text)
    if kind == "E":
        if n not in (6, 7, 8):
            raise BadParameter("E_n needs n in {6, 7, 8}")
        verts = [str(i + 1) for i in range(n)]
        # Bourbaki numbering: 1-3-4-5-...-n with 2 attached to 4
        edges = [("1", "3", 3), ("2", "4", 3)] + [(verts[i], verts[i + 1], 3) for i in range(2, n - 1)]
        return CoxeterGraph.from_edges(verts, edges, text)
    if kind == "F":
        if n != 4:
            raise BadParameter("F_n exists only for n = 4")
        return _path(4, {1: 4}, text)
    if kind == "H":
        if n not in (3, 4):
            raise BadParameter("H_n needs n in {3, 4}")
        return _path(n, {0: 5}, text)
    # affine A: (n+1)-cycle
    if n < 1:
        raise BadParameter("affine A_n needs n >= 1")
    verts = [str(i + 1) for i in range(n + 1)]
    if n == 1:
        return CoxeterGraph.from_edges(verts, [("1", "2", "inf")], text)
    edges = [(verts[i], verts[(i + 1) % (n + 1)], 3) for i in range(n + 1)]
    return CoxeterGraph.from_edges(verts, edges, text)


def disjoint_union(*graphs: CoxeterGraph) -> CoxeterGraph:
    """Union with vertices renumbered ``1..N`` when names would collide."""
    names = [v for g in graphs for v in g.vertices]
    rename = len(set(names)) != len(names)
    verts: list[str] = []
    edges: list[tuple] = []
    for g in graphs:
        mapping = {v: (str(len(verts) + i + 1) if rename else v) for i, v in enumerate(g.vertices)}
        verts.extend(mapping[v] for v in g.vertices)
        edges.extend((mapping[a], mapping[b], m) for a, b, m in g.edges())
    name = "+".join(g.name or "?" for g in graphs) if all(g.name for g in graphs) else None
    return CoxeterGraph.from_edges(verts, edges, name)


def build_graph(spec) -> CoxeterGraph:
    """Graph from a builtin name (``A3``, ``I2(7)``, ``affA2``, ``A2+H3``),
    a dict ``{"vertices": [...], "edges": [[u, v, m], ...]}`` or its JSON text."""
    if isinstance(spec, CoxeterGraph):
        return spec
    if isinstance(spec, dict):
        if "vertices" not in spec:
            raise MalformedSpec("graph spec needs a 'vertices' list")
        return CoxeterGraph.from_edges(spec["vertices"], spec.get("edges", []))
    if not isinstance(spec, str):
        raise MalformedSpec(f"cannot build a graph from {type(spec).__name__}")
    text = spec.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedSpec(f"invalid graph JSON: {exc}") from None
        return build_graph(data)
    parts = [p.strip() for p in text.split("+")]
    graphs = [_builtin_one(p) for p in parts]
    return graphs[0] if len(graphs) == 1 else disjoint_union(*graphs)


# -- classification -------------------------------------------------------


def _component_type(g: CoxeterGraph, comp: tuple[int, ...]) -> str | None:
    n = len(comp)
    if n == 1:
        return "A1"
    edges = [(i, j, g.matrix[i][j]) for k, i in enumerate(comp) for j in comp[k + 1 :] if g.matrix[i][j] != 2]
    if any(m == INF for _, _, m in edges) or len(edges) != n - 1:
        return None  # infinite label, or a cycle
    deg = {i: 0 for i in comp}
    for i, j, _ in edges:
        deg[i] += 1
        deg[j] += 1
    heavy = [(i, j, m) for i, j, m in edges if m > 3]
    if n == 2:
        m = edges[0][2]
        return {3: "A2", 4: "B2", 6: "G2"}.get(m, f"I2({m})")
    branch = [i for i in comp if deg[i] >= 3]
    if not heavy:
        if not branch:
            return f"A{n}"
        if len(branch) > 1 or deg[branch[0]] > 3:
            return None
        c = branch[0]
        arms = []
        for start in g.neighbours(c):
            length, prev, cur = 1, c, start
            while True:
                nxt = [j for j in g.neighbours(cur) if j != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return f"D{n}"
        if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            return f"E{n}"
        return None
    if len(heavy) > 1 or branch:
        return None
    i, j, m = heavy[0]
    at_end = deg[i] == 1 or deg[j] == 1
    if m == 4:
        if at_end:
            return f"B{n}"
        return "F4" if n == 4 else None
    if m == 5 and at_end and n in (3, 4):
        return f"H{n}"
    return None


def classify(graph: CoxeterGraph) -> list[str | None]:
    """Type name of each connected component (``None`` if not spherical)."""
    return [_component_type(graph, c) for c in graph.components()]


def is_spherical(graph: CoxeterGraph) -> bool:
    """True iff every component is one of the finite Coxeter types."""
    return all(t is not None for t in classify(graph))


# -- elements -------------------------------------------------------------


@dataclass(frozen=True)
class CoxElement:
    """Element of ``W_graph`` stored as its ShortLex-least reduced word."""

    graph: CoxeterGraph
    letters: tuple[int, ...]

    @property
    def canonical(self) -> tuple[str, ...]:
        return self.graph.names(self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __mul__(self, other: "CoxElement") -> "CoxElement":
        _same_graph(self, other)
        return _element(self.graph, self.letters + other.letters)

    def inverse(self) -> "CoxElement":
        return _element(self.graph, self.letters[::-1])

    def left_descents(self) -> list[int]:
        return [s for s in range(self.graph.rank) if _element(self.graph, (s,) + self.letters).length < self.length]

    def right_descents(self) -> list[int]:
        return [s for s in range(self.graph.rank) if _element(self.graph, self.letters + (s,)).length < self.length]

    def __str__(self) -> str:
        return " ".join(self.canonical) if self.letters else "ε"


def _same_graph(u: CoxElement, v: CoxElement) -> None:
    if u.graph != v.graph:
        raise GraphMismatch("elements live over different graphs")


def identity(graph: CoxeterGraph) -> CoxElement:
    return CoxElement(graph, ())


def _element(graph: CoxeterGraph, letters: tuple[int, ...]) -> CoxElement:
    return CoxElement(graph, canonical_letters(graph, letters))


def canonical_letters(graph: CoxeterGraph, letters: Sequence[int], method: str = "auto") -> tuple[int, ...]:
    if method == "auto":
        method = "table" if _finite_ok(graph) else "roots"
    if method == "table":
        t = finite_table(graph)
        return t.word(t.id_of(letters))
    if method == "roots":
        return _canonical_by_roots(graph, letters)
    if method == "tits":
        return _canonical_by_tits(graph, tuple(letters))
    raise ValueError(f"unknown method {method!r}")


def reduce_word(graph: CoxeterGraph, word, method: str = "auto") -> CoxElement:
    """The element represented by ``word`` (text or sequence of vertex names)."""
    return CoxElement(graph, canonical_letters(graph, graph.parse_word(word), method))


def elements_equal(graph: CoxeterGraph, u, v, method: str = "auto") -> bool:
    return reduce_word(graph, u, method).letters == reduce_word(graph, v, method).letters


# -- Tits engine ----------------------------------------------------------


def _alt(s: int, t: int, m: int) -> tuple[int, ...]:
    return tuple(s if k % 2 == 0 else t for k in range(m))


def _braid_moves(graph: CoxeterGraph, word: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    n = len(word)
    for i in range(n - 1):
        s, t = word[i], word[i + 1]
        if s == t:
            continue
        m = graph.matrix[s][t]
        if m == INF or i + m > n:
            continue
        if word[i : i + m] == _alt(s, t, m):
            yield word[:i] + _alt(t, s, m) + word[i + m :]


def _canonical_by_tits(graph: CoxeterGraph, word: tuple[int, ...]) -> tuple[int, ...]:
    while True:
        orbit = {word}
        queue = deque([word])
        deleted = None
        while queue and deleted is None:
            w = queue.popleft()
            for i in range(len(w) - 1):
                if w[i] == w[i + 1]:
                    deleted = w[:i] + w[i + 2 :]
                    break
            if deleted is not None:
                break
            for nxt in _braid_moves(graph, w):
                if nxt not in orbit:
                    orbit.add(nxt)
                    queue.append(nxt)
        if deleted is None:
            return min(orbit)
        word = deleted


# -- root engine ----------------------------------------------------------


def _canonical_by_roots(graph: CoxeterGraph, letters: Sequence[int]) -> tuple[int, ...]:
    """ShortLex word by repeatedly stripping the least left descent.

    ``s`` is a left descent of ``w`` iff ``w^-1(e_s)`` is negative.  The vectors
    ``w^-1(e_t)`` are maintained under ``w -> s w`` by the linear update
    ``(sw)^-1(e_t) = w^-1(e_t) - 2<e_t, e_s> w^-1(e_s)``.
    """
    from .roots import reflection_data

    rd = reflection_data(graph)
    n = graph.rank
    vecs = [rd.simple(t) for t in range(n)]
    for letter in letters:
        vecs = [rd.reflect_coords(letter, v) for v in vecs]
    out: list[int] = []
    while True:
        for s in range(n):
            if rd.is_negative(vecs[s]):
                break
        else:
            return tuple(out)
        out.append(s)
        vs = vecs[s]
        vecs = [
            v if rd.twice_form[t][s].is_zero() else tuple(a - rd.twice_form[t][s] * b for a, b in zip(v, vs))
            for t, v in enumerate(vecs)
        ]


# -- finite tables --------------------------------------------------------


class FiniteTable:
    """Multiplication and descent tables of a finite Coxeter group.

    Elements are integers; ``0`` is the identity.  ``left[s][w]`` is ``s*w`` and
    ``right[s][w]`` is ``w*s``.  ``first[w]`` is the least left descent and
    ``parent[w] = first[w] * w``, so canonical words unwind along parents.
    """

    def __init__(self, graph: CoxeterGraph, budget: int):
        from .roots import root_system

        self.graph = graph
        n = graph.rank
        rs = root_system(graph)
        perm = rs.perm
        start = tuple(rs.simple_index)
        keys = [start]
        ids = {start: 0}
        length = [0]
        first = [-1]
        parent = [-1]
        left: list[list[int]] = [[] for _ in range(n)]
        level_start, level_end = 0, 1
        while level_start < level_end:
            for w in range(level_start, level_end):
                key = keys[w]
                lw = length[w]
                for s in range(n):
                    ps = perm[s]
                    nk = tuple(ps[k] for k in key)
                    x = ids.get(nk)
                    if x is None:
                        x = len(keys)
                        if x >= budget:
                            raise EnumerationBudgetExceeded(
                                f"group of {graph} exceeds the enumeration budget of {budget}"
                            )
                        ids[nk] = x
                        keys.append(nk)
                        length.append(lw + 1)
                        first.append(s)
                        parent.append(w)
                    elif length[x] == lw + 1 and s < first[x]:
                        first[x] = s
                        parent[x] = w
                    left[s].append(x)
            level_start, level_end = level_end, len(keys)
        self.size = len(keys)
        self.length = length
        self.first = first
        self.parent = parent
        self.left = left
        self.keys = keys
        self.neg = rs.negative_flags
        self._words: list[tuple[int, ...] | None] = [None] * self.size
        self._words[0] = ()
        inv = [0] * self.size
        for w in range(self.size):
            x = 0
            for s in self.word(w):
                x = left[s][x]
            inv[w] = x
        self.inv = inv
        self.right = [[inv[left[s][inv[w]]] for w in range(self.size)] for s in range(n)]
        self.rdesc = [0] * self.size
        self.ldesc = [0] * self.size
        for w in range(self.size):
            lw = length[w]
            r = l_ = 0
            for s in range(n):
                if self.right[s][w] < self.size and length[self.right[s][w]] < lw:
                    r |= 1 << s
                if length[left[s][w]] < lw:
                    l_ |= 1 << s
            self.rdesc[w] = r
            self.ldesc[w] = l_
        self.w0 = max(range(self.size), key=length.__getitem__)
        self.full = (1 << n) - 1
        self._w0_left: list[int] | None = None
        self._w0_right: list[int] | None = None

    def word(self, w: int) -> tuple[int, ...]:
        cached = self._words[w]
        if cached is not None:
            return cached
        out = []
        x = w
        while x:
            out.append(self.first[x])
            x = self.parent[x]
        word = tuple(out)
        self._words[w] = word
        return word

    def id_of(self, letters: Iterable[int]) -> int:
        x = 0
        for s in letters:
            x = self.right[s][x]
        return x

    def mul(self, u: int, v: int) -> int:
        for s in self.word(v):
            u = self.right[s][u]
        return u

    def w0_times(self, w: int) -> int:
        if self._w0_left is None:
            self._w0_left = [self.mul(self.w0, x) for x in range(self.size)]
        return self._w0_left[w]

    def times_w0(self, w: int) -> int:
        if self._w0_right is None:
            self._w0_right = [self.mul(x, self.w0) for x in range(self.size)]
        return self._w0_right[w]

    def meet_left(self, u: int, v: int) -> int:
        """Greatest common prefix in the left weak order."""
        r = 0
        while True:
            common = self.ldesc[u] & self.ldesc[v]
            if not common:
                return r
            s = (common & -common).bit_length() - 1
            u = self.left[s][u]
            v = self.left[s][v]
            r = self.right[s][r]

    def join_left(self, u: int, v: int) -> int:
        # x -> w0 x reverses the left weak order
        return self.w0_times(self.meet_left(self.w0_times(u), self.w0_times(v)))

    def meet_right(self, u: int, v: int) -> int:
        inv = self.inv
        return inv[self.meet_left(inv[u], inv[v])]

    def join_right(self, u: int, v: int) -> int:
        inv = self.inv
        return inv[self.join_left(inv[u], inv[v])]

    def le_left(self, u: int, v: int) -> bool:
        return self.length[u] + self.length[self.mul(self.inv[u], v)] == self.length[v]


_TABLES: dict[CoxeterGraph, FiniteTable] = {}
_TABLE_LOCK = threading.RLock()


def _finite_ok(graph: CoxeterGraph) -> bool:
    return is_spherical(graph)


def finite_table(graph: CoxeterGraph, budget: int | None = None) -> FiniteTable:
    """Cached tables for a spherical graph (built once, then shared read-only).

    The budget is checked against the group order even on a cache hit, so the
    outcome does not depend on what was computed earlier.
    """
    table = _TABLES.get(graph)
    if table is not None:
        cap = enumeration_budget(budget)
        if table.size > cap:
            raise EnumerationBudgetExceeded(f"{graph} has {table.size} elements, budget is {cap}")
        return table
    if not is_spherical(graph):
        raise NotSpherical(f"{graph} is not of spherical type")
    with _TABLE_LOCK:
        table = _TABLES.get(graph)
        if table is None:
            table = FiniteTable(graph, enumeration_budget(budget))
            _TABLES[graph] = table
    return table


# -- weak order -----------------------------------------------------------


def le_left(u: CoxElement, v: CoxElement) -> bool:
    """``u <=_L v``: ``u`` is a prefix of a reduced word of ``v``."""
    _same_graph(u, v)
    return u.length + (u.inverse() * v).length == v.length


def weak_order_meet(u: CoxElement, v: CoxElement, side: str = "L") -> CoxElement:
    """Meet in the left (prefix) or right (suffix) weak order."""
    _same_graph(u, v)
    if side == "R":
        return weak_order_meet(u.inverse(), v.inverse(), "L").inverse()
    g = u.graph
    if _finite_ok(g):
        t = finite_table(g)
        return CoxElement(g, t.word(t.meet_left(t.id_of(u.letters), t.id_of(v.letters))))
    prefix: list[int] = []
    while True:
        common = sorted(set(u.left_descents()) & set(v.left_descents()))
        if not common:
            return _element(g, tuple(prefix))
        s = common[0]
        prefix.append(s)
        u = _element(g, (s,) + u.letters)
        v = _element(g, (s,) + v.letters)


def weak_order_join(u: CoxElement, v: CoxElement, side: str = "L", budget: int | None = None) -> CoxElement:
    """Join in the weak order; only available for finite groups."""
    _same_graph(u, v)
    if side == "R":
        return weak_order_join(u.inverse(), v.inverse(), "L", budget).inverse()
    g = u.graph
    if not is_spherical(g):
        raise NotSpherical("joins are only computed for spherical graphs")
    t = finite_table(g, budget)
    return CoxElement(g, t.word(t.join_left(t.id_of(u.letters), t.id_of(v.letters))))


def longest_element(graph: CoxeterGraph) -> CoxElement:
    """The longest element, grown greedily from the identity."""
    if not is_spherical(graph):
        raise NotSpherical(f"{graph} has no longest element")
    w = identity(graph)
    while True:
        for s in range(graph.rank):
            nxt = _element(graph, w.letters + (s,))
            if nxt.length > w.length:
                w = nxt
                break
        else:
            break
    n = graph.rank
    assert len(w.left_descents()) == n and len(w.right_descents()) == n
    return w


def enumerate_group(graph: CoxeterGraph, max_length: int, budget: int | None = None) -> list[CoxElement]:
    """All elements of length at most ``max_length``, in BFS (ShortLex) order."""
    cap = enumeration_budget(budget)
    if _finite_ok(graph):
        t = finite_table(graph, budget)
        ids = sorted((x for x in range(t.size) if t.length[x] <= max_length), key=lambda x: (t.length[x], t.word(x)))
        return [CoxElement(graph, t.word(x)) for x in ids]
    seen = {()}
    level = [()]
    out = [identity(graph)]
    for _ in range(max_length):
        nxt_level = []
        for w in level:
            for s in range(graph.rank):
                x = _canonical_by_roots(graph, w + (s,))
                if len(x) == len(w) + 1 and x not in seen:
                    seen.add(x)
                    nxt_level.append(x)
                    if len(seen) > cap:
                        raise EnumerationBudgetExceeded(f"more than {cap} elements")
        nxt_level.sort()
        out.extend(CoxElement(graph, x) for x in nxt_level)
        level = nxt_level
        if not level:
            break
    return out
