"""Canonical bilinear form, reflection representation and root systems.

Coordinates are exact elements of Q(2cos(pi/L)) where L is twice the lcm of
the finite labels of the graph, so every entry ``-cos(pi/m)`` of the form lives
in one field.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .config import ROOT_DEPTH
from .coxeter import INF, CoxElement, CoxeterGraph, is_spherical
from .cyclo import CycloReal, RealCyclotomicField
from .errors import GraphMismatch, MixedSignRoot, NotSpherical


def field_for(graph: CoxeterGraph) -> RealCyclotomicField:
    labels = [m for row in graph.matrix for m in row if m != INF and m > 1]
    lcm = reduce(lambda a, b: a * b // math.gcd(a, b), labels, 1)
    return RealCyclotomicField(2 * lcm)


def bilinear_form(graph: CoxeterGraph) -> tuple[tuple[CycloReal, ...], ...]:
    """Matrix of the canonical form in the simple-root basis."""
    K = field_for(graph)
    n = graph.rank
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            m = graph.matrix[i][j]
            if i == j:
                row.append(K.one)
            elif m == INF:
                row.append(-K.one)
            else:
                row.append(-K.cos_pi_over(m))
        rows.append(tuple(row))
    return tuple(rows)


class ReflectionData:
    """Per-graph constants for reflecting coordinate tuples."""

    def __init__(self, graph: CoxeterGraph):
        self.graph = graph
        self.field = field_for(graph)
        self.form = bilinear_form(graph)
        self.twice_form = tuple(tuple(x * 2 for x in row) for row in self.form)
        self._simple = tuple(
            tuple(self.field.one if i == j else self.field.zero for j in range(graph.rank)) for i in range(graph.rank)
        )

    def simple(self, s: int) -> tuple[CycloReal, ...]:
        return self._simple[s]

    def pairing2(self, x: Sequence[CycloReal], s: int) -> CycloReal:
        """``2<x, e_s>``."""
        acc = self.field.zero
        col = self.twice_form
        for t, c in enumerate(x):
            if not c.is_zero() and not col[t][s].is_zero():
                acc = acc + c * col[t][s]
        return acc

    def reflect_coords(self, s: int, x: Sequence[CycloReal]) -> tuple[CycloReal, ...]:
        c = self.pairing2(x, s)
        if c.is_zero():
            return tuple(x)
        out = list(x)
        out[s] = out[s] - c
        return tuple(out)

    def inner(self, x: Sequence[CycloReal], y: Sequence[CycloReal]) -> CycloReal:
        acc = self.field.zero
        for i, a in enumerate(x):
            if a.is_zero():
                continue
            for j, b in enumerate(y):
                if not b.is_zero() and not self.form[i][j].is_zero():
                    acc = acc + a * b * self.form[i][j]
        return acc

    def sign_of(self, x: Sequence[CycloReal]) -> int:
        """+1 / -1 for a positive / negative vector; raises on mixed signs."""
        signs = {c.sign() for c in x} - {0}
        if signs == {1}:
            return 1
        if signs == {-1}:
            return -1
        raise MixedSignRoot(f"vector {tuple(str(c) for c in x)} is neither positive nor negative")

    def is_negative(self, x: Sequence[CycloReal]) -> bool:
        for c in x:
            sg = c.sign()
            if sg:
                return sg < 0
        return False


_CACHE_LOCK = threading.RLock()
_REFLECTION: dict[CoxeterGraph, ReflectionData] = {}
_SYSTEMS: dict[CoxeterGraph, "RootSystem"] = {}


def reflection_data(graph: CoxeterGraph) -> ReflectionData:
    rd = _REFLECTION.get(graph)
    if rd is None:
        with _CACHE_LOCK:
            rd = _REFLECTION.get(graph)
            if rd is None:
                rd = _REFLECTION[graph] = ReflectionData(graph)
    return rd


@dataclass(frozen=True)
class Root:
    """A vector of the reflection representation in the simple-root basis."""

    graph: CoxeterGraph
    coords: tuple[CycloReal, ...]

    @classmethod
    def simple(cls, graph: CoxeterGraph, s) -> "Root":
        i = s if isinstance(s, int) else graph.index(s)
        return cls(graph, reflection_data(graph).simple(i))

    @classmethod
    def from_values(cls, graph: CoxeterGraph, values: Iterable) -> "Root":
        K = field_for(graph)
        coords = []
        for v in values:
            if isinstance(v, CycloReal):
                coords.append(v)
            elif isinstance(v, str):
                coords.append(K.parse(v))
            else:
                coords.append(K.from_rational(v))
        return cls(graph, tuple(coords))

    def sign(self) -> int:
        return reflection_data(self.graph).sign_of(self.coords)

    def is_positive(self) -> bool:
        return self.sign() > 0

    def __neg__(self) -> "Root":
        return Root(self.graph, tuple(-c for c in self.coords))

    def __add__(self, other: "Root") -> "Root":
        return Root(self.graph, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Root") -> "Root":
        return Root(self.graph, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, c) -> "Root":
        return Root(self.graph, tuple(a * c for a in self.coords))

    def to_dict(self) -> dict[str, str]:
        return {v: str(c) for v, c in zip(self.graph.vertices, self.coords)}

    def __str__(self) -> str:
        terms = []
        for v, c in zip(self.graph.vertices, self.coords):
            if c.is_zero():
                continue
            s = str(c)
            terms.append(f"e{v}" if s == "1" else f"-e{v}" if s == "-1" else f"({s})e{v}")
        return " + ".join(terms) if terms else "0"


def inner_product(x: Root, y: Root) -> CycloReal:
    return reflection_data(x.graph).inner(x.coords, y.coords)


def reflect(graph: CoxeterGraph, s, x: Root) -> Root:
    """``r_s(x) = x - 2<x, e_s> e_s``."""
    i = s if isinstance(s, int) else graph.index(s)
    return Root(graph, reflection_data(graph).reflect_coords(i, x.coords))


def act(w: CoxElement, x: Root) -> Root:
    """``w . x``; for ``w = s1...sk`` this is ``r_s1(...r_sk(x))``."""
    if w.graph != x.graph:
        raise GraphMismatch("element and root live over different graphs")
    rd = reflection_data(w.graph)
    v = x.coords
    for s in reversed(w.letters):
        v = rd.reflect_coords(s, v)
    return Root(w.graph, v)


class RootSystem:
    """All roots (both signs) of a finite or depth-truncated root system.

    ``perm[s][i]`` is the index of ``r_s(roots[i])``, or ``-1`` when the image
    was not generated (only possible under a depth bound).
    """

    def __init__(self, graph: CoxeterGraph, depth: int | None = None):
        rd = reflection_data(graph)
        n = graph.rank
        roots: list[tuple[CycloReal, ...]] = []
        index: dict[tuple[CycloReal, ...], int] = {}
        depths: list[int] = []

        def add(v, d):
            index[v] = len(roots)
            roots.append(v)
            depths.append(d)

        for s in range(n):
            add(rd.simple(s), 0)
        head = 0
        while head < len(roots):
            v, d = roots[head], depths[head]
            head += 1
            if depth is not None and d >= depth:
                continue
            for s in range(n):
                u = rd.reflect_coords(s, v)
                if u not in index:
                    add(u, d + 1)
        self.graph = graph
        self.roots = roots
        self.depth = depths
        self.index = index
        self.simple_index = list(range(n))
        self.signs = [rd.sign_of(v) for v in roots]
        self.negative_flags = [sg < 0 for sg in self.signs]
        self.perm = [[index.get(rd.reflect_coords(s, v), -1) for v in roots] for s in range(n)]

    def positive(self) -> list[Root]:
        return [Root(self.graph, v) for v, sg in zip(self.roots, self.signs) if sg > 0]


def root_system(graph: CoxeterGraph, depth: int | None = None) -> RootSystem:
    """Root system of a spherical graph (cached), or a depth-bounded one."""
    if depth is None:
        rs = _SYSTEMS.get(graph)
        if rs is not None:
            return rs
        if not is_spherical(graph):
            raise NotSpherical(f"{graph} has infinitely many roots; pass a depth bound")
        with _CACHE_LOCK:
            rs = _SYSTEMS.get(graph)
            if rs is None:
                rs = _SYSTEMS[graph] = RootSystem(graph)
        return rs
    return RootSystem(graph, depth)


def positive_roots(graph: CoxeterGraph, depth: int | None = None) -> list[Root]:
    """Positive roots; infinite systems require a reflection-depth bound."""
    if depth is None and is_spherical(graph):
        return root_system(graph).positive()
    if depth is None:
        raise NotSpherical(f"{graph} is not spherical; pass depth (e.g. {ROOT_DEPTH})")
    return RootSystem(graph, depth).positive()


def inversion_set(w: CoxElement, depth: int | None = None) -> list[Root]:
    """Positive roots ``f`` with ``w^-1 f`` negative.

    For infinite groups the search runs over roots of reflection depth at most
    ``max(depth, lg(w))`` (default depth 16).
    """
    g = w.graph
    rd = reflection_data(g)
    if is_spherical(g) and depth is None:
        candidates = root_system(g).positive()
    else:
        d = max(depth if depth is not None else ROOT_DEPTH, w.length)
        candidates = RootSystem(g, d).positive()
    out = []
    for f in candidates:
        v = f.coords
        for s in w.letters:
            v = rd.reflect_coords(s, v)
        if rd.sign_of(v) < 0:
            out.append(f)
    return out


def leading_minors(form: Sequence[Sequence[CycloReal]]) -> list[CycloReal]:
    """Leading principal minors by exact elimination without pivoting."""
    n = len(form)
    a = [list(row) for row in form]
    minors = []
    det = None
    for k in range(n):
        pivot = a[k][k]
        det = pivot if det is None else det * pivot
        minors.append(det)
        if pivot.is_zero():
            # later minors need a full determinant; fall back to cofactor-free recomputation
            for m in range(k + 1, n):
                minors.append(_det([row[: m + 1] for row in form[: m + 1]]))
            return minors
        inv = pivot.inverse()
        for i in range(k + 1, n):
            if a[i][k].is_zero():
                continue
            f = a[i][k] * inv
            for j in range(k, n):
                a[i][j] = a[i][j] - f * a[k][j]
    return minors


def _det(m: Sequence[Sequence[CycloReal]]) -> CycloReal:
    n = len(m)
    a = [list(r) for r in m]
    K = a[0][0].field
    det = K.one
    for k in range(n):
        p = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if p is None:
            return K.zero
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        det = det * a[k][k]
        inv = a[k][k].inverse()
        for i in range(k + 1, n):
            if a[i][k].is_zero():
                continue
            f = a[i][k] * inv
            for j in range(k, n):
                a[i][j] = a[i][j] - f * a[k][j]
    return det


def is_positive_definite(form: Sequence[Sequence[CycloReal]]) -> bool:
    """All leading principal minors strictly positive."""
    for minor in leading_minors(form):
        if minor.sign() <= 0:
            return False
    return True


def longest_word(graph: CoxeterGraph) -> tuple[int, ...]:
    """A reduced word for ``w_0`` without enumerating the group.

    Keeps ``w(e_s)`` for every ``s`` and appends the first ``t`` with
    ``w(e_t) > 0`` until every simple root is sent negative.
    """
    if not is_spherical(graph):
        raise NotSpherical(f"{graph} has no longest element")
    rd = reflection_data(graph)
    n = graph.rank
    images = [rd.simple(s) for s in range(n)]
    word: list[int] = []
    while True:
        t = next((s for s in range(n) if not rd.is_negative(images[s])), None)
        if t is None:
            return tuple(word)
        word.append(t)
        # (w r_t)(e_s) = w(e_s) - 2<e_s, e_t> w(e_t)
        vt = images[t]
        new = []
        for s in range(n):
            c = rd.twice_form[s][t]
            if c.is_zero():
                new.append(images[s])
            else:
                new.append(tuple(a - c * b for a, b in zip(images[s], vt)))
        images = new
