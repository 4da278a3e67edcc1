"""LKB-type linear representations of small-type Artin monoids.

The basis is indexed by the positive roots.  Pairings use the doubled form
``<e_s, e_t>' = 2<e_s, e_t>``, so for small-type graphs every positive root
has integer coordinates and ``<e_s, f>'`` is in ``{-1, 0, 1}`` off ``e_s``.
Matrices act on column vectors: column ``j`` is the image of ``u_{f_j}``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Mapping

from ..config import SC_BUDGET
from ..coxeter import INF, CoxeterGraph, is_spherical
from ..errors import BadParameter, BudgetExceeded, HasTriangle, NoSolutionFound, NotSmallType, NotSpherical, RelationViolated
from .poly2 import ONE, ZERO, Poly2, determinant, mat_identity, mat_key, mat_mul

Root = tuple[int, ...]
Matrix = list[list[Poly2]]


def check_small_triangle_free(graph: CoxeterGraph) -> None:
    n = graph.rank
    for s in range(n):
        for t in range(s + 1, n):
            if graph.matrix[s][t] == INF or graph.matrix[s][t] > 3:
                raise NotSmallType(f"label {graph.matrix[s][t]} on {graph.vertices[s]}-{graph.vertices[t]}")
    for a, b, c in itertools.combinations(range(n), 3):
        if graph.matrix[a][b] == graph.matrix[b][c] == graph.matrix[a][c] == 3:
            raise HasTriangle(f"triangle {graph.vertices[a]}, {graph.vertices[b]}, {graph.vertices[c]}")
    if not is_spherical(graph):
        raise NotSpherical(f"{graph} has infinitely many positive roots")


def _pair2(graph: CoxeterGraph, s: int, f: Root) -> int:
    """``<e_s, f>'`` with ``<e_s, e_s>' = 2`` and ``<e_s, e_t>' = -1`` across edges."""
    total = 2 * f[s]
    for t, c in enumerate(f):
        if t != s and c and graph.matrix[s][t] == 3:
            total -= c
    return total


def integer_positive_roots(graph: CoxeterGraph) -> list[Root]:
    """Positive roots of a small-type spherical graph, ordered by height then coordinates."""
    check_small_triangle_free(graph)
    n = graph.rank
    simple = [tuple(1 if i == s else 0 for i in range(n)) for s in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for f in frontier:
            for s in range(n):
                a = _pair2(graph, s, f)
                if a < 0:
                    g = tuple(c - a if i == s else c for i, c in enumerate(f))
                    if g not in seen:
                        seen.add(g)
                        nxt.append(g)
        frontier = nxt
    return sorted(seen, key=lambda f: (sum(f), tuple(-c for c in f)))


@dataclass(frozen=True)
class LKBMatrix:
    basis: tuple[Root, ...]
    entries: tuple[tuple[Poly2, ...], ...]

    def rows(self) -> Matrix:
        return [list(r) for r in self.entries]

    def __matmul__(self, other: "LKBMatrix") -> "LKBMatrix":
        return LKBMatrix(self.basis, mat_key(mat_mul(self.rows(), other.rows())))

    def image(self, f: Root) -> dict[Root, Poly2]:
        j = self.basis.index(tuple(f))
        return {self.basis[i]: self.entries[i][j] for i in range(len(self.basis)) if not self.entries[i][j].is_zero()}

    def determinant(self) -> Poly2:
        return determinant(self.rows())

    def triples(self) -> list[tuple[Root, Root, str]]:
        """Sparse export ``(row root, column root, polynomial)``."""
        return [
            (self.basis[i], self.basis[j], str(e))
            for i, row in enumerate(self.entries)
            for j, e in enumerate(row)
            if not e.is_zero()
        ]


def _phi_rows(graph: CoxeterGraph, basis: list[Root], s: int) -> Matrix:
    index = {f: i for i, f in enumerate(basis)}
    N = len(basis)
    M = [[ZERO] * N for _ in range(N)]
    y = Poly2.y()
    es = basis[index[tuple(1 if i == s else 0 for i in range(graph.rank))]]
    for j, f in enumerate(basis):
        if f == es:
            continue
        a = _pair2(graph, s, f)
        if a == 0:
            M[j][j] = ONE
        elif a > 0:
            g = tuple(c - a if i == s else c for i, c in enumerate(f))
            M[index[g]][j] = y
        else:
            g = tuple(c - a if i == s else c for i, c in enumerate(f))
            M[j][j] = ONE - y
            M[index[g]][j] = ONE
    return M


def lkb_phi_matrix(graph: CoxeterGraph, s) -> LKBMatrix:
    """``φ_s``: kills ``u_{e_s}``, fixes orthogonal roots, lowers or raises the rest."""
    s = s if isinstance(s, int) else graph.index(s)
    basis = integer_positive_roots(graph)
    return LKBMatrix(tuple(basis), mat_key(_phi_rows(graph, basis, s)))


TTable = Mapping[tuple[int, Root], Poly2]


def lkb_Phi_matrix(graph: CoxeterGraph, s, T: TTable) -> LKBMatrix:
    """``Φ_s(u_f) = φ_s(u_f) + x T(s, f) u_{e_s}``."""
    s = s if isinstance(s, int) else graph.index(s)
    basis = integer_positive_roots(graph)
    M = _phi_rows(graph, basis, s)
    es = tuple(1 if i == s else 0 for i in range(graph.rank))
    r = basis.index(es)
    x = Poly2.x()
    for j, f in enumerate(basis):
        t = T.get((s, f), ZERO)
        if not isinstance(t, Poly2):
            t = Poly2.const(t)
        if not t.is_zero():
            M[r][j] = M[r][j] + x * t
    return LKBMatrix(tuple(basis), mat_key(M))


def validate_matrices(graph: CoxeterGraph, mats: list[LKBMatrix], require_invertible: bool = True) -> dict:
    """Check every Artin relation as an exact matrix identity, and invertibility."""
    n = graph.rank
    failures = []
    for s in range(n):
        for t in range(s + 1, n):
            m = graph.matrix[s][t]
            L, R = mats[s], mats[t]
            for k in range(1, m):
                L, R = L @ (mats[t] if k % 2 == 1 else mats[s]), R @ (mats[s] if k % 2 == 1 else mats[t])
            if L.entries != R.entries:
                failures.append({"pair": [graph.vertices[s], graph.vertices[t]], "label": m})
    dets = [M.determinant() for M in mats]
    singular = [graph.vertices[s] for s, d in enumerate(dets) if d.is_zero()]
    ok = not failures and (not require_invertible or not singular)
    return {
        "ok": ok,
        "relation_failures": failures,
        "singular": singular,
        "determinants": {graph.vertices[s]: str(d) for s, d in enumerate(dets)},
        "monomial_determinants": all(d.is_monomial() for d in dets),
    }


def lkb_Phi_matrices(graph: CoxeterGraph, T: TTable, validate: bool = True) -> list[LKBMatrix]:
    mats = [lkb_Phi_matrix(graph, s, T) for s in range(graph.rank)]
    if validate:
        rep = validate_matrices(graph, mats, require_invertible=False)
        if rep["relation_failures"]:
            raise RelationViolated(f"T-table breaks relations on {rep['relation_failures']}")
    return mats


def format_T_table(graph: CoxeterGraph, T: TTable) -> str:
    """One line per entry: ``vertex (c1, ..., cn) -> polynomial``."""
    lines = []
    for (s, f), p in sorted(T.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1])):
        lines.append(f"{graph.vertices[s]} ({', '.join(map(str, f))}) -> {p}")
    return "\n".join(lines)


def parse_T_table(graph: CoxeterGraph, text: str) -> dict[tuple[int, Root], Poly2]:
    """Read the format written by :func:`format_T_table`; blank lines and ``#`` comments are skipped."""
    table = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"(\S+)\s*\(([^)]*)\)\s*->\s*(.+)", line)
        if not m:
            raise BadParameter(f"line {lineno}: expected 'vertex (coords) -> polynomial'")
        s = graph.index(m.group(1))
        coords = tuple(int(c) for c in m.group(2).replace(",", " ").split())
        if len(coords) != graph.rank:
            raise BadParameter(f"line {lineno}: root needs {graph.rank} coordinates")
        try:
            table[(s, coords)] = Poly2.parse(m.group(3))
        except (ValueError, ZeroDivisionError) as exc:
            raise BadParameter(f"line {lineno}: {exc}") from None
    return table


# -- solving for T -------------------------------------------------------------------


def solve_T_table(graph: CoxeterGraph, degree_bound: int = 2) -> dict[tuple[int, Root], Poly2]:
    """Find polynomials ``T(s, f)`` in ``y`` making ``Φ`` a representation.

    Each ``T(s, f)`` is an unknown polynomial of degree at most
    ``degree_bound``.  Matching coefficients of every relation gives a
    polynomial system, solved exactly; free parameters are then set by trying
    small integer values in graded order until every ``Φ_s`` is invertible.
    Degrees are tried in increasing order.
    """
    import sympy as sp

    if graph.rank > 3:
        raise BudgetExceeded("the T-table solver is limited to rank <= 3")
    if not 0 <= degree_bound <= 3:
        raise BudgetExceeded("degree_bound must be between 0 and 3")
    basis = integer_positive_roots(graph)
    n, N = graph.rank, len(basis)
    xs, ys = sp.symbols("x y")

    def to_sp(p: Poly2):
        return sum(sp.Rational(c.numerator, c.denominator) * xs**i * ys**j for (i, j), c in p.terms.items())

    phis = [sp.Matrix(N, N, lambda i, j, s=s: to_sp(_phi_rows(graph, basis, s)[i][j])) for s in range(n)]
    for d in range(degree_bound + 1):
        unknowns = []
        T = {}
        for s in range(n):
            for k, f in enumerate(basis):
                cs = sp.symbols(f"c_{s}_{k}_0:{d + 1}")
                unknowns.extend(cs)
                T[(s, f)] = sum(c * ys**e for e, c in enumerate(cs))
        Phis = []
        for s in range(n):
            M = phis[s].copy()
            r = basis.index(tuple(1 if i == s else 0 for i in range(n)))
            for j, f in enumerate(basis):
                M[r, j] += xs * T[(s, f)]
            Phis.append(M)
        eqs = set()
        for s in range(n):
            for t in range(s + 1, n):
                m = graph.matrix[s][t]
                L, R = Phis[s], Phis[t]
                for k in range(1, m):
                    L = L * (Phis[t] if k % 2 == 1 else Phis[s])
                    R = R * (Phis[s] if k % 2 == 1 else Phis[t])
                for e in sp.expand(L - R):
                    if e != 0:
                        eqs.update(sp.Poly(e, xs, ys).coeffs())
        sols = sp.solve(sorted(eqs, key=sp.default_sort_key), unknowns, dict=True) if eqs else [{}]
        for sol in sols:
            free = [u for u in unknowns if u not in sol]
            for values in _graded_values(len(free)):
                sub = dict(zip(free, values))
                table = {}
                for key, expr in T.items():
                    poly = sp.Poly(sp.expand(expr.subs(sol).subs(sub)), ys)
                    coeffs = [sp.Rational(c) for c in reversed(poly.all_coeffs())]
                    table[key] = Poly2.in_y([int(c.p) if c.q == 1 else _frac(c) for c in coeffs])
                mats = [lkb_Phi_matrix(graph, s, table) for s in range(n)]
                if validate_matrices(graph, mats)["ok"]:
                    return table
    raise NoSolutionFound(f"no T-table of degree <= {degree_bound} found for {graph}")


def _frac(c):
    from fractions import Fraction

    return Fraction(int(c.p), int(c.q))


def _graded_values(k: int, limit: int = 3):
    """Integer vectors of length ``k`` by increasing sum of absolute values, ties
    broken lexicographically with positive values first."""
    if k == 0:
        yield ()
        return
    order = [0, 1, -1, 2, -2, 3, -3]
    for total in range(0, limit * k + 1):
        for vec in itertools.product(order, repeat=k):
            if sum(abs(v) for v in vec) == total:
                yield vec


# -- injectivity scan ---------------------------------------------------------------


def injectivity_scan(graph: CoxeterGraph, mats: list[LKBMatrix], max_length: int, budget: int = SC_BUDGET) -> dict:
    """Compare matrices of all monoid elements of length ``<= max_length``.

    Elements are distinguished by their left-greedy normal forms; a collision
    is two distinct elements with the same matrix.
    """
    from ..artin import garside_structure_of
    from ..garside import monoid_normal_form

    G = garside_structure_of(graph)
    n = graph.rank
    N = len(mats[0].basis) if mats else 0
    seen_nf = {}
    by_matrix: dict = {}
    collisions = []
    layer = {(): mat_key(mat_identity(N))}
    for length in range(max_length + 1):
        nxt = {}
        for word, key in layer.items():
            nf = monoid_normal_form(G, word)
            sig = (nf.delta_power, nf.factors)
            if sig in seen_nf:
                continue
            seen_nf[sig] = word
            if len(seen_nf) > budget:
                raise BudgetExceeded("injectivity scan exceeded its budget")
            other = by_matrix.get(key)
            if other is not None:
                collisions.append({"a": [i + 1 for i in other], "b": [i + 1 for i in word]})
            else:
                by_matrix[key] = word
            if length < max_length:
                rows = [list(r) for r in key]
                for s in range(n):
                    nxt.setdefault(word + (s,), mat_key(mat_mul(rows, mats[s].rows())))
        layer = nxt
    return {"elements": len(seen_nf), "max_length": max_length, "collisions": collisions}
