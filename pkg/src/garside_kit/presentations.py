"""Group presentations: braid, pure braid, Artin, Coxeter and mapping class groups.

Relators are signed words over the generator list (``i+1`` / ``-(i+1)``).
A relation ``A = B`` is stored as the relator ``A B^-1``.
"""

from __future__ import annotations

import ast
import json
import operator
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Callable, Sequence

from .coxeter import INF, CoxeterGraph, is_spherical
from .errors import BadParameters, MalformedSpec, MissingGraphAsset, NotSpherical
from .roots import longest_word

Word = tuple[int, ...]


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    provenance: str
    #: human-readable form of each relator
    labels: tuple[str, ...] = ()
    #: Coxeter graph whose Artin relations are included, when there is one
    graph: CoxeterGraph | None = field(default=None, compare=False)
    #: how many leading relators are plain Artin (or Coxeter) relations
    n_standard: int = 0
    #: generator -> signed word in an ambient group, for verification
    images: tuple[Word, ...] | None = None

    def __post_init__(self):
        n = len(self.generators)
        for w in self.relators:
            if any(x == 0 or abs(x) > n for x in w):
                raise MalformedSpec("relator uses an undeclared generator")

    @property
    def extra_relators(self) -> tuple[Word, ...]:
        return self.relators[self.n_standard :]

    def format_word(self, word: Sequence[int]) -> str:
        return " ".join(("-" if x < 0 else "") + self.generators[abs(x) - 1] for x in word)

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [list(r) for r in self.relators],
            "provenance": self.provenance,
        }


def _inv(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def _alt(s: int, t: int, m: int) -> Word:
    return tuple(s if k % 2 == 0 else t for k in range(m))


def _artin_relators(graph: CoxeterGraph) -> tuple[list[Word], list[str]]:
    rels, labels = [], []
    n = graph.rank
    for s in range(n):
        for t in range(s + 1, n):
            m = graph.matrix[s][t]
            if m == INF:
                continue
            rels.append(_alt(s + 1, t + 1, m) + _inv(_alt(t + 1, s + 1, m)))
            a, b = graph.vertices[s], graph.vertices[t]
            labels.append(f"prod({a},{b}:{m}) = prod({b},{a}:{m})")
    return rels, labels


# -- braid and pure braid ---------------------------------------------------


def braid_presentation(n: int) -> Presentation:
    """``B_n``: far commutation and the braid relation on neighbours."""
    if n < 2:
        raise BadParameters("braid presentations need n >= 2")
    gens = tuple(f"s{k}" for k in range(1, n))
    rels, labels = [], []
    for k in range(1, n):
        for l in range(k + 1, n):
            if l - k >= 2:
                rels.append((k, l, -k, -l))
                labels.append(f"s{k} s{l} = s{l} s{k}")
            else:
                rels.append((k, l, k, -l, -k, -l))
                labels.append(f"s{k} s{l} s{k} = s{l} s{k} s{l}")
    return Presentation(gens, tuple(rels), "braid group", tuple(labels), images=tuple((k,) for k in range(1, n)))


def pure_braid_presentation(n: int) -> Presentation:
    """``P_n`` on generators ``d{k},{l}`` with the four conjugation families.

    Each generator carries its braid word ``δ_kl`` as its image in ``B_n``.
    """
    from .artin import pure_braid_generator

    if n < 2:
        raise BadParameters("pure braid presentations need n >= 2")
    pairs = [(k, l) for k in range(1, n + 1) for l in range(k + 1, n + 1)]
    index = {p: i + 1 for i, p in enumerate(pairs)}
    gens = tuple(f"d{k},{l}" for k, l in pairs)

    def d(a, b, e=1):
        return index[(a, b)] * e

    rels: list[Word] = []
    labels: list[str] = []
    idx = range(1, n + 1)
    for r in idx:
        for s in idx:
            for k in idx:
                for l in idx:
                    if (r < s < k < l) or (k < r < s < l):
                        rels.append((d(r, s), d(k, l), d(r, s, -1), d(k, l, -1)))
                        labels.append(f"commute d{r},{s} with d{k},{l}")
    for r in idx:
        for k in idx:
            for l in idx:
                if r < k < l:
                    lhs = (d(r, k), d(k, l), d(r, k, -1))
                    rhs = (d(k, l, -1), d(r, l, -1), d(k, l), d(r, l), d(k, l))
                    rels.append(lhs + _inv(rhs))
                    labels.append(f"conjugate d{k},{l} by d{r},{k}")
    for r in idx:
        for k in idx:
            for l in idx:
                if r < k < l:
                    lhs = (d(r, k), d(r, l), d(r, k, -1))
                    rhs = (d(k, l, -1), d(r, l), d(k, l))
                    rels.append(lhs + _inv(rhs))
                    labels.append(f"conjugate d{r},{l} by d{r},{k}")
    for r in idx:
        for k in idx:
            for s in idx:
                for l in idx:
                    if r < k < s < l:
                        lhs = (d(r, s), d(k, l), d(r, s, -1))
                        rhs = (
                            d(s, l, -1), d(r, l, -1), d(s, l), d(r, l), d(k, l),
                            d(r, l, -1), d(s, l, -1), d(r, l), d(s, l),
                        )
                        rels.append(lhs + _inv(rhs))
                        labels.append(f"conjugate d{k},{l} by d{r},{s}")
    images = tuple(pure_braid_generator(n, k, l) for k, l in pairs)
    return Presentation(gens, tuple(rels), "pure braid group", tuple(labels), images=images)


# -- Artin and Coxeter --------------------------------------------------------


def artin_presentation(graph: CoxeterGraph) -> Presentation:
    rels, labels = _artin_relators(graph)
    return Presentation(graph.vertices, tuple(rels), "artin group", tuple(labels), graph, len(rels))


def coxeter_presentation(graph: CoxeterGraph) -> Presentation:
    rels, labels = [], []
    n = graph.rank
    for s in range(n):
        rels.append((s + 1, s + 1))
        labels.append(f"{graph.vertices[s]}^2 = 1")
    for s in range(n):
        for t in range(s + 1, n):
            m = graph.matrix[s][t]
            if m == INF:
                continue
            rels.append((s + 1, t + 1) * m)
            labels.append(f"({graph.vertices[s]} {graph.vertices[t]})^{m} = 1")
    return Presentation(graph.vertices, tuple(rels), "coxeter group", tuple(labels), graph, len(rels))


# -- mapping class groups -----------------------------------------------------

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul}
_CMPOPS = {ast.GtE: operator.ge, ast.LtE: operator.le, ast.Eq: operator.eq, ast.Gt: operator.gt, ast.Lt: operator.lt}


def _eval(expr: str, env: dict[str, int]):
    """Evaluate a small integer expression or comparison over ``env``."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name) and node.id in env:
            return env[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.Compare) and len(node.ops) == 1 and type(node.ops[0]) in _CMPOPS:
            return _CMPOPS[type(node.ops[0])](ev(node.left), ev(node.comparators[0]))
        raise MalformedSpec(f"unsupported expression {expr!r}")

    try:
        return ev(ast.parse(expr, mode="eval"))
    except SyntaxError:
        raise MalformedSpec(f"unparsable expression {expr!r}") from None


def _fill(template: str, env: dict[str, int]) -> str:
    out, rest = [], template
    while "{" in rest:
        pre, _, tail = rest.partition("{")
        inner, _, rest = tail.partition("}")
        out.append(pre + str(_eval(inner, env)))
    return "".join(out) + rest


@lru_cache(maxsize=1)
def _load_asset() -> dict:
    try:
        text = resources.files("garside_kit").joinpath("data/mcg_graph.json").read_text()
    except (FileNotFoundError, ModuleNotFoundError):
        raise MissingGraphAsset("the mapping class group graph asset is missing") from None
    data = json.loads(text)
    if data.get("version") != 1:
        raise MissingGraphAsset("unsupported mapping class group graph asset version")
    return data


def mcg_graph(g: int, r: int, n: int) -> CoxeterGraph:
    """The Coxeter graph ``Γ(g, r, n)`` built from the shipped data asset."""
    if g < 1 or r < 0 or n < 0:
        raise BadParameters("need g >= 1, r >= 0, n >= 0")
    data = _load_asset()
    env = {"g": g, "r": r, "n": n}
    vertices: list[str] = []
    for fam in data["families"]:
        if "when" in fam and not _eval(fam["when"], env):
            continue
        if fam.get("single"):
            vertices.append(fam["name"])
            continue
        lo, hi = (_eval(e, env) for e in fam["range"])
        vertices.extend(f"{fam['name']}{i}" for i in range(lo, hi + 1))
    present = set(vertices)
    edges = []
    for e in data["edges"]:
        if "when" in e and not _eval(e["when"], env):
            continue
        if "range" in e:
            lo, hi = (_eval(x, env) for x in e["range"])
            its = range(lo, hi + 1)
        else:
            its = [None]
        for i in its:
            local = dict(env, i=i) if i is not None else env
            a, b = _fill(e["a"], local), _fill(e["b"], local)
            if a in present and b in present:
                edges.append((a, b, e["label"]))
    return CoxeterGraph.from_edges(vertices, edges, name=f"Gamma({g},{r},{n})")


class _Builder:
    """Accumulates relations ``A = B`` over a graph, expanding ``Δ(X)``."""

    def __init__(self, graph: CoxeterGraph):
        self.graph = graph
        self.relators: list[Word] = []
        self.labels: list[str] = []
        self.skipped: list[str] = []

    def has(self, *names: str) -> bool:
        return all(v in self.graph.vertices for v in names)

    def gen(self, name: str) -> Word:
        return (self.graph.index(name) + 1,)

    def delta(self, *names: str) -> Word:
        idx = sorted({self.graph.index(v) for v in names})
        if not idx:
            return ()
        sub = self.graph.subgraph(idx)
        if not is_spherical(sub):
            raise NotSpherical(f"Δ({', '.join(names)}) is not defined: the subgraph is not spherical")
        return tuple(idx[i] + 1 for i in longest_word(sub))

    def add(self, label: str, names: Sequence[str], lhs: Callable[[], Word], rhs: Callable[[], Word]) -> None:
        if not self.has(*names):
            self.skipped.append(label)
            return
        self.relators.append(tuple(lhs()) + _inv(rhs()))
        self.labels.append(label)


def _pow(w: Word, k: int) -> Word:
    return w * k if k >= 0 else _inv(w) * (-k)


def _common_relations(B: _Builder, g: int) -> None:
    Y3 = ("y1", "y2", "y3", "z")
    if g >= 2:
        B.add("Δ(y1,y2,y3,z)^4 = Δ(x0,y1,y2,y3,z)^2", ("x0",) + Y3,
              lambda: _pow(B.delta(*Y3), 4), lambda: _pow(B.delta("x0", *Y3), 2))
    if g >= 3:
        Y5 = ("y1", "y2", "y3", "y4", "y5", "z")
        B.add("Δ(y1,...,y5,z)^2 = Δ(x0,y1,...,y5,z)", ("x0",) + Y5,
              lambda: _pow(B.delta(*Y5), 2), lambda: B.delta("x0", *Y5))


def _bounded_relations(B: _Builder, g: int, r: int, n: int) -> None:
    _common_relations(B, g)

    def conj(i, j):
        D = B.delta(f"x{i + 1}", f"x{j}", "y1")
        return _inv(D) + B.gen(f"x{i}") + D

    for i in range(r):
        for j in range(i):
            for k in range(j):
                names = (f"x{k}", f"x{i}", f"x{i + 1}", f"x{j}", "y1")
                B.add(f"x{k} commutes with Δ(x{i + 1},x{j},y1)^-1 x{i} Δ(x{i + 1},x{j},y1)", names,
                      lambda i=i, j=j, k=k: B.gen(f"x{k}") + conj(i, j),
                      lambda i=i, j=j, k=k: conj(i, j) + B.gen(f"x{k}"))
    if g >= 2:
        for i in range(r):
            for j in range(i):
                names = ("y2", f"x{i}", f"x{i + 1}", f"x{j}", "y1")
                B.add(f"y2 commutes with Δ(x{i + 1},x{j},y1)^-1 x{i} Δ(x{i + 1},x{j},y1)", names,
                      lambda i=i, j=j: B.gen("y2") + conj(i, j),
                      lambda i=i, j=j: conj(i, j) + B.gen("y2"))
    Y = ("y1", "y2", "y3", "z")
    if g >= 2 and r >= 2:
        B.add("u1 = Δ(x0,x1,y1,y2,y3,z) Δ(x1,y1,y2,y3,z)^-2", ("u1", "x0", "x1") + Y,
              lambda: B.gen("u1"), lambda: B.delta("x0", "x1", *Y) + _pow(B.delta("x1", *Y), -2))
    if g >= 2:
        for i in range(1, r - 1):
            a, b = f"x{i}", f"x{i + 1}"
            B.add(f"u{i + 1} = Δ({a},{b},y1,y2,y3,z) Δ({b},y1,y2,y3,z)^-2 Δ(x0,{b},y1)^2 Δ(x0,{a},{b},y1)^-1",
                  (f"u{i + 1}", "x0", a, b) + Y,
                  lambda a=a, b=b, i=i: B.gen(f"u{i + 1}"),
                  lambda a=a, b=b: B.delta(a, b, *Y) + _pow(B.delta(b, *Y), -2)
                  + _pow(B.delta("x0", b, "y1"), 2) + _inv(B.delta("x0", a, b, "y1")))
    xr, xp = f"x{r}", f"x{r - 1}"
    if n >= 2:
        B.add(f"Δ({xp},{xr},y1,v1) = Δ({xr},y1,v1)^2", (xp, xr, "y1", "v1"),
              lambda: B.delta(xp, xr, "y1", "v1"), lambda: _pow(B.delta(xr, "y1", "v1"), 2))
    if n >= 1 and g >= 2 and r == 1:
        B.add("Δ(x0,x1,y1,y2,y3,z) = Δ(x1,y1,y2,y3,z)^2", ("x0", "x1") + Y,
              lambda: B.delta("x0", "x1", *Y), lambda: _pow(B.delta("x1", *Y), 2))
    if n >= 1 and g >= 2 and r >= 2:
        B.add(f"Δ({xp},{xr},y1,y2,y3,z) Δ({xr},y1,y2,y3,z)^-2 = Δ(x0,{xp},{xr},y1) Δ(x0,{xr},y1)^-2",
              ("x0", xp, xr) + Y,
              lambda: B.delta(xp, xr, *Y) + _pow(B.delta(xr, *Y), -2),
              lambda: B.delta("x0", xp, xr, "y1") + _pow(B.delta("x0", xr, "y1"), -2))


def _closed_relations(B: _Builder, g: int) -> None:
    _common_relations(B, g)
    if g == 1:
        B.add("(x0 y1)^6 = 1", ("x0", "y1"), lambda: (B.gen("x0") + B.gen("y1")) * 6, lambda: ())
    else:
        rest = ("y2", "y3", "z") + tuple(f"y{i}" for i in range(4, 2 * g))
        B.add(f"x0^{2 * g - 2} = Δ({','.join(rest)})", ("x0",) + rest,
              lambda: _pow(B.gen("x0"), 2 * g - 2), lambda: B.delta(*rest))


def _punctured_relations(B: _Builder, g: int, n: int) -> None:
    _common_relations(B, g)
    Y = ("y1", "y2", "y3", "z")
    vs = tuple(f"v{j}" for j in range(1, n))
    if n >= 2:
        B.add("Δ(x0,x1,y1,v1) = Δ(x1,y1,v1)^2", ("x0", "x1", "y1", "v1"),
              lambda: B.delta("x0", "x1", "y1", "v1"), lambda: _pow(B.delta("x1", "y1", "v1"), 2))
    if g >= 2:
        B.add("Δ(x0,x1,y1,y2,y3,z) = Δ(x1,y1,y2,y3,z)^2", ("x0", "x1") + Y,
              lambda: B.delta("x0", "x1", *Y), lambda: _pow(B.delta("x1", *Y), 2))
        zs = ("z",) + tuple(f"y{i}" for i in range(2, 2 * g))
        B.add(f"x0^{2 * g - n - 2} Δ({','.join(('x1',) + vs)}) = Δ({','.join(zs)})^2", ("x0", "x1") + vs + zs,
              lambda: _pow(B.gen("x0"), 2 * g - n - 2) + B.delta("x1", *vs), lambda: _pow(B.delta(*zs), 2))
    else:
        B.add(f"x0^{n} = Δ({','.join(('x1',) + vs)})", ("x0", "x1") + vs,
              lambda: _pow(B.gen("x0"), n), lambda: B.delta("x1", *vs))
        B.add(f"Δ(x0,y1)^4 = Δ({','.join(vs)})^2", ("x0", "y1") + vs,
              lambda: _pow(B.delta("x0", "y1"), 4), lambda: _pow(B.delta(*vs), 2))


def mcg_presentation(g: int, r: int, n: int) -> Presentation:
    """Mapping class group of a genus ``g`` surface with ``r`` boundary
    components and ``n`` punctures, as a quotient of an Artin group.

    Relation instances naming a vertex absent from the graph are skipped;
    :func:`mcg_skipped` lists them.
    """
    if g < 1 or r < 0 or n < 0:
        raise BadParameters("need g >= 1, r >= 0, n >= 0")
    if r >= 1:
        graph, kind = mcg_graph(g, r, n), "mapping class group, bounded"
        B = _Builder(graph)
        _bounded_relations(B, g, r, n)
    elif n == 0:
        graph, kind = mcg_graph(g, 1, 0), "mapping class group, closed"
        B = _Builder(graph)
        _closed_relations(B, g)
    else:
        graph, kind = mcg_graph(g, 1, n), "mapping class group, punctured sphere-like"
        B = _Builder(graph)
        _punctured_relations(B, g, n)
    rels, labels = _artin_relators(graph)
    return Presentation(
        graph.vertices,
        tuple(rels + B.relators),
        kind,
        tuple(labels + B.labels),
        graph,
        len(rels),
    )


def mcg_skipped(g: int, r: int, n: int) -> list[str]:
    """Relation instances dropped because they name a missing vertex."""
    if r >= 1:
        B = _Builder(mcg_graph(g, r, n))
        _bounded_relations(B, g, r, n)
    elif n == 0:
        B = _Builder(mcg_graph(g, 1, 0))
        _closed_relations(B, g)
    else:
        B = _Builder(mcg_graph(g, 1, n))
        _punctured_relations(B, g, n)
    return B.skipped


def presentation(kind: str, *params, **kw) -> Presentation:
    """Dispatch on ``kind``: ``braid``/``pure_braid`` take ``n``; ``artin``/``coxeter``
    take a graph (or anything :func:`build_graph` accepts); ``mcg`` takes ``g, r, n``."""
    from .coxeter import build_graph

    if kind == "braid":
        return braid_presentation(*params, **kw)
    if kind == "pure_braid":
        return pure_braid_presentation(*params, **kw)
    if kind == "artin":
        return artin_presentation(build_graph(params[0] if params else kw["graph"]))
    if kind == "coxeter":
        return coxeter_presentation(build_graph(params[0] if params else kw["graph"]))
    if kind == "mcg":
        return mcg_presentation(*params, **kw)
    raise BadParameters(f"unknown presentation kind {kind!r}")


@dataclass
class RelatorReport:
    checked: int
    failures: list[tuple[int, str]]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "ok": self.ok,
            "failures": [{"index": i, "relator": s} for i, s in self.failures],
        }


def substitute(P: Presentation, word: Sequence[int]) -> Word:
    """Rewrite a word over the generators through ``P.images``."""
    if P.images is None:
        return tuple(word)
    out: list[int] = []
    for x in word:
        img = P.images[abs(x) - 1]
        out.extend(img if x > 0 else _inv(img))
    return tuple(out)


def verify_relators(P: Presentation, target: Callable[[Word], bool]) -> RelatorReport:
    """Evaluate every relator with ``target`` (a triviality test), after substitution."""
    failures = []
    for i, rel in enumerate(P.relators):
        if not target(substitute(P, rel)):
            failures.append((i, P.labels[i] if i < len(P.labels) else P.format_word(rel)))
    return RelatorReport(len(P.relators), failures)
