"""Free groups, the Artin representation of braid groups, ``ρ_D`` and semidirect products."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from ..errors import BadParameter, NotAHomomorphism, OutOfRange, RankMismatch


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word; letter ``k`` is ``x_k`` and ``-k`` its inverse (``k >= 1``)."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", reduce_letters(self.letters))

    @classmethod
    def gen(cls, k: int) -> "FreeWord":
        return cls((k,))

    @classmethod
    def parse(cls, text: str) -> "FreeWord":
        """``"x1 -x2 x1"`` (any alphabetic prefix) or ``"1 -2 1"``."""
        out = []
        for tok in text.split():
            sign = -1 if tok.startswith("-") else 1
            digits = tok.lstrip("-").lstrip("abcdefghijklmnopqrstuvwxyz")
            if not digits.isdigit() or int(digits) < 1:
                raise BadParameter(f"bad free group letter {tok!r}")
            out.append(sign * int(digits))
        return cls(tuple(out))

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """``(generator index, ±1)`` per letter."""
        return tuple((abs(a), 1 if a > 0 else -1) for a in self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple(-a for a in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def format(self, name: str = "x") -> str:
        if not self.letters:
            return "1"
        return " ".join(("-" if a < 0 else "") + f"{name}{abs(a)}" for a in self.letters)

    def __str__(self) -> str:
        return self.format()


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        if a == 0:
            raise BadParameter("0 is not a free group letter")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def cyclic_reduce(w: FreeWord) -> FreeWord:
    a = list(w.letters)
    i, j = 0, len(a) - 1
    while i < j and a[i] == -a[j]:
        i += 1
        j -= 1
    return FreeWord(tuple(a[i : j + 1]))


def are_conjugate(u: FreeWord, v: FreeWord) -> bool:
    """Conjugacy in a free group: cyclic reductions agree up to rotation."""
    a, b = cyclic_reduce(u).letters, cyclic_reduce(v).letters
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = a + a
    return any(doubled[k : k + len(b)] == b for k in range(len(a)))


@dataclass(frozen=True)
class FreeEndo:
    """Endomorphism of ``F_n`` given by the images of ``x_1..x_n``."""

    images: tuple[FreeWord, ...]

    @property
    def rank(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "FreeEndo":
        return cls(tuple(FreeWord.gen(k) for k in range(1, n + 1)))

    def __call__(self, w: FreeWord) -> FreeWord:
        out: list[int] = []
        for a in w.letters:
            if abs(a) > self.rank:
                raise RankMismatch(f"letter x{abs(a)} outside a rank {self.rank} free group")
            img = self.images[abs(a) - 1]
            out.extend(img.letters if a > 0 else img.inverse().letters)
        return FreeWord(tuple(out))

    def compose(self, other: "FreeEndo") -> "FreeEndo":
        """``self ∘ other``."""
        return FreeEndo(tuple(self(w) for w in other.images))


# -- Artin representation -------------------------------------------------------


def _check(n: int, word: Sequence[int], top: int) -> None:
    for a in word:
        if a == 0 or abs(a) > top:
            raise OutOfRange(f"braid letter {a} out of range for n={n}")


def _tau(n: int, k: int, inverse: bool) -> tuple[tuple[int, ...], ...]:
    """Images of ``x_1..x_n`` under ``τ_k`` or its inverse, as letter tuples."""
    imgs = [(j,) for j in range(1, n + 1)]
    if not inverse:
        imgs[k - 1] = (-k, k + 1, k)
        imgs[k] = (k,)
    else:
        imgs[k - 1] = (k + 1,)
        imgs[k] = (k + 1, k, -(k + 1))
    return tuple(imgs)


def _substitute(images: Sequence[tuple[int, ...]], letters: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        img = images[abs(a) - 1]
        out.extend(img if a > 0 else tuple(-b for b in reversed(img)))
    return reduce_letters(out)


def artin_rep_apply(n: int, word: Sequence[int], w: FreeWord) -> FreeWord:
    """``ρ(β)(w)`` with ``ρ(σ_k) = τ_k`` and ``ρ(αβ) = ρ(α) ∘ ρ(β)``."""
    _check(n, word, n - 1)
    if any(abs(a) > n for a in w.letters):
        raise OutOfRange(f"{w} is not a word in x1..x{n}")
    letters = w.letters
    for a in reversed(word):
        letters = _substitute(_tau(n, abs(a), a < 0), letters)
    return FreeWord(letters)


def artin_rep(n: int, word: Sequence[int]) -> FreeEndo:
    return FreeEndo(tuple(artin_rep_apply(n, word, FreeWord.gen(k)) for k in range(1, n + 1)))


def artin_image_membership(n: int, alpha: FreeEndo) -> bool:
    """Whether ``alpha`` fixes ``x_n...x_2 x_1`` and permutes the conjugacy
    classes of the generators."""
    if alpha.rank != n:
        raise RankMismatch(f"endomorphism has {alpha.rank} images, expected {n}")
    if any(abs(a) > n for img in alpha.images for a in img.letters):
        raise RankMismatch("an image uses a letter outside x1..xn")
    top = FreeWord(tuple(range(n, 0, -1)))
    if alpha(top) != top:
        return False
    seen = set()
    for img in alpha.images:
        c = cyclic_reduce(img).letters
        if len(c) != 1 or c[0] < 0 or c[0] in seen:
            return False
        seen.add(c[0])
    return True


# -- ρ_D ---------------------------------------------------------------------------


def _rho_d(n: int, i: int, inverse: bool) -> tuple[tuple[int, ...], ...]:
    """Images of ``y_1..y_{n-1}`` under ``ρ_{D,i}`` or its inverse."""
    imgs = [(j,) for j in range(1, n)]
    if i == 1:
        for j in range(2, n):
            imgs[j - 1] = (1, j) if inverse else (-1, j)
    elif not inverse:
        imgs[i - 2] = (i,)
        imgs[i - 1] = (i, -(i - 1), i)
    else:
        imgs[i - 2] = (i - 1, -i, i - 1)
        imgs[i - 1] = (i - 1,)
    return tuple(imgs)


def rho_d_apply(n: int, word: Sequence[int], w: FreeWord) -> FreeWord:
    """``ρ_D(β)(w)`` on ``F(y_1, ..., y_{n-1})``, same composition rule as :func:`artin_rep_apply`."""
    if n < 2:
        raise OutOfRange("ρ_D needs n >= 2")
    _check(n, word, n - 1)
    if any(abs(a) > n - 1 for a in w.letters):
        raise OutOfRange(f"{w} is not a word in y1..y{n - 1}")
    letters = w.letters
    for a in reversed(word):
        letters = _substitute(_rho_d(n, abs(a), a < 0), letters)
    return FreeWord(letters)


# -- semidirect products ------------------------------------------------------------


def _semidirect_generators(kind: str, n: int) -> list[tuple[FreeWord, tuple[int, ...]]]:
    """Generators of type ``B_n`` / ``D_n`` Artin groups inside ``F ⋊ B_n``."""
    if kind == "B":
        gens = [(FreeWord.gen(1), ())]
        gens += [(FreeWord(), (i - 1,)) for i in range(2, n + 1)]
        return gens
    # D_n: the two leaves sit over σ_1, one twisted by y_1
    gens = [(FreeWord(), (1,)), (FreeWord.gen(1), (1,))]
    gens += [(FreeWord(), (i - 1,)) for i in range(3, n + 1)]
    return gens


def semidirect_relation_check(kind: str, n: int) -> dict:
    """Check every Artin relation of type ``B_n`` or ``D_n`` on explicit
    generators of ``F_n ⋊_ρ B_n`` (resp. ``F_{n-1} ⋊_{ρ_D} B_n``).

    Elements are pairs ``(u, β)`` multiplied by ``(u, a)(v, b) = (u ρ(a)(v), ab)``.
    """
    from ..artin import alternating, braid_structure
    from ..coxeter import build_graph
    from ..garside import word_problem

    kind = kind.upper()
    if kind not in ("B", "D"):
        raise BadParameter("kind must be 'B' or 'D'")
    if kind == "B" and not 2 <= n <= 8:
        raise OutOfRange("type B check needs 2 <= n <= 8")
    if kind == "D" and not 4 <= n <= 8:
        raise OutOfRange("type D check needs 4 <= n <= 8")
    act = artin_rep_apply if kind == "B" else rho_d_apply
    graph = build_graph(f"{kind}{n}")
    gens = _semidirect_generators(kind, n)
    G = braid_structure(n)

    def mul(p, q):
        (u, a), (v, b) = p, q
        return (u * act(n, a, v), a + b)

    def prod(word):
        acc = (FreeWord(), ())
        for i in word:
            acc = mul(acc, gens[i])
        return acc

    failures = []
    checked = 0
    for s in range(n):
        for t in range(s + 1, n):
            m = graph.matrix[s][t]
            lhs, rhs = prod(alternating(s, t, m)), prod(alternating(t, s, m))
            checked += 1
            same_free = lhs[0] == rhs[0]
            same_braid = word_problem(G, lhs[1] + tuple(-a for a in reversed(rhs[1])))
            if not (same_free and same_braid):
                failures.append({"pair": [graph.vertices[s], graph.vertices[t]], "label": m})
    return {"kind": kind, "n": n, "checked": checked, "ok": not failures, "failures": failures}


# -- abelian characters ----------------------------------------------------------------


def abelian_character(graph, weights: Mapping, word: Sequence[int]) -> int:
    """Signed weight sum of a word; ``weights`` maps vertex names (or indices) to integers.

    Weights must agree across every odd-labelled edge, otherwise the map is
    not a homomorphism.
    """
    w = [0] * graph.rank
    for key, val in weights.items():
        idx = key if isinstance(key, int) else graph.index(key)
        w[idx] = int(val)
    for a, b, m in graph.edges():
        if m != float("inf") and m % 2 == 1:
            i, j = graph.index(a), graph.index(b)
            if w[i] != w[j]:
                raise NotAHomomorphism(f"weights differ across the odd edge {a}-{b} (label {m})")
    total = 0
    for x in word:
        if x == 0 or abs(x) > graph.rank:
            raise OutOfRange(f"letter {x} out of range")
        total += w[abs(x) - 1] if x > 0 else -w[abs(x) - 1]
    return total


def b_type_character(n: int):
    """The character of ``G_{B_n}`` sending the first generator to 1 and the rest to 0."""
    from ..coxeter import build_graph

    graph = build_graph(f"B{n}")
    return graph, {graph.vertices[0]: 1}
