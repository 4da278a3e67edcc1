"""Left-greedy normal forms and group arithmetic over a Garside structure.

A group element is ``Δ^p a_1 ... a_r`` with each ``a_i`` a simple different from
1 and Δ, and every adjacent pair left-weighted.  Products are computed by
appending simples and re-weighting from the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .structure import GarsideStructure, Simple


@dataclass(frozen=True)
class GarsideElement:
    """``Δ^delta_power · factors`` in Δ-normal form."""

    structure: GarsideStructure
    delta_power: int
    factors: tuple

    @property
    def inf(self) -> int:
        return self.delta_power

    @property
    def sup(self) -> int:
        return self.delta_power + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def is_positive(self) -> bool:
        return self.delta_power >= 0

    def __mul__(self, other: "GarsideElement") -> "GarsideElement":
        return multiply(self, other)

    def inverse(self) -> "GarsideElement":
        return inverse(self)

    def __pow__(self, k: int) -> "GarsideElement":
        G = self.structure
        result = identity(G)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, GarsideElement):
            return NotImplemented
        return (
            self.structure is other.structure
            and self.delta_power == other.delta_power
            and self.factors == other.factors
        )

    def __hash__(self) -> int:
        return hash((self.delta_power, self.factors))

    def factor_words(self) -> list[tuple[int, ...]]:
        return [self.structure.word(a) for a in self.factors]

    def signed_word(self) -> tuple[int, ...]:
        """A signed atom word representing the element."""
        G = self.structure
        dw = tuple(i + 1 for i in G.word(G.delta))
        if self.delta_power >= 0:
            head = dw * self.delta_power
        else:
            head = tuple(-x for x in reversed(dw)) * (-self.delta_power)
        return head + tuple(i + 1 for a in self.factors for i in G.word(a))

    def __str__(self) -> str:
        parts = [f"Δ^{self.delta_power}"] if self.delta_power or not self.factors else []
        parts += ["(" + " ".join(str(i + 1) for i in w) + ")" for w in self.factor_words()]
        return " ".join(parts)


def identity(G: GarsideStructure) -> GarsideElement:
    return GarsideElement(G, 0, ())


def delta_power(G: GarsideStructure, k: int) -> GarsideElement:
    return GarsideElement(G, k, ())


# -- left weighting --------------------------------------------------------


def left_weight(G: GarsideStructure, a: Simple, b: Simple) -> tuple[Simple, Simple]:
    """Rewrite the pair ``(a, b)`` so that it is left-weighted (same product)."""
    if G.is_left_weighted(a, b):
        return a, b
    c = G.meet_left(G.d_right(a), b)
    return G.mul(a, c), G.left_quotient(c, b)


def _append(G: GarsideStructure, factors: list, x: Simple) -> None:
    """Append simple ``x`` to a left-weighted list and restore the invariant."""
    if G.is_identity(x):
        return
    factors.append(x)
    i = len(factors) - 1
    while i > 0:
        a, b = factors[i - 1], factors[i]
        a2, b2 = left_weight(G, a, b)
        if a2 == a:
            break
        factors[i - 1], factors[i] = a2, b2
        i -= 1
    while factors and G.is_identity(factors[-1]):
        factors.pop()


def sweep_to_fixpoint(G: GarsideStructure, factors: Sequence[Simple]) -> list:
    """Left-weight adjacent pairs in right-to-left sweeps until nothing changes."""
    f = [a for a in factors if not G.is_identity(a)]
    changed = True
    while changed:
        changed = False
        for i in range(len(f) - 1, 0, -1):
            a2, b2 = left_weight(G, f[i - 1], f[i])
            if a2 != f[i - 1]:
                f[i - 1], f[i] = a2, b2
                changed = True
        f = [a for a in f if not G.is_identity(a)]
    return f


def _normalize(G: GarsideStructure, p: int, factors: list) -> GarsideElement:
    k = 0
    while k < len(factors) and G.is_delta(factors[k]):
        k += 1
    return GarsideElement(G, p + k, tuple(factors[k:]))


def from_positive_simples(G: GarsideStructure, simples: Iterable[Simple]) -> GarsideElement:
    factors: list = []
    for x in simples:
        _append(G, factors, x)
    return _normalize(G, 0, factors)


def monoid_normal_form(G: GarsideStructure, word: Sequence[int]) -> GarsideElement:
    """Left-greedy normal form of a positive atom word (Δ factors kept as ``delta_power``)."""
    return from_positive_simples(G, (G.atom(i) for i in word))


def normal_form_factors(G: GarsideStructure, word: Sequence[int]) -> list:
    """Left-greedy factors of a positive word, leading Δ's included."""
    e = monoid_normal_form(G, word)
    return [G.delta] * e.delta_power + list(e.factors)


def delta_normal_form(G: GarsideStructure, word: Sequence[int]) -> GarsideElement:
    """Δ-normal form of a signed atom word (``i+1`` / ``-(i+1)``)."""
    p = 0
    factors: list = []
    for x in word:
        if x > 0:
            _append(G, factors, G.atom(x - 1))
        else:
            # F a^-1 = Δ^-1 τ(F) ∂_L(a)
            a = G.atom(-x - 1)
            p -= 1
            factors = [G.tau(b) for b in factors]
            _append(G, factors, G.d_left(a))
        while factors and G.is_delta(factors[0]):
            factors.pop(0)
            p += 1
    return GarsideElement(G, p, tuple(factors))


def multiply(x: GarsideElement, y: GarsideElement) -> GarsideElement:
    """``Δ^p A · Δ^q B = Δ^(p+q) τ^(-q)(A) B``."""
    G = x.structure
    q = y.delta_power
    factors = [G.tau_pow(a, -q) for a in x.factors] if q else list(x.factors)
    for b in y.factors:
        _append(G, factors, b)
    p = x.delta_power + q
    k = 0
    while k < len(factors) and G.is_delta(factors[k]):
        k += 1
    return GarsideElement(G, p + k, tuple(factors[k:]))


def simple_element(G: GarsideStructure, a: Simple) -> GarsideElement:
    if G.is_delta(a):
        return GarsideElement(G, 1, ())
    if G.is_identity(a):
        return identity(G)
    return GarsideElement(G, 0, (a,))


def simple_inverse(G: GarsideStructure, a: Simple) -> GarsideElement:
    """``a^-1 = Δ^-1 ∂_L(a)``."""
    return multiply(delta_power(G, -1), simple_element(G, G.d_left(a)))


def inverse(x: GarsideElement) -> GarsideElement:
    G = x.structure
    result = delta_power(G, -x.delta_power)
    for a in x.factors:
        result = multiply(simple_inverse(G, a), result)
    return result


def conjugate(x: GarsideElement, c: GarsideElement) -> GarsideElement:
    """``c^-1 x c``."""
    return multiply(multiply(inverse(c), x), c)


def from_signed(G: GarsideStructure, word: Sequence[int]) -> GarsideElement:
    return delta_normal_form(G, word)


def is_trivial(G: GarsideStructure, word: Sequence[int]) -> bool:
    return delta_normal_form(G, word).is_identity()


def head(G: GarsideStructure, word: Sequence[int]) -> Simple:
    """``δ(α)``, the greatest simple left divisor of a positive word."""
    e = monoid_normal_form(G, word)
    if e.delta_power:
        return G.delta
    return e.factors[0] if e.factors else G.identity


# -- lattices ---------------------------------------------------------------


def _left_divide_simple(G: GarsideStructure, d: Simple, x: GarsideElement) -> GarsideElement:
    """``d^-1 x`` for a simple ``d`` that left-divides positive ``x``."""
    return multiply(simple_inverse(G, d), x)


def _first_simple(G: GarsideStructure, x: GarsideElement) -> Simple:
    if x.delta_power > 0:
        return G.delta
    return x.factors[0] if x.factors else G.identity


def _positive_meet(G: GarsideStructure, x: GarsideElement, y: GarsideElement) -> GarsideElement:
    out: list = []
    while True:
        d = G.meet_left(_first_simple(G, x), _first_simple(G, y))
        if G.is_identity(d):
            return from_positive_simples(G, out)
        out.append(d)
        x = _left_divide_simple(G, d, x)
        y = _left_divide_simple(G, d, y)


def _expand(G: GarsideStructure, x: GarsideElement) -> list:
    return [G.delta] * x.delta_power + list(x.factors)


def _residual(G: GarsideStructure, U: list, V: list) -> tuple[list, list]:
    """``(U\\V, V\\U)`` where ``U\\V = U^-1 (U ∨_L V)``, over lists of simples."""
    U = [a for a in U if not G.is_identity(a)]
    V = [b for b in V if not G.is_identity(b)]
    if not U:
        return V, []
    if not V:
        return [], U
    if len(U) == 1 and len(V) == 1:
        a, b = U[0], V[0]
        j = G.join_left(a, b)
        return [G.left_quotient(a, j)], [G.left_quotient(b, j)]
    if len(U) > 1:
        X, Y = _residual(G, U[:1], V)
        Z, W = _residual(G, U[1:], X)
        return Z, Y + W
    P, Q = _residual(G, U, V[:1])
    R, S = _residual(G, Q, V[1:])
    return P + R, S


def _positive_join(G: GarsideStructure, x: GarsideElement, y: GarsideElement) -> GarsideElement:
    U, V = _expand(G, x), _expand(G, y)
    resid, _ = _residual(G, U, V)
    return multiply(x, from_positive_simples(G, resid))


def lattice_meet(x: GarsideElement, y: GarsideElement, side: str = "L") -> GarsideElement:
    """Greatest common lower bound for ``≤_L`` (prefix) or ``≤_R`` (suffix) order."""
    G = x.structure
    if side == "R":
        return inverse(lattice_join(inverse(x), inverse(y), "L"))
    m = min(x.delta_power, y.delta_power)
    shift = delta_power(G, -m)
    res = _positive_meet(G, multiply(shift, x), multiply(shift, y))
    return multiply(delta_power(G, m), res)


def lattice_join(x: GarsideElement, y: GarsideElement, side: str = "L") -> GarsideElement:
    """Least common upper bound for ``≤_L`` or ``≤_R``."""
    G = x.structure
    if side == "R":
        return inverse(lattice_meet(inverse(x), inverse(y), "L"))
    m = min(x.delta_power, y.delta_power)
    shift = delta_power(G, -m)
    res = _positive_join(G, multiply(shift, x), multiply(shift, y))
    return multiply(delta_power(G, m), res)


def le_left(x: GarsideElement, y: GarsideElement) -> bool:
    """``x^-1 y`` is positive."""
    return multiply(inverse(x), y).delta_power >= 0


def le_right(x: GarsideElement, y: GarsideElement) -> bool:
    """``y x^-1`` is positive."""
    return multiply(y, inverse(x)).delta_power >= 0
