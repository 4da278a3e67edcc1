"""Cyclic sliding, sliding circuits and the conjugacy decision procedure."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..config import SC_BUDGET
from ..errors import BudgetExceeded
from .elements import (
    GarsideElement,
    conjugate,
    identity,
    inverse,
    multiply,
    simple_element,
)


def initial_factor(x: GarsideElement):
    """``i(x) = τ^p(a_1)`` (identity when there are no factors)."""
    G = x.structure
    if not x.factors:
        return G.identity
    return G.tau_pow(x.factors[0], x.delta_power)


def final_factor(x: GarsideElement):
    """``t(x) = a_r``."""
    G = x.structure
    return x.factors[-1] if x.factors else G.delta


def preferred_prefix(x: GarsideElement):
    """``π(x) = i(x) ∧_L ∂_R(t(x))``, cross-checked against ``i(x) ∧_L i(x^-1)``."""
    G = x.structure
    if not x.factors:
        return G.identity
    ix = initial_factor(x)
    p1 = G.meet_left(ix, G.d_right(final_factor(x)))
    p2 = G.meet_left(ix, initial_factor(inverse(x)))
    if p1 != p2:
        raise AssertionError("the two expressions of the preferred prefix disagree")
    return p1


def cyclic_sliding(x: GarsideElement) -> GarsideElement:
    """``S(x) = π(x)^-1 x π(x)``; the identity map on pure Δ-powers."""
    G = x.structure
    if not x.factors:
        return x
    return conjugate(x, simple_element(G, preferred_prefix(x)))


def _slide_with_conjugator(x: GarsideElement) -> tuple[GarsideElement, GarsideElement]:
    G = x.structure
    if not x.factors:
        return x, identity(G)
    c = simple_element(G, preferred_prefix(x))
    return conjugate(x, c), c


def to_circuit(x: GarsideElement, budget: int = SC_BUDGET) -> tuple[GarsideElement, GarsideElement]:
    """Iterate sliding until an element repeats; returns ``(y, c)`` with ``c^-1 x c = y`` in SC(x)."""
    seen: dict[GarsideElement, GarsideElement] = {}
    c = identity(x.structure)
    cur = x
    while cur not in seen:
        if len(seen) > budget:
            raise BudgetExceeded("sliding did not cycle within budget")
        seen[cur] = c
        cur, step = _slide_with_conjugator(cur)
        c = multiply(c, step)
    # cur is periodic: it recurs under S
    return cur, seen[cur]


def in_sliding_circuit(x: GarsideElement, budget: int = SC_BUDGET) -> bool:
    """``x`` recurs under iterated sliding."""
    seen = {x}
    cur = x
    for _ in range(budget):
        cur = cyclic_sliding(cur)
        if cur == x:
            return True
        if cur in seen:
            return False
        seen.add(cur)
    raise BudgetExceeded("sliding orbit exceeded budget")


@dataclass
class SlidingCircuits:
    """``SC(x)`` with a conjugator from the base point to every member."""

    base: GarsideElement
    witness: dict = field(default_factory=dict)

    @property
    def elements(self) -> set:
        return set(self.witness)

    def __contains__(self, y) -> bool:
        return y in self.witness

    def __len__(self) -> int:
        return len(self.witness)


def sliding_circuits(x: GarsideElement, budget: int = SC_BUDGET) -> SlidingCircuits:
    """All of ``SC(x)``, explored by conjugating members by every simple."""
    G = x.structure
    base, _ = to_circuit(x, budget)
    sc = SlidingCircuits(base, {base: identity(G)})
    queue = deque([base])
    simples = [a for a in G.simples() if not G.is_identity(a)]
    while queue:
        y = queue.popleft()
        wy = sc.witness[y]
        for a in simples:
            s = simple_element(G, a)
            z = conjugate(y, s)
            if z in sc.witness or z.canonical_length != y.canonical_length or z.inf != y.inf:
                continue
            if in_sliding_circuit(z, budget):
                sc.witness[z] = multiply(wy, s)
                if len(sc.witness) > budget:
                    raise BudgetExceeded(f"SC exceeds {budget} elements")
                queue.append(z)
    return sc


def conjugacy_test(x: GarsideElement, y: GarsideElement, budget: int = SC_BUDGET):
    """Decide whether ``y = c^-1 x c`` for some ``c``; returns ``(answer, c or None)``."""
    x0, cx = to_circuit(x, budget)
    y0, cy = to_circuit(y, budget)
    if x0.inf != y0.inf or x0.canonical_length != y0.canonical_length:
        return False, None
    sc = sliding_circuits(x0, budget)
    if y0 not in sc:
        return False, None
    # c^-1 x c = y with c = cx · w · cy^-1
    c = multiply(multiply(cx, multiply(inverse(sc.witness[sc.base]), sc.witness[y0])), inverse(cy))
    if conjugate(x, c) != y:
        raise AssertionError("conjugator failed verification")
    return True, c
