"""Garside structures: the finite lattice of simple elements.

Generic algorithms (normal forms, lattices, sliding) only talk to a structure
through the methods of :class:`GarsideStructure`; simples are opaque hashable
values.  Two concrete structures are provided: one backed by the tables of a
finite Coxeter group (simples are table ids), and a permutation-native one for
braid groups (simples are permutations).
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from functools import lru_cache
from typing import Hashable, Iterable, Sequence

Simple = Hashable


class GarsideStructure(ABC):
    """Finite lattice of simples with the operations the algorithms need."""

    #: number of atoms; atoms are addressed by index ``0..n_atoms-1``
    n_atoms: int
    identity: Simple
    delta: Simple
    #: optional reversing complements (left ``f``, right ``g``)
    left_complement = None
    right_complement = None

    @abstractmethod
    def atom(self, i: int) -> Simple: ...

    @abstractmethod
    def word(self, a: Simple) -> tuple[int, ...]:
        """A (canonical) atom word for the simple ``a``."""

    @abstractmethod
    def norm(self, a: Simple) -> int: ...

    @abstractmethod
    def mul(self, a: Simple, b: Simple) -> Simple | None:
        """``a*b`` when it is simple, else ``None``."""

    @abstractmethod
    def left_quotient(self, a: Simple, b: Simple) -> Simple:
        """``a^-1 b`` for ``a <=_L b``."""

    @abstractmethod
    def right_quotient(self, b: Simple, a: Simple) -> Simple:
        """``b a^-1`` for ``a <=_R b``."""

    @abstractmethod
    def d_left(self, a: Simple) -> Simple:
        """``∂_L(a)`` with ``∂_L(a) a = Δ``."""

    @abstractmethod
    def d_right(self, a: Simple) -> Simple:
        """``∂_R(a)`` with ``a ∂_R(a) = Δ``."""

    @abstractmethod
    def tau(self, a: Simple) -> Simple:
        """``Δ a Δ^-1``."""

    @abstractmethod
    def tau_inv(self, a: Simple) -> Simple: ...

    @abstractmethod
    def meet_left(self, a: Simple, b: Simple) -> Simple: ...

    @abstractmethod
    def join_left(self, a: Simple, b: Simple) -> Simple: ...

    @abstractmethod
    def meet_right(self, a: Simple, b: Simple) -> Simple: ...

    @abstractmethod
    def join_right(self, a: Simple, b: Simple) -> Simple: ...

    @abstractmethod
    def simples(self) -> Iterable[Simple]: ...

    # -- derived ------------------------------------------------------
    def is_identity(self, a: Simple) -> bool:
        return a == self.identity

    def is_delta(self, a: Simple) -> bool:
        return a == self.delta

    def tau_pow(self, a: Simple, k: int) -> Simple:
        order = self.tau_order()
        k %= order
        for _ in range(k):
            a = self.tau(a)
        return a

    def tau_order(self) -> int:
        return 2

    def le_left(self, a: Simple, b: Simple) -> bool:
        return self.meet_left(a, b) == a

    def le_right(self, a: Simple, b: Simple) -> bool:
        return self.meet_right(a, b) == a

    def is_left_weighted(self, a: Simple, b: Simple) -> bool:
        return self.is_identity(self.meet_left(self.d_right(a), b))

    def simple_from_word(self, letters: Sequence[int]) -> Simple:
        """Simple represented by a positive atom word; raises if not simple."""
        x = self.identity
        for i in letters:
            y = self.mul(x, self.atom(i))
            if y is None:
                raise ValueError("word does not represent a simple element")
            x = y
        return x

    def n_simples(self) -> int:
        return sum(1 for _ in self.simples())


class CoxeterGarside(GarsideStructure):
    """Simples ``κ(w)`` for ``w`` in a finite Coxeter group, as table ids."""

    def __init__(self, table, left_complement=None, right_complement=None):
        self.table = t = table
        self.graph = table.graph
        self.n_atoms = table.graph.rank
        self.identity = 0
        self.delta = t.w0
        self.left_complement = left_complement
        self.right_complement = right_complement
        self._atoms = [t.left[s][0] for s in range(self.n_atoms)]
        self._dl = [t.w0_times(t.inv[a]) for a in range(t.size)]
        self._dr = [t.inv[t.w0_times(a)] for a in range(t.size)]
        self._tau = [t.times_w0(t.w0_times(a)) for a in range(t.size)]
        order, x = 1, self._tau
        while any(x[a] != a for a in range(t.size)):
            x = [self._tau[v] for v in x]
            order += 1
        self._tau_order = order
        inv_tau = [0] * t.size
        for a, b in enumerate(self._tau):
            inv_tau[b] = a
        self._tau_inv = inv_tau

    def atom(self, i: int) -> int:
        return self._atoms[i]

    def word(self, a: int) -> tuple[int, ...]:
        return self.table.word(a)

    def norm(self, a: int) -> int:
        return self.table.length[a]

    def mul(self, a: int, b: int) -> int | None:
        t = self.table
        c = t.mul(a, b)
        return c if t.length[c] == t.length[a] + t.length[b] else None

    def left_quotient(self, a: int, b: int) -> int:
        t = self.table
        return t.mul(t.inv[a], b)

    def right_quotient(self, b: int, a: int) -> int:
        t = self.table
        return t.mul(b, t.inv[a])

    def d_left(self, a: int) -> int:
        return self._dl[a]

    def d_right(self, a: int) -> int:
        return self._dr[a]

    def tau(self, a: int) -> int:
        return self._tau[a]

    def tau_inv(self, a: int) -> int:
        return self._tau_inv[a]

    def tau_order(self) -> int:
        return self._tau_order

    def meet_left(self, a: int, b: int) -> int:
        return self.table.meet_left(a, b)

    def join_left(self, a: int, b: int) -> int:
        return self.table.join_left(a, b)

    def meet_right(self, a: int, b: int) -> int:
        return self.table.meet_right(a, b)

    def join_right(self, a: int, b: int) -> int:
        return self.table.join_right(a, b)

    def is_left_weighted(self, a: int, b: int) -> bool:
        # every left descent of b must already be a right descent of a
        t = self.table
        return t.ldesc[b] & ~t.rdesc[a] == 0

    def simples(self) -> Iterable[int]:
        return range(self.table.size)

    def n_simples(self) -> int:
        return self.table.size


def _perm_mul(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(u[j] for j in v)


def _perm_inv(u: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(u)
    for j, x in enumerate(u):
        out[x] = j
    return tuple(out)


class PermGarside(GarsideStructure):
    """Braid-group simples as permutations of ``0..n-1`` (positive permutation braids).

    ``p[j]`` is the image of ``j`` and ``(uv)(j) = u(v(j))``; atom ``i`` is the
    transposition of ``i`` and ``i+1``.  No group enumeration is needed.
    """

    def __init__(self, n_strands: int, left_complement=None, right_complement=None):
        n = n_strands
        self.n = n
        self.n_atoms = n - 1
        self.identity = tuple(range(n))
        self.delta = tuple(range(n - 1, -1, -1))
        self.left_complement = left_complement
        self.right_complement = right_complement
        atoms = []
        for i in range(n - 1):
            p = list(range(n))
            p[i], p[i + 1] = p[i + 1], p[i]
            atoms.append(tuple(p))
        self._atoms = atoms
        self._norm_cached = lru_cache(maxsize=1 << 16)(self._norm)
        self._word_cached = lru_cache(maxsize=1 << 16)(self._word)

    def atom(self, i: int):
        return self._atoms[i]

    def norm(self, a) -> int:
        return self._norm_cached(a)

    def word(self, a) -> tuple[int, ...]:
        return self._word_cached(a)

    @staticmethod
    def _norm(a) -> int:
        n = len(a)
        return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])

    def _ldesc(self, a) -> int:
        ai = _perm_inv(a)
        mask = 0
        for i in range(self.n - 1):
            if ai[i] > ai[i + 1]:
                mask |= 1 << i
        return mask

    def _rdesc(self, a) -> int:
        mask = 0
        for i in range(self.n - 1):
            if a[i] > a[i + 1]:
                mask |= 1 << i
        return mask

    def _word(self, a) -> tuple[int, ...]:
        out = []
        while True:
            d = self._ldesc(a)
            if not d:
                return tuple(out)
            i = (d & -d).bit_length() - 1
            out.append(i)
            a = _perm_mul(self._atoms[i], a)

    def mul(self, a, b):
        c = _perm_mul(a, b)
        return c if self.norm(c) == self.norm(a) + self.norm(b) else None

    def left_quotient(self, a, b):
        return _perm_mul(_perm_inv(a), b)

    def right_quotient(self, b, a):
        return _perm_mul(b, _perm_inv(a))

    def d_left(self, a):
        return _perm_mul(self.delta, _perm_inv(a))

    def d_right(self, a):
        return _perm_mul(_perm_inv(a), self.delta)

    def tau(self, a):
        d = self.delta
        return _perm_mul(d, _perm_mul(a, d))

    tau_inv = tau

    def meet_left(self, a, b):
        r = self.identity
        while True:
            common = self._ldesc(a) & self._ldesc(b)
            if not common:
                return r
            i = (common & -common).bit_length() - 1
            s = self._atoms[i]
            a = _perm_mul(s, a)
            b = _perm_mul(s, b)
            r = _perm_mul(r, s)

    def join_left(self, a, b):
        d = self.delta
        return _perm_mul(d, self.meet_left(_perm_mul(d, a), _perm_mul(d, b)))

    def meet_right(self, a, b):
        return _perm_inv(self.meet_left(_perm_inv(a), _perm_inv(b)))

    def join_right(self, a, b):
        return _perm_inv(self.join_left(_perm_inv(a), _perm_inv(b)))

    def is_left_weighted(self, a, b) -> bool:
        return self._ldesc(b) & ~self._rdesc(a) == 0

    def simples(self):
        from itertools import permutations

        return permutations(range(self.n))

    def n_simples(self) -> int:
        from math import factorial

        return factorial(self.n)
