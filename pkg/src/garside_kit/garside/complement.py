"""Complements and word reversing.

Signed words are tuples of non-zero integers: ``i + 1`` stands for atom ``i``
and ``-(i + 1)`` for its inverse.  Positive words are tuples of atom indices.

Left reversing rewrites ``x^-1 y`` into ``f(x, y) f(y, x)^-1`` until the word
has the shape ``v u^-1``; right reversing rewrites ``y x^-1`` into
``g(x, y)^-1 g(y, x)`` until the word has the shape ``u^-1 v``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..config import REVERSING_BUDGET
from ..errors import MalformedSpec, ReversingDiverged, UndecidableWithinBudget

Word = tuple[int, ...]


def pos_letters(word: Sequence[int]) -> Word:
    """Signed encoding of a positive word."""
    return tuple(i + 1 for i in word)


def invert_signed(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def free_reduce(word: Sequence[int]) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class Complement:
    """A map ``(x, y) -> word`` on a finite alphabet ``0..n-1`` with ``f(x, x) = ε``.

    Pairs missing from ``table`` have no complement; reversing through them
    fails with :class:`ReversingDiverged`.
    """

    n: int
    table: Mapping[tuple[int, int], Word]
    _memo: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        for x in range(self.n):
            if self.table.get((x, x), ()) != ():
                raise MalformedSpec(f"complement of ({x}, {x}) must be empty")
        for (x, y), w in self.table.items():
            if not (0 <= x < self.n and 0 <= y < self.n) or any(not 0 <= a < self.n for a in w):
                raise MalformedSpec("complement uses letters outside the alphabet")

    def __call__(self, x: int, y: int) -> Word:
        if x == y:
            return ()
        try:
            return self.table[(x, y)]
        except KeyError:
            raise ReversingDiverged(f"no complement for the pair ({x}, {y})") from None

    def defined(self, x: int, y: int) -> bool:
        return x == y or (x, y) in self.table

    def mirrored(self) -> "Complement":
        """``f'(x, y) = rev(f(y, x))``: right reversing over ``f`` is left reversing over ``f'`` on mirrored words."""
        m = self._memo.get("mirror")
        if m is None:
            m = Complement(self.n, {(x, y): tuple(reversed(self.table[(y, x)])) for (x, y) in self.table})
            self._memo["mirror"] = m
        return m


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps: int):
        self.left = steps

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise ReversingDiverged("reversing step budget exhausted")


def _rev(f: Complement, u: Word, v: Word, budget: _Budget) -> tuple[Word, Word]:
    """Left-reverse ``u^-1 v`` to ``v' u'^-1``; returns ``(v', u')``."""
    if not u:
        return v, ()
    if not v:
        return (), u
    key = (u, v)
    hit = f._memo.get(key)
    if hit is not None:
        return hit
    if len(u) == 1 and len(v) == 1:
        budget.spend()
        res = (f(u[0], v[0]), f(v[0], u[0]))
    elif len(u) > 1:
        v1, x1 = _rev(f, u[:1], v, budget)
        v2, u2 = _rev(f, u[1:], v1, budget)
        res = (v2, x1 + u2)
    else:
        a, b = _rev(f, u, v[:1], budget)
        c, d = _rev(f, b, v[1:], budget)
        res = (a + c, d)
    if len(f._memo) < 200_000:
        f._memo[key] = res
    return res


def _guarded(fn, *args):
    limit = sys.getrecursionlimit()
    if limit < 20_000:
        sys.setrecursionlimit(20_000)
    try:
        return fn(*args)
    except RecursionError:
        raise ReversingDiverged("reversing nested too deeply") from None


def complement_left(f: Complement, u: Sequence[int], v: Sequence[int], budget: int = REVERSING_BUDGET) -> Word:
    """``C_L(u, v)``: the ``v'`` in ``u^-1 v -> v' u'^-1``."""
    return _guarded(_rev, f, tuple(u), tuple(v), _Budget(budget))[0]


def left_reverse_pair(f: Complement, u: Sequence[int], v: Sequence[int], budget: int = REVERSING_BUDGET) -> tuple[Word, Word]:
    """``(C_L(u, v), C_L(v, u))``."""
    return _guarded(_rev, f, tuple(u), tuple(v), _Budget(budget))


def _left_reduce(f: Complement, word: Sequence[int], budget: _Budget) -> tuple[Word, Word]:
    pos: Word = ()
    neg: Word = ()  # the word is pos * neg^-1
    for x in word:
        if x > 0:
            y, neg = _rev(f, neg, (x - 1,), budget)
            pos = pos + y
        else:
            neg = (-x - 1,) + neg
    return pos, neg


def reverse(f: Complement, word: Sequence[int], side: str = "left", budget: int = REVERSING_BUDGET) -> tuple[Word, Word]:
    """Reverse a signed word.

    ``side="left"`` returns ``(v, u)`` with ``word -> v u^-1``;
    ``side="right"`` treats ``f`` as a right complement and returns ``(u, v)``
    with ``word -> u^-1 v``.
    """
    if side == "left":
        return _guarded(_left_reduce, f, tuple(word), _Budget(budget))
    if side == "right":
        # mirror: reversing the letter order turns y x^-1 into x^-1 y
        g = f.mirrored()
        v, u = _guarded(_left_reduce, g, tuple(reversed(word)), _Budget(budget))
        return tuple(reversed(u)), tuple(reversed(v))
    raise ValueError("side must be 'left' or 'right'")


def complement_right(g: Complement, u: Sequence[int], v: Sequence[int], budget: int = REVERSING_BUDGET) -> Word:
    """``C_R(u, v)``: right-reversing ``v u^-1`` gives ``C_R(u, v)^-1 C_R(v, u)``."""
    word = pos_letters(v) + invert_signed(pos_letters(u))
    a, _ = reverse(g, word, "right", budget)
    return a


def reverse_to_signed(pair: tuple[Word, Word], side: str = "left") -> Word:
    a, b = pair
    if side == "left":
        return pos_letters(a) + invert_signed(pos_letters(b))
    return invert_signed(pos_letters(a)) + pos_letters(b)


def is_trivial_by_reversing(f: Complement, word: Sequence[int], budget: int = REVERSING_BUDGET) -> bool:
    """Double reversing: ``word -> v u^-1``, then trivial iff ``u^-1 v -> ε``."""
    v, u = reverse(f, word, "left", budget)
    v2, u2 = left_reverse_pair(f, u, v, budget)
    return not v2 and not u2


def equivalent_by_reversing(f: Complement, u: Sequence[int], v: Sequence[int], budget: int = REVERSING_BUDGET) -> bool:
    return is_trivial_by_reversing(f, pos_letters(u) + invert_signed(pos_letters(v)), budget)


def join_by_reversing(f: Complement, u: Sequence[int], v: Sequence[int], budget: int = REVERSING_BUDGET) -> Word:
    """A word for the left-lcm: ``u C_L(u, v)``."""
    return tuple(u) + complement_left(f, u, v, budget)


def meet_by_reversing(
    f: Complement, g: Complement, u: Sequence[int], v: Sequence[int], budget: int = REVERSING_BUDGET
) -> Word:
    """A word for the left-gcd: ``C_R(u, C_R(v', u'))`` with ``u' = C_L(u, v)``, ``v' = C_L(v, u)``."""
    u1, v1 = left_reverse_pair(f, u, v, budget)
    inner = complement_right(g, v1, u1, budget)
    return complement_right(g, tuple(u), inner, budget)


def check_coherence(f: Complement, side: str = "left", equivalent=None, budget: int = REVERSING_BUDGET) -> bool:
    """Check the coherence condition on every triple of letters.

    ``equivalent(u, v)`` decides equality of positive words; when omitted,
    double reversing over ``f`` is used.  For ``side="right"``, ``f`` is read as
    a right complement and the test runs on its mirror image.
    """
    if side == "right":
        mirrored_eq = None if equivalent is None else (lambda a, b: equivalent(tuple(reversed(a)), tuple(reversed(b))))
        return check_coherence(f.mirrored(), "left", mirrored_eq, budget)
    if equivalent is None:
        def equivalent(a, b):
            try:
                return equivalent_by_reversing(f, a, b, budget)
            except ReversingDiverged:
                raise UndecidableWithinBudget("could not decide equivalence within budget") from None
    n = f.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if len({x, y, z}) < 2:
                    continue
                a = complement_left(f, f(x, y), f(x, z), budget)
                b = complement_left(f, f(y, x), f(y, z), budget)
                if not equivalent(a, b):
                    return False
    return True
