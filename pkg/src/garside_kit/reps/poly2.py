"""Exact polynomials in two commuting variables ``x`` and ``y`` over Q."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping


class Poly2:
    """Sparse ``{(i, j): c}`` for ``sum c x^i y^j``; zero terms are never stored."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[k] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def const(cls, c) -> "Poly2":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "Poly2":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "Poly2":
        return cls({(0, 1): 1})

    @classmethod
    def in_y(cls, coeffs: Iterable) -> "Poly2":
        """``c0 + c1 y + c2 y^2 + ...``."""
        return cls({(0, j): c for j, c in enumerate(coeffs)})

    @classmethod
    def parse(cls, text: str) -> "Poly2":
        """Inverse of ``str``: sums of terms like ``3/2*x*y^2``, ``-y`` or ``7``."""
        src = text.replace(" ", "")
        if not src or re.search(r"\^(?!\d)|[+-]$", src):
            raise ValueError(f"cannot parse polynomial {text!r}")
        terms: dict[tuple[int, int], Fraction] = {}
        for m in re.finditer(r"([+-]?)([^+-]+)", src):
            sign, body = m.group(1), m.group(2)
            c, i, j = Fraction(-1 if sign == "-" else 1), 0, 0
            for factor in body.split("*"):
                base, _, exp = factor.partition("^")
                e = int(exp) if exp else 1
                if base == "x":
                    i += e
                elif base == "y":
                    j += e
                else:
                    c *= Fraction(base) ** e
            terms[(i, j)] = terms.get((i, j), 0) + c
        return cls(terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> "Poly2":
        return other if isinstance(other, Poly2) else Poly2.const(other)

    def __add__(self, other) -> "Poly2":
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Poly2(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly2":
        return Poly2({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "Poly2":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly2":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly2":
        other = self._coerce(other)
        out: dict = {}
        for (a, b), c in self.terms.items():
            for (d, e), f in other.terms.items():
                k = (a + d, b + e)
                out[k] = out.get(k, 0) + c * f
        return Poly2(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly2):
            other = Poly2.const(other)
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), kv[0])):
            mono = "*".join(v + (f"^{e}" if e > 1 else "") for v, e in (("x", i), ("y", j)) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


ZERO = Poly2()
ONE = Poly2.const(1)


def mat_mul(A: list[list[Poly2]], B: list[list[Poly2]]) -> list[list[Poly2]]:
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    out = [[ZERO] * p for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for k in range(m):
            a = Ai[k]
            if a.is_zero():
                continue
            Bk = B[k]
            for j in range(p):
                b = Bk[j]
                if not b.is_zero():
                    row[j] = row[j] + a * b
    return out


def mat_identity(n: int) -> list[list[Poly2]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_key(A: list[list[Poly2]]) -> tuple:
    return tuple(tuple(row) for row in A)


def determinant(A: list[list[Poly2]]) -> Poly2:
    """Cofactor expansion along the sparsest row (matrices here are small)."""
    n = len(A)
    if n == 0:
        return ONE
    if n == 1:
        return A[0][0]
    r = min(range(n), key=lambda i: sum(not e.is_zero() for e in A[i]))
    total = ZERO
    for j, e in enumerate(A[r]):
        if e.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for k, row in enumerate(A) if k != r]
        term = e * determinant(minor)
        total = total + (term if (r + j) % 2 == 0 else -term)
    return total
