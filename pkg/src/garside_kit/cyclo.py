"""Exact arithmetic in the real cyclotomic field Q(2cos(pi/L)).

An element is a rational polynomial in the generator ``t = 2cos(pi/L)`` reduced
modulo the minimal polynomial of ``t``.  Equality is decided on the reduced
coefficients; signs are decided by evaluating on the real embedding, first with
a guarded float evaluation and, when that is inconclusive, on shrinking
rational intervals around ``t``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


def _poly_divmod_int(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (coefficients low to high)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(q) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("nonzero remainder")
    return q


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divmod_int(poly, list(cyclotomic(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def minimal_polynomial(L: int) -> tuple[int, ...]:
    """Minimal polynomial (low to high, monic) of ``2cos(pi/L)``.

    Obtained from the palindromic cyclotomic polynomial of order ``2L`` by the
    substitution ``z^k + z^-k = V_k(z + 1/z)``.
    """
    if L < 2:
        raise ValueError("L must be at least 2")
    phi = cyclotomic(2 * L)
    m = (len(phi) - 1) // 2
    # V_0 = 2, V_1 = x, V_k = x V_{k-1} - V_{k-2}
    V: list[list[int]] = [[2], [0, 1]]
    for _ in range(2, m + 1):
        a = [0] + V[-1]
        b = V[-2] + [0] * (len(a) - len(V[-2]))
        V.append([x - y for x, y in zip(a, b)])
    out = [0] * (m + 1)
    out[0] += phi[m]
    for k in range(1, m + 1):
        for i, c in enumerate(V[k]):
            out[i] += phi[m + k] * c
    return tuple(out)


class RealCyclotomicField:
    """The field Q(t) with t = 2cos(pi/L); instances are cached per L."""

    _instances: dict[int, "RealCyclotomicField"] = {}

    def __new__(cls, L: int):
        inst = cls._instances.get(L)
        if inst is None:
            inst = super().__new__(cls)
            inst._setup(L)
            cls._instances[L] = inst
        return inst

    def _setup(self, L: int) -> None:
        self.L = L
        self.minpoly = minimal_polynomial(L)
        self.degree = len(self.minpoly) - 1
        d = self.degree
        # t^k for d <= k <= 2d-2 as reduced coefficient vectors
        self._reduce: list[tuple[Fraction, ...]] = []
        cur = [Fraction(-c) for c in self.minpoly[:-1]]  # t^d
        for _ in range(max(0, d - 1)):
            self._reduce.append(tuple(cur))
            # multiply by t
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            for i in range(d):
                cur[i] -= top * self.minpoly[i]
        self.approx = 2.0 * math.cos(math.pi / L)
        self._interval = self._initial_interval()
        self.zero = CycloReal(self, (Fraction(0),) * d)
        self.one = self.from_rational(1)
        self.t = self.from_coeffs([0, 1]) if d > 1 else self.from_rational(Fraction(self.approx).limit_denominator(1))

    def __repr__(self) -> str:
        return f"RealCyclotomicField({self.L})"

    def __reduce__(self):
        return (RealCyclotomicField, (self.L,))

    # -- construction -------------------------------------------------
    def from_rational(self, q) -> "CycloReal":
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(q)
        return CycloReal(self, tuple(coeffs))

    def from_coeffs(self, coeffs: Iterable) -> "CycloReal":
        return CycloReal(self, self._reduce_poly([Fraction(c) for c in coeffs]))

    def two_cos(self, k: int) -> "CycloReal":
        """``2cos(k*pi/L)`` as a field element (Chebyshev recursion in t)."""
        k = abs(k)
        if self.degree == 1:
            # L == 2, t == 0
            return self.from_rational(round(2 * math.cos(k * math.pi / 2)))
        prev, cur = self.from_rational(2), self.t
        if k == 0:
            return prev
        for _ in range(k - 1):
            prev, cur = cur, cur * self.t - prev
        return cur

    def cos_pi_over(self, m: int) -> "CycloReal":
        """``cos(pi/m)``; requires ``m`` to divide ``L``."""
        if self.L % m:
            raise ValueError(f"{m} does not divide {self.L}")
        return self.two_cos(self.L // m) * Fraction(1, 2)

    def parse(self, text: str) -> "CycloReal":
        """Inverse of ``str``: accepts sums of ``c``, ``c*t``, ``c*t^k`` terms."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar")
        coeffs: dict[int, Fraction] = {}
        for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
            if "t" in body:
                if "*" in body:
                    c, _, tp = body.partition("*")
                    coef = Fraction(c)
                else:
                    tp, coef = body, Fraction(1)
                power = int(tp.split("^")[1]) if "^" in tp else 1
            else:
                coef, power = Fraction(body), 0
            if sign == "-":
                coef = -coef
            coeffs[power] = coeffs.get(power, Fraction(0)) + coef
        vec = [Fraction(0)] * (max(coeffs) + 1)
        for p, c in coeffs.items():
            vec[p] = c
        return self.from_coeffs(vec)

    # -- internals ----------------------------------------------------
    def _reduce_poly(self, poly: list[Fraction]) -> tuple[Fraction, ...]:
        d = self.degree
        out = list(poly[:d]) + [Fraction(0)] * max(0, d - len(poly))
        for k in range(d, len(poly)):
            c = poly[k]
            if c:
                if k - d < len(self._reduce):
                    red = self._reduce[k - d]
                else:
                    red = self._power(k)
                for i in range(d):
                    out[i] += c * red[i]
        return tuple(out)

    def _power(self, k: int) -> tuple[Fraction, ...]:
        vec = [Fraction(0)] * self.degree
        vec[0] = Fraction(1)
        acc = CycloReal(self, tuple(vec))
        for _ in range(k):
            acc = acc * self.t
        return acc.coeffs

    def _minpoly_value(self, x: Fraction) -> Fraction:
        v = Fraction(0)
        for c in reversed(self.minpoly):
            v = v * x + c
        return v

    def _initial_interval(self) -> tuple[Fraction, Fraction]:
        if self.degree == 1:
            t = Fraction(-self.minpoly[0], self.minpoly[1])
            return (t, t)
        eps = Fraction(1, 10**12)
        center = Fraction(self.approx)
        lo, hi = center - eps, center + eps
        if self._minpoly_value(lo) * self._minpoly_value(hi) >= 0:
            raise ArithmeticError("failed to isolate 2cos(pi/L)")
        return (lo, hi)

    def refine(self) -> tuple[Fraction, Fraction]:
        lo, hi = self._interval
        if lo == hi:
            return self._interval
        mid = (lo + hi) / 2
        flo, fmid = self._minpoly_value(lo), self._minpoly_value(mid)
        if fmid == 0:
            self._interval = (mid, mid)
        elif (flo < 0) == (fmid < 0):
            self._interval = (mid, hi)
        else:
            self._interval = (lo, mid)
        return self._interval


def _interval_eval(coeffs: Sequence[Fraction], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Interval Horner evaluation; valid for 0 <= lo <= hi or any real interval."""
    rlo = rhi = Fraction(0)
    for c in reversed(coeffs):
        cands = (rlo * lo, rlo * hi, rhi * lo, rhi * hi)
        rlo, rhi = min(cands) + c, max(cands) + c
    return rlo, rhi


class CycloReal:
    """An element of ``RealCyclotomicField(L)``; immutable and hashable."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: RealCyclotomicField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "CycloReal":
        if isinstance(other, CycloReal):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloReal(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloReal(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloReal(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloReal(self.field, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloReal(self.field, self.field._reduce_poly(prod))

    __rmul__ = __mul__

    def inverse(self) -> "CycloReal":
        """Field inverse, by solving the linear system of multiplication by ``self``."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        K = self.field
        d = K.degree
        if d == 1:
            return K.from_rational(1 / self.coeffs[0])
        cols = [(self * K.from_coeffs([0] * j + [1])).coeffs for j in range(d)]
        M = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for k in range(d):
            p = next(i for i in range(k, d) if M[i][k] != 0)
            M[k], M[p] = M[p], M[k]
            pv = M[k][k]
            M[k] = [v / pv for v in M[k]]
            for i in range(d):
                if i != k and M[i][k] != 0:
                    f = M[i][k]
                    M[i] = [a - f * b for a, b in zip(M[i], M[k])]
        return K.from_coeffs([M[i][d] for i in range(d)])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloReal(self.field, tuple(a / other for a in self.coeffs))
        return self * self._coerce(other).inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloReal):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.L, self.coeffs))
        return self._hash

    # -- order --------------------------------------------------------
    def sign(self) -> int:
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.coeffs[0] > 0 else -1
        t = self.field.approx
        val = 0.0
        bound = 0.0
        for c in reversed(self.coeffs):
            val = val * t + float(c)
            bound = bound * 2.0 + abs(float(c))
        if abs(val) > bound * 1e-11:
            return 1 if val > 0 else -1
        while True:
            lo, hi = self.field._interval
            rlo, rhi = _interval_eval(self.coeffs, lo, hi)
            if rlo > 0:
                return 1
            if rhi < 0:
                return -1
            self.field.refine()

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        t = self.field.approx
        v = 0.0
        for c in reversed(self.coeffs):
            v = v * t + float(c)
        return v

    def __str__(self) -> str:
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                tp = "t" if k == 1 else f"t^{k}"
                body = tp if mag == 1 else f"{mag}*{tp}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"CycloReal(L={self.field.L}, {self})"
