"""Sylvester resultants, discriminants and the configuration-to-polynomial map.

Polynomials are coefficient lists, highest degree first.  Coefficients are
exact: :class:`fractions.Fraction` or :class:`GaussQ` (Gaussian rationals).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConstantPolynomial, DegreeTooLow


@dataclass(frozen=True)
class GaussQ:
    """``re + im·i`` with rational parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def of(cls, z) -> "GaussQ":
        if isinstance(z, GaussQ):
            return z
        if isinstance(z, complex):
            return cls(Fraction(z.real), Fraction(z.imag))
        if isinstance(z, str):
            return cls.parse(z)
        return cls(Fraction(z))

    @classmethod
    def parse(cls, text: str) -> "GaussQ":
        """``"3"``, ``"1/2"``, ``"1+2i"``, ``"-i"``, ``"2/3-1/4i"``."""
        s = text.replace(" ", "").lower().replace("j", "i")
        if not s.endswith("i"):
            return cls(Fraction(s))
        body = s[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        re_part, im_part = (body[:cut], body[cut:]) if cut > 0 else ("0", body)
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        return cls(Fraction(re_part), Fraction(im_part))

    def __add__(self, o):
        o = GaussQ.of(o)
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-GaussQ.of(o))

    def __rsub__(self, o):
        return GaussQ.of(o) - self

    def __mul__(self, o):
        o = GaussQ.of(o)
        return GaussQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = GaussQ.of(o)
        n = o.re * o.re + o.im * o.im
        return GaussQ((self.re * o.re + self.im * o.im) / n, (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, o):
        return GaussQ.of(o) / self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, o):
        try:
            o = GaussQ.of(o)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def _coerce(c):
    if isinstance(c, GaussQ):
        return c.re if not c.im else c
    if isinstance(c, str):
        return _coerce(GaussQ.parse(c))
    return Fraction(c)


def normalize(coeffs: Sequence) -> list:
    """Exact coefficients with leading zeros removed (``[]`` is the zero polynomial)."""
    out = [_coerce(c) for c in coeffs]
    while out and not out[0]:
        out.pop(0)
    return out


def degree(coeffs: Sequence) -> int:
    return len(normalize(coeffs)) - 1


def derivative(coeffs: Sequence) -> list:
    f = normalize(coeffs)
    d = len(f) - 1
    return normalize([c * (d - k) for k, c in enumerate(f[:-1])])


def sylvester_matrix(f: Sequence, g: Sequence) -> list[list]:
    """``(m+n) x (m+n)``: ``n`` columns of shifted ``f`` coefficients, then ``m`` of ``g``.

    ``f`` has degree ``m`` and ``g`` degree ``n``; column ``k`` of the f-block
    holds ``a_0..a_m`` starting at row ``k``.
    """
    f, g = normalize(f), normalize(g)
    m, n = len(f) - 1, len(g) - 1
    if m < 1 or n < 1:
        raise ConstantPolynomial("resultants need two non-constant polynomials")
    size = m + n
    M = [[Fraction(0)] * size for _ in range(size)]
    for k in range(n):
        for i, a in enumerate(f):
            M[k + i][k] = a
    for k in range(m):
        for i, b in enumerate(g):
            M[k + i][n + k] = b
    return M


def determinant(M: list[list]):
    """Exact Gaussian elimination over a field."""
    A = [row[:] for row in M]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        piv = A[c][c]
        det = det * piv
        for r in range(c + 1, n):
            if A[r][c]:
                q = A[r][c] / piv
                for k in range(c, n):
                    A[r][k] = A[r][k] - q * A[c][k]
    return _coerce(det)


def sylvester_resultant(f: Sequence, g: Sequence):
    """``Res(f, g)``, the Sylvester determinant; zero iff ``f`` and ``g`` share a root."""
    return determinant(sylvester_matrix(f, g))


def discriminant(f: Sequence):
    """``Res(f, f')``; zero iff ``f`` has a multiple root.

    Kept unnormalised: for ``a x^2 + b x + c`` this is ``-a (b^2 - 4ac)``.
    """
    f = normalize(f)
    if len(f) - 1 < 2:
        raise DegreeTooLow("the discriminant needs degree >= 2")
    return sylvester_resultant(f, derivative(f))


@dataclass(frozen=True)
class MonicFromConfig:
    coeffs: tuple
    repeated: bool

    def to_dict(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs], "repeated": self.repeated}


def config_to_monic(points: Sequence) -> MonicFromConfig:
    """``(x - z_1)...(x - z_n)`` expanded; ``repeated`` flags coinciding points."""
    zs = [GaussQ.of(z) for z in points]
    poly = [GaussQ(1)]
    for z in zs:
        # multiply by (x - z)
        nxt = poly + [GaussQ(0)]
        for k, c in enumerate(poly):
            nxt[k + 1] = nxt[k + 1] - c * z
        poly = nxt
    return MonicFromConfig(tuple(_coerce(c) for c in poly), len(set(zs)) != len(zs))


def poly_gcd(f: Sequence, g: Sequence) -> list:
    """Monic gcd by the Euclidean algorithm (``[]`` when both vanish)."""
    a, b = normalize(f), normalize(g)
    while b:
        a, b = b, _rem(a, b)
    if not a:
        return []
    lead = a[0]
    return [_coerce(c / lead) for c in a]


def _rem(a: list, b: list) -> list:
    a = a[:]
    while len(a) >= len(b) and a:
        q = a[0] / b[0]
        for k in range(len(b)):
            a[k] = a[k] - q * b[k]
        a = normalize(a)
    return a


def format_poly(coeffs: Sequence, var: str = "x") -> str:
    f = normalize(coeffs)
    if not f:
        return "0"
    d = len(f) - 1
    parts = []
    for k, c in enumerate(f):
        e = d - k
        if not c:
            continue
        mono = "" if e == 0 else var if e == 1 else f"{var}^{e}"
        cs = str(c)
        if isinstance(c, GaussQ) and c.im and c.re:
            cs = f"({cs})"
        if mono and c == 1:
            parts.append(mono)
        elif mono and c == -1:
            parts.append(f"-{mono}")
        else:
            parts.append(f"{cs}*{mono}" if mono else cs)
    return " + ".join(parts).replace("+ -", "- ")
