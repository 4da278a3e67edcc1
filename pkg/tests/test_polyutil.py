import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from garside_kit.errors import ConstantPolynomial, DegreeTooLow
from garside_kit.polyutil import (
    GaussQ,
    config_to_monic,
    discriminant,
    format_poly,
    poly_gcd,
    sylvester_matrix,
    sylvester_resultant,
)


def test_resultant_examples():
    assert sylvester_resultant([1, -1], [1, 0, -1]) == 0
    assert sylvester_resultant([1, 0], [1, 1]) == 1
    assert sylvester_matrix([1, 0, -1], [2, 0]) == [[1, 2, 0], [0, 0, 2], [-1, 0, 0]]
    assert sylvester_resultant([1, 0, -1], [2, 0]) == -4


def test_discriminant_examples():
    # (x-1)^2 (x+2) = x^3 - 3x + 2
    assert discriminant([1, 0, -3, 2]) == 0
    assert discriminant([1, 0, -1]) == -4
    assert discriminant([1, 0, 0]) == 0


def test_quadratic_discriminant_carries_minus_a():
    a, b, c = 3, 5, -7
    assert discriminant([a, b, c]) == -a * (b * b - 4 * a * c)


def test_errors():
    with pytest.raises(ConstantPolynomial):
        sylvester_resultant([3], [1, 2])
    with pytest.raises(DegreeTooLow):
        discriminant([2, 1])


def test_config_examples():
    m = config_to_monic([1, 2])
    assert format_poly(m.coeffs) == "x^2 - 3*x + 2" and not m.repeated
    assert format_poly(config_to_monic([0]).coeffs) == "x"
    m = config_to_monic([1, 1])
    assert format_poly(m.coeffs) == "x^2 - 2*x + 1" and m.repeated


def test_gaussian_points():
    m = config_to_monic(["i", "-i"])
    assert [GaussQ.of(c) for c in m.coeffs] == [GaussQ.of(1), GaussQ.of(0), GaussQ.of(1)]
    assert GaussQ.parse("2/3-1/4i") == GaussQ(Fraction(2, 3), Fraction(-1, 4))


small = st.lists(st.integers(-4, 4), min_size=2, max_size=5).filter(lambda c: c[0] != 0)


@given(small, small)
def test_resultant_vanishes_iff_common_factor(f, g):
    r = sylvester_resultant(f, g)
    assert (r == 0) == (len(poly_gcd(f, g)) > 1)


@given(small, small)
def test_resultant_symmetry(f, g):
    m, n = len(f) - 1, len(g) - 1
    assert sylvester_resultant(f, g) == (-1) ** (m * n) * sylvester_resultant(g, f)


def test_config_discriminant_battery():
    rng = random.Random(8)
    pool = [0, 1, -1, 2, "i", "1+i", "1/2", "-2i"]
    for _ in range(200):
        k = rng.randrange(2, 5)
        pts = [rng.choice(pool) for _ in range(k)]
        m = config_to_monic(pts)
        repeated = len({GaussQ.of(p) for p in pts}) < k
        assert m.repeated == repeated
        assert (discriminant(m.coeffs) == 0) == repeated
