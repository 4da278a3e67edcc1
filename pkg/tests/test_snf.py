import random

from hypothesis import given, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from garside_kit.snf import rank, smith_diagonal


def sympy_diagonal(rows):
    if not rows or not rows[0]:
        return []
    D = smith_normal_form(Matrix(rows), domain=ZZ)
    out = [abs(int(D[i, i])) for i in range(min(D.shape))]
    return sorted(d for d in out if d)


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
def test_matches_sympy(rows):
    ours = smith_diagonal(rows)
    assert sorted(ours) == sympy_diagonal(rows)
    assert all(b % a == 0 for a, b in zip(ours, ours[1:]))
    assert rank(rows) == len(ours)


def test_known_diagonals():
    assert smith_diagonal([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert smith_diagonal([[0, 0], [0, 0]]) == []
    assert smith_diagonal([]) == []
    assert rank([[1, 2], [2, 4]]) == 1


def test_large_entries_stay_exact():
    rng = random.Random(9)
    rows = [[rng.randrange(-10**12, 10**12) for _ in range(6)] for _ in range(6)]
    assert sorted(smith_diagonal(rows)) == sympy_diagonal(rows)
