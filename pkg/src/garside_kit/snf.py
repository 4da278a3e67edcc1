"""Smith normal form over the integers (exact, arbitrary precision)."""

from __future__ import annotations

from math import gcd
from typing import Sequence


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Non-zero invariant factors ``d_1 | d_2 | ...`` (all positive).

    Elimination pivots on the entry of least absolute value; the diagonal is
    then brought into divisibility order with ``(a, b) -> (gcd, lcm)``.
    """
    A = [list(map(int, row)) for row in matrix]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag: list[int] = []
    top = 0
    while top < min(rows, cols):
        pivot = None
        for i in range(top, rows):
            for j in range(top, cols):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        A[top], A[pi] = A[pi], A[top]
        for row in A:
            row[top], row[pj] = row[pj], row[top]
        while True:
            p = A[top][top]
            dirty = False
            for i in range(top + 1, rows):
                if A[i][top]:
                    q = A[i][top] // p
                    if q:
                        Ai, At = A[i], A[top]
                        for j in range(top, cols):
                            Ai[j] -= q * At[j]
                    if A[i][top]:
                        dirty = True
            for j in range(top + 1, cols):
                if A[top][j]:
                    q = A[top][j] // p
                    if q:
                        for i in range(top, rows):
                            A[i][j] -= q * A[i][top]
                    if A[top][j]:
                        dirty = True
            if not dirty:
                break
            # a remainder is smaller than the pivot: move it into place
            best = None
            for i in range(top + 1, rows):
                if A[i][top] and (best is None or abs(A[i][top]) < abs(best[2])):
                    best = (i, None, A[i][top])
            for j in range(top + 1, cols):
                if A[top][j] and (best is None or abs(A[top][j]) < abs(best[2])):
                    best = (None, j, A[top][j])
            i, j, _ = best
            if i is not None:
                A[top], A[i] = A[i], A[top]
            else:
                for row in A:
                    row[top], row[j] = row[j], row[top]
        diag.append(abs(A[top][top]))
        top += 1
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            g = gcd(a, b)
            diag[i], diag[j] = g, a * b // g
    return diag


def rank(matrix: Sequence[Sequence[int]]) -> int:
    return len(smith_diagonal(matrix))
