"""Smith normal form over arbitrary precision integers.

Reference implementation: always correct, no overflow to worry about.
Pivoting always picks the entry of least absolute value in the active
submatrix, which keeps coefficient growth tame in practice.
"""

from __future__ import annotations

from math import gcd


def _round_div(a: int, b: int) -> int:
    # Quotient with remainder of minimal absolute value. Python's divmod
    # remainder shares the divisor's sign, so rounding always bumps up.
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q


def _divisor_chain(values: list[int]) -> list[int]:
    vals = sorted(abs(v) for v in values if v)
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                a, b = vals[i], vals[j]
                if b % a:
                    g = gcd(a, b)
                    vals[i], vals[j] = g, a // g * b
                    changed = True
    vals.sort()
    return vals


def _diagonalize(A: list[list[int]], T: list[list[int]] | None) -> int:
    """In-place diagonalization by unimodular row and column operations.

    T, when given, accumulates the column operations. Returns the count of
    nonzero pivots, which all sit at positions (t, t) afterwards.

    After every reduction sweep the pivot is re-selected as the entry of
    least absolute value in the whole active submatrix. Any leftover
    remainder is at most half the old pivot, so the pivot at least halves
    between sweeps; committing to one pivot position instead is a classic
    trap that makes the entries blow up doubly exponentially.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    t = 0
    while t < m and t < n:
        pi = pj = -1
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    pi, pj = i, j
                    if best == 1:
                        break
            if best == 1:
                break
        if best is None:
            return t
        if pi != t:
            A[pi], A[t] = A[t], A[pi]
        if pj != t:
            for row in A:
                row[pj], row[t] = row[t], row[pj]
            if T is not None:
                for row in T:
                    row[pj], row[t] = row[t], row[pj]
        piv = A[t][t]
        clean = True
        for i in range(t + 1, m):
            if A[i][t]:
                q = _round_div(A[i][t], piv)
                if q:
                    rt, ri = A[t], A[i]
                    for j in range(t, n):
                        ri[j] -= q * rt[j]
                if A[i][t]:
                    clean = False
        for j in range(t + 1, n):
            if A[t][j]:
                q = _round_div(A[t][j], piv)
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                    if T is not None:
                        for row in T:
                            row[j] -= q * row[t]
                if A[t][j]:
                    clean = False
        if clean:
            t += 1
    return t


def smith_normal_form(mat: list[list[int]]) -> tuple[list[int], int]:
    """Divisor chain d1 | d2 | ... (positive) and the rank."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    if m == 0 or n == 0:
        return [], 0
    A = [list(row) for row in mat]
    rank = _diagonalize(A, None)
    return _divisor_chain([A[t][t] for t in range(rank)]), rank


def kernel_basis(mat: list[list[int]]) -> list[list[int]]:
    """Integer basis of the kernel, one vector per list entry.

    The column transform of the diagonalization is unimodular, so the
    columns it parks over zero columns form a primitive lattice basis.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    A = [list(row) for row in mat]
    T = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rank = _diagonalize(A, T)
    return [[T[i][j] for i in range(n)] for j in range(rank, n)]
