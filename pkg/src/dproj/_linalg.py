"""Exact integer and rational linear algebra.

Matrices are plain lists of rows of Python ints (or Fractions), so every
intermediate value is arbitrary precision.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _upper_hnf(rows: Matrix, ncols: int) -> Matrix:
    """Row-style upper Hermite normal form; zero rows dropped."""
    M = [list(r) for r in rows if any(r)]
    i = 0
    for col in range(ncols):
        if i >= len(M):
            break
        while True:
            nz = [j for j in range(i, len(M)) if M[j][col] != 0]
            if not nz:
                break
            p = min(nz, key=lambda j: abs(M[j][col]))
            M[i], M[p] = M[p], M[i]
            clean = True
            for j in range(i + 1, len(M)):
                if M[j][col]:
                    q = M[j][col] // M[i][col]
                    M[j] = [a - q * b for a, b in zip(M[j], M[i])]
                    if M[j][col]:
                        clean = False
            if clean:
                break
        if i < len(M) and M[i][col] != 0:
            if M[i][col] < 0:
                M[i] = [-a for a in M[i]]
            for j in range(i):
                q = M[j][col] // M[i][col]
                if q:
                    M[j] = [a - q * b for a, b in zip(M[j], M[i])]
            i += 1
    return [r for r in M[:i]]


def hnf(rows: Sequence[Sequence[int]], ncols: int) -> tuple[tuple[int, ...], ...]:
    """Lower-triangular Hermite normal form of the lattice spanned by ``rows``.

    Each basis row ends in a positive pivot (its last nonzero entry), pivot
    columns increase from row to row, and every later row has its entry in an
    earlier pivot column reduced into ``[0, pivot)``.  The result depends only
    on the lattice, not on the generating set.
    """
    mirrored = [list(reversed(r)) for r in rows]
    H = _upper_hnf(mirrored, ncols)
    return tuple(tuple(reversed(r)) for r in reversed(H))


def pivot(row: Sequence[int]) -> int:
    for j in range(len(row) - 1, -1, -1):
        if row[j]:
            return j
    raise ValueError("zero row has no pivot")


def reduce_by_hnf(v: Sequence[int], basis: Sequence[Sequence[int]]) -> tuple[list[int], list[int]]:
    """Reduce ``v`` against a lower-triangular HNF basis.

    Returns ``(remainder, coefficients)`` with ``v = coefficients @ basis +
    remainder``; ``v`` lies in the lattice iff the remainder is zero.
    """
    w = list(v)
    coeffs = [0] * len(basis)
    for idx in range(len(basis) - 1, -1, -1):
        row = basis[idx]
        p = pivot(row)
        q = w[p] // row[p]
        if q:
            coeffs[idx] = q
            w = [a - q * b for a, b in zip(w, row)]
    return w, coeffs


def smith(A: Sequence[Sequence[int]], nrows: int, ncols: int) -> tuple[list[int], Matrix, Matrix]:
    """Smith normal form ``P A Q = diag(s)`` with ``s`` a divisibility chain.

    Returns ``(s, P, Q)`` where ``s`` lists the nonzero diagonal entries
    (all positive) and ``P``, ``Q`` are unimodular.
    """
    S = [list(r) for r in A]
    P = identity(nrows)
    Q = identity(ncols)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        P[i], P[j] = P[j], P[i]

    def swap_cols(i, j):
        for M in (S, Q):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        S[dst] = [a - q * b for a, b in zip(S[dst], S[src])]
        P[dst] = [a - q * b for a, b in zip(P[dst], P[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for M in (S, Q):
            for row in M:
                row[dst] -= q * row[src]

    diag: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        entries = [(abs(S[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if S[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        dirty = False
        for i in range(t + 1, nrows):
            if S[i][t]:
                add_row(i, t, S[i][t] // S[t][t])
                dirty = dirty or S[i][t] != 0
        for j in range(t + 1, ncols):
            if S[t][j]:
                add_col(j, t, S[t][j] // S[t][t])
                dirty = dirty or S[t][j] != 0
        if dirty:
            continue
        bad = next(
            (i for i in range(t + 1, nrows) for j in range(t + 1, ncols) if S[i][j] % S[t][t]),
            None,
        )
        if bad is not None:
            # pull the offending row up so the next pass sees a smaller remainder
            add_row(t, bad, -1)
            continue
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            P[t] = [-a for a in P[t]]
        diag.append(S[t][t])
        t += 1
    return diag, P, Q


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q."""
    M = [[Fraction(a) for a in r] for r in rows]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for col in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][col] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(r + 1, len(M)):
            if M[i][col]:
                f = M[i][col] / M[r][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if not A:
        return []
    cols = list(zip(*B)) if B else []
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def lp_feasible(A: Sequence[Sequence], b: Sequence) -> bool:
    """Decide whether ``A y = b, y >= 0`` has a rational solution.

    Phase-one simplex on an exact Fraction tableau with Bland's rule, so the
    answer carries no floating-point tolerance.
    """
    m = len(A)
    if m == 0:
        return True
    n = len(A[0])
    rows = []
    for i in range(m):
        row = [Fraction(a) for a in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-a for a in row]
            rhs = -rhs
        art = [Fraction(int(j == i)) for j in range(m)]
        rows.append(row + art + [rhs])
    basis = [n + i for i in range(m)]
    width = n + m
    # objective: minimise the sum of artificials, expressed in nonbasic terms
    obj = [Fraction(0)] * (width + 1)
    for row in rows:
        obj = [o - a for o, a in zip(obj, row)]
    for j in range(n, width):
        obj[j] = Fraction(0)
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded direction; cannot happen for phase one
            break
        i = best[1]
        piv = rows[i][enter]
        rows[i] = [a / piv for a in rows[i]]
        for k in range(m):
            if k != i and rows[k][enter]:
                f = rows[k][enter]
                rows[k] = [a - f * c for a, c in zip(rows[k], rows[i])]
        f = obj[enter]
        obj = [a - f * c for a, c in zip(obj, rows[i])]
        basis[i] = enter
    return obj[-1] == 0


def primitive(v: Sequence) -> tuple[int, ...]:
    """Integer vector on the ray through rational ``v`` with coprime entries."""
    fr = [Fraction(a) for a in v]
    den = 1
    for a in fr:
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(a * den) for a in fr]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return tuple(a // g for a in ints) if g else tuple(ints)


def nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """Basis of the rational kernel ``{x : rows @ x = 0}``, as primitive integer vectors."""
    M = [[Fraction(a) for a in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][col] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        M[r] = [a / M[r][col] for a in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col]:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -M[i][free]
        basis.append(primitive(v))
    return basis


def inverse(T: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Inverse of a nonsingular square matrix over Q."""
    d = len(T)
    M = [[Fraction(a) for a in row] + [Fraction(int(i == j)) for j in range(d)] for i, row in enumerate(T)]
    for col in range(d):
        p = next(i for i in range(col, d) if M[i][col] != 0)
        M[col], M[p] = M[p], M[col]
        M[col] = [a / M[col][col] for a in M[col]]
        for i in range(d):
            if i != col and M[i][col]:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[col])]
    return [row[d:] for row in M]
