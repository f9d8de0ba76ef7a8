"""Small exact linear algebra over Q used for ranks, jets and oracles."""

from __future__ import annotations

from fractions import Fraction


def rref(rows):
    """Reduced row echelon form; returns (new_rows, pivot_columns).

    rows: list of lists of Fractions (dense).  Input is not mutated.
    """
    mat = [list(map(Fraction, r)) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows):
    return len(rref(rows)[1])


def in_row_space(vector, basis_rows):
    """Is the vector a linear combination of the basis rows?"""
    if not basis_rows:
        return all(x == 0 for x in vector)
    reduced, pivots = rref(basis_rows)
    v = list(map(Fraction, vector))
    for row, p in zip(reduced, pivots):
        if v[p]:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return all(x == 0 for x in v)


def nullity(rows, ncols):
    """Dimension of the kernel of the matrix acting on column vectors."""
    return ncols - rank(rows) if rows else ncols
