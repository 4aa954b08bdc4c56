"""Dense exact linear algebra over Q(q, t) by Gaussian elimination."""

from __future__ import annotations

from typing import Sequence

from .qt import ONE, ZERO, QTFraction


class SingularMatrix(ArithmeticError):
    pass


def _size(x: QTFraction) -> int:
    return len(x.num.to_dict()) + len(x.den.to_dict())


def row_echelon(rows: Sequence[Sequence[QTFraction]]):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    M = [list(r) for r in rows]
    if not M:
        return M, []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        best = None
        for i in range(r, len(M)):
            if M[i][c]:
                if best is None or _size(M[i][c]) < _size(M[best][c]):
                    best = i
        if best is None:
            continue
        M[r], M[best] = M[best], M[r]
        inv = M[r][c].inv()
        M[r] = [x * inv if x else x for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b if b else a for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def rank(rows: Sequence[Sequence[QTFraction]]) -> int:
    return len(row_echelon(rows)[1])


def solve(rows: Sequence[Sequence[QTFraction]], rhs: Sequence[QTFraction]) -> list[QTFraction]:
    """Unique solution of rows * x = rhs (rows may be overdetermined but consistent)."""
    if not rows:
        return []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    M, piv = row_echelon(aug)
    if ncols in piv:
        raise SingularMatrix("inconsistent system")
    if len(piv) < ncols:
        raise SingularMatrix(f"rank {len(piv)} < {ncols}")
    x = [ZERO] * ncols
    for i, c in enumerate(piv):
        x[c] = M[i][ncols]
    return x


class LinearSolver:
    """Reusable inverse of a square matrix for many right-hand sides."""

    def __init__(self, rows: Sequence[Sequence[QTFraction]]):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise SingularMatrix("matrix is not square")
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(rows)]
        M, piv = row_echelon(aug)
        if piv[:n] != list(range(n)) or len(piv) < n:
            raise SingularMatrix(f"rank {len([p for p in piv if p < n])} < {n}")
        self.n = n
        self.inverse = [row[n:] for row in M[:n]]

    def solve(self, rhs: Sequence[QTFraction]) -> list[QTFraction]:
        out = []
        for row in self.inverse:
            acc = ZERO
            for a, b in zip(row, rhs):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out
