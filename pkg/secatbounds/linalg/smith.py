# secatbounds/linalg/smith.py
"""Smith normal form over Z with tracked unimodular transforms.

Dense rows of Python ints throughout; the pivot is always an entry of minimal
absolute value so intermediate coefficients stay small. Ties break on the
smallest (row, column) position, which makes the output fully deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

Matrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def as_int_rows(matrix, ncols: Optional[int] = None) -> tuple[Matrix, int, int]:
    """Normalize a numpy array or nested sequence into (rows, nrows, ncols)."""
    if isinstance(matrix, np.ndarray):
        if matrix.ndim != 2:
            raise ValueError("expected a 2-d matrix")
        nrows, n = matrix.shape
        return [[int(v) for v in row] for row in matrix.tolist()], nrows, n
    rows = [[int(v) for v in row] for row in matrix]
    if rows:
        n = len(rows[0])
        if any(len(row) != n for row in rows):
            raise ValueError("ragged matrix")
    else:
        n = ncols or 0
    if ncols is not None and rows and n != ncols:
        raise ValueError(f"expected {ncols} columns, got {n}")
    return rows, len(rows), n


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], inner: Optional[int] = None) -> Matrix:
    if not a:
        return []
    k = len(b) if inner is None else inner
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * ncols
        for t in range(k):
            v = row[t]
            if v:
                brow = b[t]
                for j in range(ncols):
                    if brow[j]:
                        acc[j] += v * brow[j]
        out.append(acc)
    return out


def matvec(a: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    return [sum(v * w for v, w in zip(row, x) if v and w) for row in a]


@dataclass(frozen=True)
class SmithDecomposition:
    """U·A·V = D with d_1 | d_2 | ... on the diagonal of D.

    ``U_inv`` is carried along so quotient generators can be read off without
    a separate inversion.
    """
    matrix: tuple[tuple[int, ...], ...]
    shape: tuple[int, int]
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]
    U_inv: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]
    diagonal: tuple[int, ...]  # nonzero invariant factors, positive

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 1)

    def solve(self, b: Sequence[int]) -> Optional[list[int]]:
        """An integer x with A·x = b, or None when no such x exists."""
        m, n = self.shape
        if len(b) != m:
            raise ValueError("right-hand side has the wrong length")
        c = matvec(self.U, b) if m else []
        y = [0] * n
        for i, d in enumerate(self.diagonal):
            if c[i] % d:
                return None
            y[i] = c[i] // d
        if any(c[i] for i in range(self.rank, m)):
            return None
        return matvec(self.V, y) if n else []

    def to_dict(self) -> dict:
        return {
            "shape": list(self.shape),
            "U": [list(r) for r in self.U],
            "D": [list(r) for r in self.D],
            "V": [list(r) for r in self.V],
            "diagonal": list(self.diagonal),
        }


class _SmithState:
    def __init__(self, rows: Matrix, m: int, n: int):
        self.D = rows
        self.m = m
        self.n = n
        self.U = identity(m)
        self.U_inv = identity(m)
        self.V = identity(n)

    # row operations act on D and U; U_inv receives the inverse column operation
    def row_add(self, target: int, source: int, c: int) -> None:
        if not c:
            return
        for mat in (self.D, self.U):
            t, s = mat[target], mat[source]
            for j, v in enumerate(s):
                if v:
                    t[j] += c * v
        for row in self.U_inv:
            if row[target]:
                row[source] -= c * row[target]

    def row_swap(self, i: int, k: int) -> None:
        if i == k:
            return
        for mat in (self.D, self.U):
            mat[i], mat[k] = mat[k], mat[i]
        for row in self.U_inv:
            row[i], row[k] = row[k], row[i]

    def row_negate(self, i: int) -> None:
        for mat in (self.D, self.U):
            mat[i] = [-v for v in mat[i]]
        for row in self.U_inv:
            row[i] = -row[i]

    def col_add(self, target: int, source: int, c: int) -> None:
        if not c:
            return
        for mat in (self.D, self.V):
            for row in mat:
                if row[source]:
                    row[target] += c * row[source]

    def col_swap(self, j: int, k: int) -> None:
        if j == k:
            return
        for mat in (self.D, self.V):
            for row in mat:
                row[j], row[k] = row[k], row[j]

    def col_combine(self, i: int, j: int, x: int, y: int, s: int, t: int) -> None:
        # (col_i, col_j) <- (x col_i + y col_j, s col_i + t col_j), determinant 1
        for mat in (self.D, self.V):
            for row in mat:
                a, b = row[i], row[j]
                if a or b:
                    row[i] = x * a + y * b
                    row[j] = s * a + t * b

    def find_pivot(self, t: int) -> Optional[tuple[int, int]]:
        best = None
        best_abs = 0
        for i in range(t, self.m):
            row = self.D[i]
            for j in range(t, self.n):
                v = row[j]
                if v and (best is None or abs(v) < best_abs):
                    best, best_abs = (i, j), abs(v)
                    if best_abs == 1:
                        return best
        return best

    def clear_cross(self, t: int) -> None:
        D = self.D
        while True:
            p = D[t][t]
            clean = True
            for i in range(t + 1, self.m):
                if D[i][t]:
                    self.row_add(i, t, -(D[i][t] // p))
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, self.n):
                if D[t][j]:
                    self.col_add(j, t, -(D[t][j] // p))
                    if D[t][j]:
                        clean = False
            if clean:
                return
            # a remainder survived: bring the smallest one into the pivot slot
            best_abs = abs(D[t][t])
            where = None
            for i in range(t + 1, self.m):
                v = D[i][t]
                if v and abs(v) < best_abs:
                    best_abs, where = abs(v), ("row", i)
            for j in range(t + 1, self.n):
                v = D[t][j]
                if v and abs(v) < best_abs:
                    best_abs, where = abs(v), ("col", j)
            if where is not None:
                if where[0] == "row":
                    self.row_swap(t, where[1])
                else:
                    self.col_swap(t, where[1])

    def fix_divisibility(self, rank: int) -> None:
        D = self.D
        for i in range(rank):
            for j in range(i + 1, rank):
                a, b = D[i][i], D[j][j]
                if b % a == 0:
                    continue
                self.row_add(i, j, 1)
                g, x, y = xgcd(a, b)
                self.col_combine(i, j, x, y, -(b // g), a // g)
                self.row_add(j, i, -((y * b) // g))


def smith(matrix, ncols: Optional[int] = None) -> SmithDecomposition:
    """Smith normal form of an integer matrix (numpy array or nested lists)."""
    rows, m, n = as_int_rows(matrix, ncols)
    original = tuple(tuple(r) for r in rows)
    state = _SmithState([list(r) for r in rows], m, n)

    t = 0
    while t < min(m, n):
        pivot = state.find_pivot(t)
        if pivot is None:
            break
        state.row_swap(t, pivot[0])
        state.col_swap(t, pivot[1])
        state.clear_cross(t)
        t += 1
    rank = t
    state.fix_divisibility(rank)
    for i in range(rank):
        if state.D[i][i] < 0:
            state.row_negate(i)

    return SmithDecomposition(
        matrix=original,
        shape=(m, n),
        U=tuple(tuple(r) for r in state.U),
        V=tuple(tuple(r) for r in state.V),
        U_inv=tuple(tuple(r) for r in state.U_inv),
        D=tuple(tuple(r) for r in state.D),
        diagonal=tuple(state.D[i][i] for i in range(rank)),
    )
