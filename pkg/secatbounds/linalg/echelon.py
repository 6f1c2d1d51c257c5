# secatbounds/linalg/echelon.py
"""Integer column echelon form: kernels, image membership and solving.

Only column operations are used, so the transform that has to be carried is
the (small) column-side one. This is what the cochain engines lean on: the
coboundary matrices are tall, and U for them would be the expensive side.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from secatbounds.linalg.smith import as_int_rows


def columns_of(matrix, ncols: Optional[int] = None) -> tuple[list[list[int]], int, int]:
    rows, m, n = as_int_rows(matrix, ncols)
    return [[rows[i][j] for i in range(m)] for j in range(n)], m, n


def rows_of(columns: Sequence[Sequence[int]], nrows: int) -> list[list[int]]:
    return [[col[i] for col in columns] for i in range(nrows)]


@dataclass
class ColumnEchelon:
    """A·V = E with E in column echelon form and V unimodular.

    ``pivots`` lists (row, column) pairs with strictly increasing rows; the
    pivot column of row r is zero above r and positive at r. Columns of E
    that are not pivots are zero, so the matching columns of V span ker A.
    """
    nrows: int
    ncols: int
    reduced: list[list[int]]  # columns of E
    V: list[list[int]]  # columns of V
    V_inv: list[list[int]]  # rows of V^{-1}
    pivots: list[tuple[int, int]]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def pivot_columns(self) -> list[int]:
        return [p for _, p in self.pivots]

    @property
    def free_columns(self) -> list[int]:
        used = set(self.pivot_columns)
        return [j for j in range(self.ncols) if j not in used]

    def kernel_basis(self) -> list[list[int]]:
        return [list(self.V[j]) for j in self.free_columns]

    def image_basis(self) -> list[list[int]]:
        return [list(self.reduced[p]) for _, p in self.pivots]

    def kernel_coordinates(self, x: Sequence[int]) -> list[int]:
        """Coordinates of x ∈ ker A in ``kernel_basis()``."""
        y = [sum(a * b for a, b in zip(row, x) if a and b) for row in self.V_inv]
        if any(y[p] for p in self.pivot_columns):
            raise ValueError("vector is not in the kernel")
        return [y[j] for j in self.free_columns]

    def solve(self, b: Sequence[int]) -> Optional[list[int]]:
        """Integer x with A·x = b (free coordinates set to zero), or None."""
        if len(b) != self.nrows:
            raise ValueError("right-hand side has the wrong length")
        residual = list(b)
        coeffs: dict[int, int] = {}
        for r, p in self.pivots:
            v = residual[r]
            if not v:
                continue
            d = self.reduced[p][r]
            if v % d:
                return None
            c = v // d
            coeffs[p] = c
            col = self.reduced[p]
            for i in range(r, self.nrows):
                if col[i]:
                    residual[i] -= c * col[i]
        if any(residual):
            return None
        x = [0] * self.ncols
        for p, c in coeffs.items():
            for i, v in enumerate(self.V[p]):
                if v:
                    x[i] += c * v
        return x

    def contains(self, b: Sequence[int]) -> bool:
        return self.solve(b) is not None


def column_echelon(matrix=None, *, columns: Optional[list[list[int]]] = None,
                   nrows: Optional[int] = None, ncols: Optional[int] = None) -> ColumnEchelon:
    """Column echelon form of a matrix given by rows or directly by columns."""
    if columns is None:
        cols, m, n = columns_of(matrix, ncols)
    else:
        if nrows is None:
            raise ValueError("nrows is required when passing columns")
        cols = [[int(v) for v in col] for col in columns]
        m, n = nrows, len(cols)

    V = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    V_inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_sub(j: int, p: int, q: int) -> None:
        # col_j -= q·col_p
        cj, cp = cols[j], cols[p]
        for i in range(m):
            if cp[i]:
                cj[i] -= q * cp[i]
        vj, vp = V[j], V[p]
        for i in range(n):
            if vp[i]:
                vj[i] -= q * vp[i]
        rp, rj = V_inv[p], V_inv[j]
        for i in range(n):
            if rj[i]:
                rp[i] += q * rj[i]

    active = list(range(n))
    pivots: list[tuple[int, int]] = []
    for r in range(m):
        cand = [j for j in active if cols[j][r]]
        if not cand:
            continue
        while len(cand) > 1:
            p = min(cand, key=lambda j: (abs(cols[j][r]), j))
            pv = cols[p][r]
            survivors = [p]
            for j in cand:
                if j == p:
                    continue
                col_sub(j, p, cols[j][r] // pv)
                if cols[j][r]:
                    survivors.append(j)
            cand = survivors
        p = cand[0]
        if cols[p][r] < 0:
            cols[p] = [-v for v in cols[p]]
            V[p] = [-v for v in V[p]]
            V_inv[p] = [-v for v in V_inv[p]]
        active.remove(p)
        pivots.append((r, p))
        if not active:
            break

    return ColumnEchelon(nrows=m, ncols=n, reduced=cols, V=V, V_inv=V_inv, pivots=pivots)


def kernel_basis(matrix, ncols: Optional[int] = None) -> list[list[int]]:
    return column_echelon(matrix, ncols=ncols).kernel_basis()


def solve(matrix, b: Sequence[int], ncols: Optional[int] = None) -> Optional[list[int]]:
    return column_echelon(matrix, ncols=ncols).solve(b)


def rank(matrix, ncols: Optional[int] = None) -> int:
    return column_echelon(matrix, ncols=ncols).rank
