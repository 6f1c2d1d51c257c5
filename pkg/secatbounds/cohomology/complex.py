# secatbounds/cohomology/complex.py
"""Cochains of Hom_G(P_* ⊗ M, A) for a Z-free G-module M.

P_s ⊗ M is free over ZG on {1 ⊗ z ⊗ μ}, so a cochain is stored by its
values there: flat index ((z·m) + μ)·a + α for z in K^s, μ in M, α in A.
With M the trivial module Z this is the ordinary cochain complex for
H^*(G; A); for general M it computes Ext^*_G(M, A).
"""
from __future__ import annotations

import logging
from functools import cached_property
from typing import Optional, Sequence

from secatbounds.config import Caps, resolve_caps
from secatbounds.errors import DegreeError
from secatbounds.linalg.echelon import ColumnEchelon, column_echelon
from secatbounds.modules.gmodule import GModule
from secatbounds.modules.standard import trivial_module
from secatbounds.cohomology.resolution import Resolution

logger = logging.getLogger(__name__)


def _row_entries(A: GModule, g: int) -> list[list[tuple[int, int]]]:
    """Per output coordinate α, the nonzero (α_in, value) of action(g)."""
    m = A.matrix(g)
    out = []
    for i in range(A.rank):
        out.append([(j, int(v)) for j, v in enumerate(m[i].tolist()) if v])
    return out


class ExtComplex:
    def __init__(self, resolution: Resolution, source: Optional[GModule], target: GModule,
                 caps: Optional[Caps] = None):
        G = resolution.group
        if target.group is not G or (source is not None and source.group is not G):
            raise ValueError("modules must live over the resolved group")
        self.resolution = resolution
        self.group = G
        self.is_cohomology = source is None
        self.source = source if source is not None else trivial_module(G)
        self.target = target
        self.caps = resolve_caps(caps)
        self._coboundary: dict[tuple[int, bool], list[list[int]]] = {}
        self._cocycles: dict[int, ColumnEchelon] = {}
        self._boundaries: dict[int, Optional[ColumnEchelon]] = {}

    @property
    def m(self) -> int:
        return self.source.rank

    @property
    def a(self) -> int:
        return self.target.rank

    def dim(self, r: int) -> int:
        if r < 0:
            return 0
        return self.resolution.tensor_rank(r) * self.m * self.a

    def _check_degree(self, r: int) -> None:
        if r < 0:
            raise DegreeError("negative degree", field="degree")
        self.resolution.require(r)

    @cached_property
    def _actions(self) -> dict[int, tuple]:
        """Per h ≠ e: (h^{-1}, A-rows of h, M-columns of h^{-1})."""
        G = self.group
        out = {}
        for h in G.non_identity:
            hinv = G.inv(h)
            out[h] = (hinv, _row_entries(self.target, h), self.source.sparse(hinv))
        return out

    def _coboundary_entries(self, r: int, h: int):
        """Yield (row, column, value) of δ^r restricted to the block of (h - 1)."""
        res = self.resolution
        m, a = self.m, self.a
        width = res.tensor_rank(r)
        hinv, a_rows, m_cols = self._actions[h]
        expansion = res.tensor_action(hinv, r)
        block = int(res.k_index[h]) * width
        for z in range(width):
            terms = expansion[z]
            for mu in range(m):
                row0 = ((block + z) * m + mu) * a
                for zp, cz in terms:
                    for mup, cm in m_cols[mu]:
                        c = cz * cm
                        col0 = (zp * m + mup) * a
                        for alpha in range(a):
                            for ain, v in a_rows[alpha]:
                                yield row0 + alpha, col0 + ain, c * v
                for alpha in range(a):
                    yield row0 + alpha, (z * m + mu) * a + alpha, -1

    def coboundary_columns(self, r: int, generators_only: bool = False) -> list[list[int]]:
        """Columns of δ^r : C^r → C^{r+1}; optionally only rows of generator blocks."""
        if r < 0:
            return []
        self._check_degree(r + 1)
        key = (r, generators_only)
        cached = self._coboundary.get(key)
        if cached is not None:
            return cached
        G = self.group
        ncols = self.dim(r)
        self.caps.check("max_rank", ncols)
        self.caps.check("max_rank", self.dim(r + 1))
        hs = list(G.generators) if generators_only else list(G.non_identity)
        block = self.dim(r)  # rows per h block
        row_map = {}
        if generators_only:
            for i, h in enumerate(hs):
                row_map[h] = i * block - int(self.resolution.k_index[h]) * block
        nrows = block * len(hs)
        cols = [[0] * nrows for _ in range(ncols)]
        for h in hs:
            shift = row_map.get(h, 0)
            for row, col, v in self._coboundary_entries(r, h):
                cols[col][row + shift] += v
        logger.debug("coboundary δ^%d over %s: %d × %d", r, self.group.name, nrows, ncols)
        self._coboundary[key] = cols
        return cols

    def apply_coboundary(self, r: int, values: Sequence[int]) -> list[int]:
        self._check_degree(r + 1)
        if len(values) != self.dim(r):
            raise ValueError("cochain has the wrong length")
        out = [0] * self.dim(r + 1)
        for h in self.group.non_identity:
            for row, col, v in self._coboundary_entries(r, h):
                x = values[col]
                if x:
                    out[row] += v * x
        return out

    def is_cocycle(self, r: int, values: Sequence[int]) -> bool:
        return not any(self.apply_coboundary(r, values))

    def cocycle_echelon(self, r: int) -> ColumnEchelon:
        """Echelon of δ^r on generator rows; its kernel is Z^r."""
        ech = self._cocycles.get(r)
        if ech is None:
            ech = column_echelon(columns=self.coboundary_columns(r, generators_only=True),
                                 nrows=self.dim(r) * len(self.group.generators))
            self._cocycles[r] = ech
        return ech

    def cocycle_basis(self, r: int) -> list[list[int]]:
        if self.dim(r) == 0:
            return []
        return self.cocycle_echelon(r).kernel_basis()

    def coboundary_echelon(self, r: int) -> Optional[ColumnEchelon]:
        """Echelon of δ^{r-1}; None when r = 0."""
        if r not in self._boundaries:
            if r == 0 or self.dim(r - 1) == 0:
                self._boundaries[r] = None
            else:
                self._boundaries[r] = column_echelon(columns=self.coboundary_columns(r - 1),
                                                     nrows=self.dim(r))
        return self._boundaries[r]

    def is_coboundary(self, r: int, values: Sequence[int]) -> bool:
        if not any(values):
            return True
        ech = self.coboundary_echelon(r)
        return ech is not None and ech.contains(values)

    def coboundary_preimage(self, r: int, values: Sequence[int]) -> Optional[list[int]]:
        """x with δ^{r-1} x = values, or None."""
        if not any(values):
            return [0] * self.dim(r - 1)
        ech = self.coboundary_echelon(r)
        return None if ech is None else ech.solve(values)


def precompose(values: Sequence[int], T, tensor_rank: int, old_m: int, new_m: int, a: int) -> list[int]:
    """Pull cochain values back along a Z-linear map T : M' → M.

    ``T`` is an old_m × new_m matrix (rows of ints); the result is
    value'[z, μ', α] = Σ_μ T[μ, μ'] value[z, μ, α].
    """
    nz = [[(mu, int(T[mu][mup])) for mu in range(old_m) if T[mu][mup]] for mup in range(new_m)]
    out = [0] * (tensor_rank * new_m * a)
    for z in range(tensor_rank):
        src = z * old_m * a
        dst = z * new_m * a
        for mup in range(new_m):
            base = dst + mup * a
            for mu, t in nz[mup]:
                s = src + mu * a
                for alpha in range(a):
                    v = values[s + alpha]
                    if v:
                        out[base + alpha] += t * v
    return out


def push_values(values: Sequence[int], F, tensor_rank: int, m: int, old_a: int, new_a: int) -> list[int]:
    """Apply a Z-map F : A → B (new_a × old_a) to every value of a cochain."""
    nz = [[(beta, int(F[beta][alpha])) for beta in range(new_a) if F[beta][alpha]] for alpha in range(old_a)]
    out = [0] * (tensor_rank * m * new_a)
    for block in range(tensor_rank * m):
        src = block * old_a
        dst = block * new_a
        for alpha in range(old_a):
            v = values[src + alpha]
            if v:
                for beta, f in nz[alpha]:
                    out[dst + beta] += f * v
    return out
