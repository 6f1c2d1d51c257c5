# secatbounds/cohomology/resolution.py
"""The free resolution P_s = ZG ⊗ K^s of Z, p_s(x ⊗ y ⊗ z) = ε(x)·i(y) ⊗ z.

Basis of P_s: (g, z) with g ∈ G and z a tuple of K-basis indices, flat index
g·(n-1)^s + z where z is read mixed-radix in base n-1 (first factor most
significant). P_s is free over ZG on {1 ⊗ z}, which is why cochains are
stored only by their values there.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from secatbounds.config import Caps, resolve_caps
from secatbounds.errors import DegreeError, VerificationError
from secatbounds.groups.finite_group import FiniteGroup
from secatbounds.linalg.echelon import column_echelon

logger = logging.getLogger(__name__)

Expansion = list[tuple[int, int]]  # (basis index, coefficient)


class Resolution:
    def __init__(self, group: FiniteGroup, max_degree: int, caps: Optional[Caps] = None):
        caps = resolve_caps(caps)
        if max_degree < 0:
            raise DegreeError("resolution degree must be non-negative", field="degree")
        if max_degree > caps.max_degree + 1:
            raise DegreeError(
                f"degree {max_degree} beyond the configured cap {caps.max_degree}", field="degree"
            )
        self.group = group
        self.max_degree = max_degree
        self.caps = caps
        n = group.order
        self.k_basis: tuple[int, ...] = tuple(group.non_identity)
        k_index = np.full(n, -1, dtype=np.int64)
        for i, g in enumerate(self.k_basis):
            k_index[g] = i
        self.k_index = k_index
        self._tensor_action: dict[tuple[int, int], list[Expansion]] = {}

    @property
    def k_rank(self) -> int:
        return self.group.order - 1

    def tensor_rank(self, s: int) -> int:
        """rank of K^s"""
        return self.k_rank ** s

    def rank(self, s: int) -> int:
        """Z-rank of P_s = |G|(|G|-1)^s"""
        return self.group.order * self.tensor_rank(s)

    def require(self, s: int) -> None:
        if s > self.max_degree:
            raise DegreeError(f"degree {s} beyond resolution degree {self.max_degree}", field="degree")

    def k_tuple(self, z: int, s: int) -> tuple[int, ...]:
        out = []
        base = self.k_rank
        for _ in range(s):
            z, d = divmod(z, base)
            out.append(d)
        return tuple(reversed(out))

    def k_element_tuple(self, z: int, s: int) -> tuple[int, ...]:
        return tuple(self.k_basis[i] for i in self.k_tuple(z, s))

    def encode_elements(self, elems: tuple[int, ...]) -> int:
        """K^s index of (g_1 - 1) ⊗ ... ⊗ (g_s - 1); every g_i must be non-identity."""
        z = 0
        for g in elems:
            z = z * self.k_rank + int(self.k_index[g])
        return z

    def _k_action(self, h: int) -> list[Expansion]:
        # h·(g - 1) = (hg - 1) - (h - 1)
        G = self.group
        e = G.identity
        row = G.left_row(h)
        out = []
        for g in self.k_basis:
            terms = []
            hg = int(row[g])
            if hg != e:
                terms.append((int(self.k_index[hg]), 1))
            if h != e:
                terms.append((int(self.k_index[h]), -1))
            out.append(terms)
        return out

    def tensor_action(self, h: int, s: int) -> list[Expansion]:
        """For each basis tuple z of K^s, the expansion of h·z."""
        key = (h, s)
        cached = self._tensor_action.get(key)
        if cached is not None:
            return cached
        if s == 0:
            result = [[(0, 1)]]
        else:
            first = self._tensor_action.get((h, 1)) or self._k_action(h)
            self._tensor_action[(h, 1)] = first
            if s == 1:
                result = first
            else:
                rest = self.tensor_action(h, s - 1)
                width = self.tensor_rank(s - 1)
                result = []
                for terms in first:
                    for sub in rest:
                        acc: dict[int, int] = {}
                        for a, ca in terms:
                            for b, cb in sub:
                                key_ab = a * width + b
                                acc[key_ab] = acc.get(key_ab, 0) + ca * cb
                        result.append([(k, v) for k, v in sorted(acc.items()) if v])
        self._tensor_action[key] = result
        return result

    # --- differentials as Z-matrices ------------------------------------------
    def differential_columns(self, s: int) -> list[list[int]]:
        """Columns of p_s : P_s → P_{s-1} (p_0 = ε : ZG → Z)."""
        self.require(s)
        self.caps.check("max_rank", self.rank(s))
        G = self.group
        n = G.order
        if s == 0:
            return [[1] for _ in range(n)]
        width = self.tensor_rank(s - 1)
        rows = self.rank(s - 1)
        cols = []
        for g in G.elements:
            for z in range(self.tensor_rank(s)):
                y, rest = divmod(z, width)
                col = [0] * rows
                col[self.k_basis[y] * width + rest] += 1
                col[G.identity * width + rest] -= 1
                cols.append(col)
        return cols

    def validate(self, full_rank_limit: int = 2000) -> "ExactnessReport":
        """p_s ∘ p_{s+1} = 0 and im p_{s+1} = ker p_s for s < max_degree.

        Degrees whose P_{s+1} exceeds ``full_rank_limit`` are checked
        structurally: the base sequence 0 → K → ZG → Z → 0 is verified
        exact and p_{s+1} is (i ⊗ id)(ε ⊗ id) on K^s, which stays exact
        after tensoring with the free Z-module K^s.
        """
        report = ExactnessReport(group=self.group.name, max_degree=self.max_degree)
        base_ok = self._base_sequence_exact()
        for s in range(self.max_degree):
            if self.rank(s + 1) > full_rank_limit:
                report.degrees[s] = "structural" if base_ok else "failed"
                continue
            upper = column_echelon(columns=self.differential_columns(s + 1), nrows=self.rank(s))
            lower_cols = self.differential_columns(s)
            lower_rows = 1 if s == 0 else self.rank(s - 1)
            lower = column_echelon(columns=lower_cols, nrows=lower_rows)
            # composition zero
            for col in upper.image_basis():
                image = [0] * lower_rows
                for j, v in enumerate(col):
                    if v:
                        for i, w in enumerate(lower_cols[j]):
                            if w:
                                image[i] += v * w
                if any(image):
                    raise VerificationError(f"p_{s} ∘ p_{s + 1} != 0", {"degree": s})
            ok = all(upper.contains(k) for k in lower.kernel_basis())
            report.degrees[s] = "exact" if ok else "failed"
            if not ok:
                raise VerificationError(f"resolution not exact at degree {s}", {"degree": s})
        logger.debug("resolution of %s exact through degree %d", self.group.name, self.max_degree - 1)
        return report

    def _base_sequence_exact(self) -> bool:
        G = self.group
        n = G.order
        incl = []
        for g in self.k_basis:
            col = [0] * n
            col[g] += 1
            col[G.identity] -= 1
            incl.append(col)
        eps = column_echelon([[1] * n])
        if not incl:
            return n == 1
        i_ech = column_echelon(columns=incl, nrows=n)
        if i_ech.rank != n - 1:
            return False
        return all(i_ech.contains(k) for k in eps.kernel_basis())


@dataclass
class ExactnessReport:
    group: str
    max_degree: int
    degrees: dict[int, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v in ("exact", "structural") for v in self.degrees.values())


def build_resolution(G: FiniteGroup, N: int, caps: Optional[Caps] = None, validate: bool = False) -> Resolution:
    res = Resolution(G, N, caps)
    if validate:
        res.validate()
    return res
