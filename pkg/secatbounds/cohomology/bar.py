# secatbounds/cohomology/bar.py
"""Normalized inhomogeneous cochains, kept independent of the resolution code.

A cochain is a function (G∖{e})^n → A, stored in lexicographic order of the
tuples (non-identity elements in index order) with the A coordinate last.
"""
from __future__ import annotations

import itertools
import logging
from typing import Optional

from secatbounds.config import Caps, resolve_caps
from secatbounds.errors import DegreeError
from secatbounds.groups.finite_group import FiniteGroup
from secatbounds.linalg.echelon import column_echelon
from secatbounds.modules.gmodule import GModule
from secatbounds.cohomology.groups import CohomologyGroup, group_from_cocycle_data

logger = logging.getLogger(__name__)


def _bar_columns(G: FiniteGroup, A: GModule, n: int) -> list[list[int]]:
    """Columns of δ^n : C^n → C^{n+1}."""
    nonid = G.non_identity
    pos = {g: i for i, g in enumerate(nonid)}
    k = len(nonid)
    a = A.rank
    ncols = k ** n * a
    nrows = k ** (n + 1) * a
    cols = [[0] * nrows for _ in range(ncols)]
    e = G.identity

    def index(tup) -> int:
        z = 0
        for g in tup:
            z = z * k + pos[g]
        return z

    for row_t, tup in enumerate(itertools.product(nonid, repeat=n + 1)):
        row0 = row_t * a
        # g_1 · f(g_2, ..., g_{n+1})
        act = A.matrix(tup[0])
        c0 = index(tup[1:]) * a
        for alpha in range(a):
            for ain in range(a):
                v = int(act[alpha, ain])
                if v:
                    cols[c0 + ain][row0 + alpha] += v
        for i in range(n):
            prod = G.mul(tup[i], tup[i + 1])
            if prod == e:
                continue
            sign = -1 if i % 2 == 0 else 1  # (-1)^{i+1}
            c = index(tup[:i] + (prod,) + tup[i + 2:]) * a
            for alpha in range(a):
                cols[c + alpha][row0 + alpha] += sign
        sign = -1 if n % 2 == 0 else 1  # (-1)^{n+1}
        c = index(tup[:n]) * a
        for alpha in range(a):
            cols[c + alpha][row0 + alpha] += sign
    return cols


def bar_cohomology(G: FiniteGroup, A: GModule, n: int, caps: Optional[Caps] = None) -> CohomologyGroup:
    """H^n(G; A) from the normalized bar complex."""
    if n < 0:
        raise DegreeError("negative degree", field="degree")
    caps = resolve_caps(caps)
    caps.check("max_degree", n)
    k = G.order - 1
    caps.check("max_rank", k ** (n + 1) * A.rank)
    dim = k ** n * A.rank
    if dim == 0:
        return group_from_cocycle_data(n, A, None, [])
    cocycles = column_echelon(columns=_bar_columns(G, A, n), nrows=k ** (n + 1) * A.rank)
    boundary = _bar_columns(G, A, n - 1) if n > 0 else []
    logger.debug("bar complex of %s in degree %d: %d cochains", G.name, n, dim)
    return group_from_cocycle_data(n, A, cocycles, boundary)
