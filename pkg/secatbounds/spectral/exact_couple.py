# secatbounds/spectral/exact_couple.py
"""The exact couple D_0^{r,s} = Ext^r(I^s, A), E_0^{r,s} = Ext^r(Z[G/H] ⊗ I^s, A).

It comes from the long exact Ext sequences of

    0 → I^{s+1} --f_s--> Z[G/H] ⊗ I^s --g_s--> I^s → 0,

f_s = i ⊗ id and g_s(x ⊗ y) = σ(x)·y, with j_0 = g_s^*, k_0 = f_s^* and i_0
the connecting map. Every group is a ClassSpace; maps are matrices in
cocycle coordinates and derived pages are lattices inside page 0.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from secatbounds.config import Caps, get_settings, resolve_caps
from secatbounds.errors import InputError, VerificationError
from secatbounds.groups.finite_group import FiniteGroup, Subgroup
from secatbounds.linalg.invariants import AbelianInvariants, subquotient_invariants
from secatbounds.modules.gmodule import GModule
from secatbounds.modules.standard import restrict, tensor_product
from secatbounds.cohomology.classes import bs_class, height, restrict_cocycle
from secatbounds.cohomology.complex import ExtComplex, precompose
from secatbounds.cohomology.groups import Cocycle
from secatbounds.cohomology.resolution import Resolution
from secatbounds.spectral.subquotients import ClassMap, ClassSpace, Lattice

logger = logging.getLogger(__name__)

Cell = tuple[int, int]


class ExactCouple:
    """Page-0 groups and maps on demand, cached per cell."""

    def __init__(self, G: FiniteGroup, H: Subgroup, A: GModule, max_degree: int,
                 caps: Optional[Caps] = None):
        if A.group is not G:
            raise InputError("coefficients must be a module over G", field="coefficients")
        self.caps = resolve_caps(caps)
        self.group = G
        self.subgroup = H
        self.A = A
        self.max_degree = max_degree
        self.resolution = Resolution(G, max_degree + 1, self.caps)
        self.bs = bs_class(G, H, self.resolution, self.caps, verify=False)
        self._d: dict[int, ExtComplex] = {}
        self._e: dict[int, ExtComplex] = {}
        self._spaces: dict[tuple[str, int, int], ClassSpace] = {}
        self._maps: dict[tuple[str, int, int], ClassMap] = {}
        self._zero = ClassSpace(self.d_complex(0), -1)

    # --- complexes and modules ------------------------------------------------
    def d_complex(self, s: int) -> ExtComplex:
        cx = self._d.get(s)
        if cx is None:
            cx = self._d[s] = ExtComplex(self.resolution, self.bs.ideal_power(s), self.A, self.caps)
        return cx

    def e_complex(self, s: int) -> ExtComplex:
        cx = self._e.get(s)
        if cx is None:
            module = tensor_product(self.bs.permutation, self.bs.ideal_power(s), self.caps)
            cx = self._e[s] = ExtComplex(self.resolution, module, self.A, self.caps)
        return cx

    @property
    def index(self) -> int:
        return self.bs.cosets.index

    def _q(self, s: int) -> int:
        return self.bs.ideal_power(s).rank

    # --- spaces ---------------------------------------------------------------
    def D(self, r: int, s: int) -> ClassSpace:
        if r < 0 or s < 0:
            return self._zero
        key = ("D", r, s)
        sp = self._spaces.get(key)
        if sp is None:
            sp = self._spaces[key] = ClassSpace(self.d_complex(s), r)
        return sp

    def E(self, r: int, s: int) -> ClassSpace:
        if r < 0 or s < 0:
            return self._zero
        key = ("E", r, s)
        sp = self._spaces.get(key)
        if sp is None:
            sp = self._spaces[key] = ClassSpace(self.e_complex(s), r)
        return sp

    # --- module maps as old_m × new_m matrices for precompose -------------------
    def _g_matrix(self, s: int) -> list[list[int]]:
        k, q = self.index, self._q(s)
        T = [[0] * (k * q) for _ in range(q)]
        for c in range(k):
            for y in range(q):
                T[y][c * q + y] = 1
        return T

    def _f_matrix(self, s: int) -> list[list[int]]:
        k, q = self.index, self._q(s)
        p = self.bs.module.rank
        base = self.bs.cosets.base
        T = [[0] * (p * q) for _ in range(k * q)]
        for b, c in enumerate(self.bs.ideal.points):
            for y in range(q):
                T[c * q + y][b * q + y] = 1
                T[base * q + y][b * q + y] = -1
        return T

    def _retraction(self, s: int) -> list[list[int]]:
        k, q = self.index, self._q(s)
        p = self.bs.module.rank
        T = [[0] * (k * q) for _ in range(p * q)]
        for b, c in enumerate(self.bs.ideal.points):
            for y in range(q):
                T[b * q + y][c * q + y] = 1
        return T

    def _section(self, s: int) -> list[list[int]]:
        k, q = self.index, self._q(s)
        base = self.bs.cosets.base
        T = [[0] * q for _ in range(k * q)]
        for y in range(q):
            T[base * q + y][y] = 1
        return T

    def _pullback(self, r: int, T: list[list[int]], old_m: int, new_m: int) -> Callable[[list[int]], list[int]]:
        width = self.resolution.tensor_rank(r)
        a = self.A.rank
        return lambda values: precompose(values, T, width, old_m, new_m, a)

    # --- page-0 maps ----------------------------------------------------------
    def j0(self, r: int, s: int) -> ClassMap:
        """D^{r,s} → E^{r,s}"""
        key = ("j", r, s)
        mp = self._maps.get(key)
        if mp is None:
            src, tgt = self.D(r, s), self.E(r, s)
            fn = self._pullback(r, self._g_matrix(s), self._q(s), self.index * self._q(s)) if s >= 0 else None
            mp = self._maps[key] = ClassMap(src, tgt, fn, "j0")
        return mp

    def k0(self, r: int, s: int) -> ClassMap:
        """E^{r,s} → D^{r,s+1}"""
        key = ("k", r, s)
        mp = self._maps.get(key)
        if mp is None:
            src, tgt = self.E(r, s), self.D(r, s + 1)
            fn = self._pullback(r, self._f_matrix(s), self.index * self._q(s), self._q(s + 1)) if s >= 0 else None
            mp = self._maps[key] = ClassMap(src, tgt, fn, "k0")
        return mp

    def i0(self, r: int, s: int) -> ClassMap:
        """D^{r,s+1} → D^{r+1,s}, the connecting homomorphism."""
        key = ("i", r, s)
        mp = self._maps.get(key)
        if mp is None:
            src, tgt = self.D(r, s + 1), self.D(r + 1, s)
            fn = self._connecting(r, s) if s >= 0 and r >= 0 else None
            mp = self._maps[key] = ClassMap(src, tgt, fn, "i0")
        return mp

    def _connecting(self, r: int, s: int) -> Callable[[list[int]], list[int]]:
        q, q1, kq = self._q(s), self._q(s + 1), self.index * self._q(s)
        lift = self._pullback(r, self._retraction(s), q1, kq)
        down = self._pullback(r + 1, self._section(s), kq, q)
        up = self._pullback(r + 1, self._g_matrix(s), q, kq)
        complex = self.e_complex(s)

        def chase(values: list[int]) -> list[int]:
            image = complex.apply_coboundary(r, lift(values))
            pre = down(image)
            if up(pre) != image:
                raise VerificationError("coboundary of the lift is not in the image of g_s^*",
                                        {"cell": [r, s]})
            return pre

        return chase

    # --- derived pages --------------------------------------------------------
    def d_page(self, p: int, r: int, s: int) -> Lattice:
        """D_p^{r,s} = im(i_0^p : D_0^{r-p,s+p} → D_0^{r,s})."""
        if r < 0 or s < 0 or r - p < 0:
            return []
        lattice = self.D(r - p, s + p).full
        for t in range(p):
            lattice = self.i0(r - p + t, s + p - t - 1).image(lattice)
        return lattice

    def i_power_kernel(self, p: int, r: int, s: int) -> Lattice:
        """ker(i_0^p : D_0^{r,s} → D_0^{r+p,s-p})."""
        if p == 0:
            return []
        lattice: Lattice = []
        for t in range(p - 1, -1, -1):
            lattice = self.i0(r + t, s - t - 1).preimage(lattice)
        return lattice

    def e_page(self, p: int, r: int, s: int) -> tuple[Lattice, Lattice]:
        """(Z_p, B_p) inside E_0^{r,s}."""
        if p == 0:
            return self.E(r, s).full, []
        cycles = self.k0(r, s).preimage(self.d_page(p, r, s + 1))
        bounds = self.j0(r, s).image(self.i_power_kernel(p, r, s))
        space = self.E(r, s)
        if not all(space.contains_class(b, cycles) for b in bounds):
            raise VerificationError("B_p is not contained in Z_p", {"cell": [r, s], "page": p})
        return cycles, bounds

    def e_invariants(self, p: int, r: int, s: int) -> AbelianInvariants:
        space = self.E(r, s)
        if space.rank == 0:
            return AbelianInvariants()
        cycles, bounds = self.e_page(p, r, s)
        return _subquotient(space, cycles, bounds)

    def d_invariants(self, p: int, r: int, s: int) -> AbelianInvariants:
        return self.D(r, s).subgroup_invariants(self.d_page(p, r, s))


def _subquotient(space: ClassSpace, upper: Lattice, lower: Lattice) -> AbelianInvariants:
    return subquotient_invariants(space.rank, space.with_boundary(upper), space.with_boundary(lower))


@dataclass
class ExactCouplePage:
    page: int
    cells: dict[Cell, dict[str, AbelianInvariants]]
    maps: dict[str, dict[Cell, list[list[int]]]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        cells = [
            {"r": r, "s": s, "p": self.page, "D": v["D"].to_dict(), "E": v["E"].to_dict()}
            for (r, s), v in sorted(self.cells.items())
        ]
        out: dict = {"page": self.page, "cells": cells}
        if self.maps:
            out["maps"] = {
                name: [{"r": r, "s": s, "matrix": m} for (r, s), m in sorted(table.items())]
                for name, table in sorted(self.maps.items())
            }
        return out


@dataclass
class CheckResult:
    name: str
    cell: Optional[Cell]
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "cell": list(self.cell) if self.cell else None,
                "passed": self.passed, **self.detail}


def window_cells(window: int) -> list[Cell]:
    return [(r, s) for total in range(window + 1) for r in range(total, -1, -1) for s in [total - r]]


def _map_cells(fn: Callable[[Cell], object], cells: Iterable[Cell], workers: int) -> list:
    cells = list(cells)
    if workers <= 1:
        return [fn(c) for c in cells]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, cells))


def ext_page0(G: FiniteGroup, H: Subgroup, A: GModule, r: int, s: int,
              caps: Optional[Caps] = None) -> dict[str, AbelianInvariants]:
    couple = ExactCouple(G, H, A, r, caps)
    return {"D": couple.D(r, s).invariants, "E": couple.E(r, s).invariants}


def derived_pages(G: FiniteGroup, H: Subgroup, A: GModule, max_p: int, window: int,
                  caps: Optional[Caps] = None, couple: Optional[ExactCouple] = None,
                  workers: Optional[int] = None) -> list[ExactCouplePage]:
    """Pages 0..max_p on the cells r + s ≤ window."""
    if max_p < 0 or window < 0:
        raise InputError("page and window must be non-negative", field="window")
    couple = couple or ExactCouple(G, H, A, window + 1, caps)
    workers = workers or get_settings().engine.workers
    cells = window_cells(window)
    pages = []
    for p in range(max_p + 1):
        def cell_data(cell: Cell, p=p) -> dict[str, AbelianInvariants]:
            r, s = cell
            return {"D": couple.d_invariants(p, r, s), "E": couple.e_invariants(p, r, s)}

        data = _map_cells(cell_data, cells, workers) if p else [
            {"D": couple.D(r, s).invariants, "E": couple.E(r, s).invariants} for r, s in cells
        ]
        page = ExactCouplePage(p, dict(zip(cells, data)))
        if p == 0:
            page.maps = {
                "i0": {c: couple.i0(c[0], c[1]).matrix() for c in cells},
                "j0": {c: couple.j0(c[0], c[1]).matrix() for c in cells},
                "k0": {c: couple.k0(c[0], c[1]).matrix() for c in cells},
            }
        pages.append(page)
        logger.debug("page %d computed on %d cells", p, len(cells))
    return pages


def exactness_checks(couple: ExactCouple, window: int) -> list[CheckResult]:
    """Image = kernel at the three vertices of every window cell, and d_0 ∘ d_0 = 0."""
    results = []
    for r, s in window_cells(window):
        i0, j0, k0 = couple.i0(r, s), couple.j0(r, s), couple.k0(r, s)
        D_top, D_low, E = couple.D(r, s + 1), couple.D(r + 1, s), couple.E(r, s)
        checks = {
            "exact_at_D_top": D_top.same_subgroup(k0.image(E.full), i0.kernel()),
            "exact_at_D_low": D_low.same_subgroup(i0.image(D_top.full), couple.j0(r + 1, s).kernel()),
            "exact_at_E": E.same_subgroup(j0.image(couple.D(r, s).full), k0.kernel()),
        }
        d_once = couple.j0(r, s + 1).image(k0.image(E.full))
        d_twice = couple.j0(r, s + 2).image(couple.k0(r, s + 1).image(d_once))
        checks["d0_squared_zero"] = couple.E(r, s + 2).is_zero_subgroup(d_twice)
        for name, ok in checks.items():
            results.append(CheckResult(name, (r, s), ok))
    return results


def restriction_kernel_check(couple: ExactCouple, n: int) -> CheckResult:
    """D_1^{n,0} = ker[ι*: H^n(G;A) → H^n(H;Ã)]."""
    H = couple.subgroup
    space = couple.D(n, 0)
    res_H = Resolution(H.group, n + 1, couple.caps)
    A_H = restrict(couple.A, H)
    target = ClassSpace(ExtComplex(res_H, None, A_H, couple.caps), n)

    def restrict_values(values: list[int]) -> list[int]:
        c = Cocycle(n, couple.A, tuple(values))
        return list(restrict_cocycle(c, couple.resolution, H, res_H, couple.caps)[0].values)

    restriction = ClassMap(space, target, restrict_values, "restriction")
    ok = space.same_subgroup(couple.d_page(1, n, 0), restriction.kernel())
    return CheckResult("d1_is_restriction_kernel", (n, 0), ok)


def membership_chain_check(couple: ExactCouple, n: int) -> list[CheckResult]:
    """D_{s+1}^{n,0} = D_s^{n,0} ∩ ker j_s, with j_s(i^s x) = [j_0 x] in E_s."""
    results = []
    target = couple.D(n, 0)
    for s in range(n):
        _, bounds = couple.e_page(s, n - s, s)
        lifts = couple.j0(n - s, s).preimage(bounds)
        lattice = lifts
        for t in range(s):
            lattice = couple.i0(n - s + t, s - t - 1).image(lattice)
        ok = target.same_subgroup(lattice, couple.d_page(s + 1, n, 0))
        results.append(CheckResult("membership_chain", (n, s), ok, {"page": s}))
    return results


@dataclass
class DpReport:
    degree: int
    page: int
    column: list[dict]
    height_value: int
    height_at_least: bool

    @property
    def statement(self) -> str:
        return f"secat(H -> G) >= {self.page}"

    def to_dict(self) -> dict:
        return {"degree": self.degree, "p": self.page, "implied": self.statement, "column": self.column,
                "height": self.height_value, "height_at_least": self.height_at_least}


def dp_lower_bound(G: FiniteGroup, H: Subgroup, A: GModule, n: int, caps: Optional[Caps] = None,
                   couple: Optional[ExactCouple] = None) -> DpReport:
    """Largest p with D_p^{n,0} ≠ 0, checked against height(ω) ≥ p."""
    caps = resolve_caps(caps)
    couple = couple or ExactCouple(G, H, A, n, caps)
    space = couple.D(n, 0)
    column = []
    best = 0
    for p in range(n + 1):
        inv = space.subgroup_invariants(couple.d_page(p, n, 0))
        column.append({"p": p, "invariants": inv.to_dict()})
        if not inv.is_zero:
            best = p
    h = height(G, H, max(best, 1), caps) if best else None
    if h is not None and h.value < best:
        raise VerificationError("D_p^{n,0} nonzero beyond the height of ω", {"p": best, "height": h.value})
    return DpReport(n, best, column, h.value if h else 0, h.at_least if h else False)
