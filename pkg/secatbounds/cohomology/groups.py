# secatbounds/cohomology/groups.py
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from secatbounds.config import Caps, get_settings, resolve_caps
from secatbounds.errors import DegreeError
from secatbounds.groups.finite_group import FiniteGroup
from secatbounds.linalg.echelon import ColumnEchelon
from secatbounds.linalg.invariants import AbelianInvariants
from secatbounds.linalg.smith import SmithDecomposition, matvec, smith
from secatbounds.modules.gmodule import GModule
from secatbounds.cohomology.complex import ExtComplex
from secatbounds.cohomology.resolution import Resolution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cocycle:
    """Values of an equivariant map P_n ⊗ M → A on the basis {1 ⊗ z ⊗ μ}.

    ``source`` is None for ordinary cochains (M = Z).
    """
    degree: int
    coefficients: GModule
    values: tuple[int, ...]
    is_cocycle: bool = True
    source: Optional[GModule] = None

    @property
    def rank(self) -> int:
        return self.coefficients.rank

    @property
    def is_zero(self) -> bool:
        return not any(self.values)

    def block(self, z: int) -> tuple[int, ...]:
        width = self.rank * (self.source.rank if self.source is not None else 1)
        return self.values[z * width:(z + 1) * width]

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "coefficients": self.coefficients.name,
            "rank": self.rank,
            "values": list(self.values),
            "cocycle": self.is_cocycle,
        }


@dataclass
class CohomologyGroup:
    """Z^n / B^n with representatives read off a Smith decomposition.

    Cocycles are coordinatized in the kernel basis of the coboundary; the
    coboundaries in those coordinates are Smith-reduced once, so that class
    membership and class coordinates are a matrix-vector product.
    """
    degree: int
    coefficients: GModule
    invariants: AbelianInvariants
    representatives: list[Cocycle]
    orders: list[int]  # 0 for free summands
    complex: Optional[ExtComplex] = field(default=None, repr=False)
    _cocycles: Optional[ColumnEchelon] = field(default=None, repr=False)
    _basis: list[list[int]] = field(default_factory=list, repr=False)
    _smith: Optional[SmithDecomposition] = field(default=None, repr=False)
    _kinds: list[int] = field(default_factory=list, repr=False)  # smith row per summand

    @property
    def is_zero(self) -> bool:
        return self.invariants.is_zero

    def class_of(self, values: Sequence[int]) -> list[int]:
        """Coordinates of [values] in the summands (torsion ones reduced mod d)."""
        if not self._basis:
            if any(values):
                raise ValueError("not a cocycle")
            return []
        coords = self._cocycles.kernel_coordinates(values)
        y = matvec(self._smith.U, coords) if self._smith is not None else coords
        out = []
        for row, d in zip(self._kinds, self.orders):
            out.append(y[row] % d if d else y[row])
        return out

    def is_zero_class(self, values: Sequence[int]) -> bool:
        return not any(self.class_of(values))

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "coefficients": self.coefficients.name,
            "invariants": self.invariants.to_dict(),
            "representatives": [
                {"order": d, "values": list(c.values)} for c, d in zip(self.representatives, self.orders)
            ],
        }


def group_from_cocycle_data(degree: int, coefficients: GModule, cocycles: Optional[ColumnEchelon],
                            boundary_columns: list[list[int]], source: Optional[GModule] = None,
                            complex: Optional[ExtComplex] = None) -> CohomologyGroup:
    """Assemble H = ker / im from the cocycle echelon and the coboundary generators."""
    basis = cocycles.kernel_basis() if cocycles is not None else []
    k = len(basis)
    if k == 0:
        return CohomologyGroup(degree, coefficients, AbelianInvariants(), [], [], complex, cocycles)
    coords = [cocycles.kernel_coordinates(col) for col in boundary_columns if any(col)]
    if coords:
        rows = [[c[i] for c in coords] for i in range(k)]
        dec = smith(rows, ncols=len(coords))
        U_inv = dec.U_inv
        diag = list(dec.diagonal) + [0] * (k - dec.rank)
    else:
        dec = None
        U_inv = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
        diag = [0] * k
    reps, orders, kinds = [], [], []
    for i, d in enumerate(diag):
        if d == 1:
            continue
        t = [U_inv[j][i] for j in range(k)]
        vec = [0] * len(basis[0])
        for j, tj in enumerate(t):
            if tj:
                for idx, v in enumerate(basis[j]):
                    if v:
                        vec[idx] += tj * v
        reps.append(Cocycle(degree, coefficients, tuple(vec), True, source))
        orders.append(d)
        kinds.append(i)
    free = sum(1 for d in orders if d == 0)
    invariants = AbelianInvariants(free, tuple(d for d in orders if d))
    # torsion first then free, matching AbelianInvariants
    order_key = sorted(range(len(orders)), key=lambda i: (orders[i] == 0, i))
    group = CohomologyGroup(
        degree, coefficients, invariants,
        [reps[i] for i in order_key], [orders[i] for i in order_key],
        complex, cocycles, basis, dec, [kinds[i] for i in order_key],
    )
    logger.debug("H^%d(%s) = %s", degree, coefficients.name, invariants)
    return group


def complex_cohomology(complex: ExtComplex, r: int) -> CohomologyGroup:
    if r < 0:
        raise DegreeError("negative degree", field="degree")
    complex.resolution.require(r + 1)
    cocycles = complex.cocycle_echelon(r) if complex.dim(r) else None
    boundary = complex.coboundary_columns(r - 1) if r > 0 and complex.dim(r - 1) else []
    source = None if complex.is_cohomology else complex.source
    return group_from_cocycle_data(r, complex.target, cocycles, boundary, source, complex)


def cohomology(G: FiniteGroup, A: GModule, n: int, resolution: Optional[Resolution] = None,
               caps: Optional[Caps] = None) -> CohomologyGroup:
    """H^n(G; A) from the resolution ZG ⊗ K^*."""
    caps = resolve_caps(caps)
    if n < 0:
        raise DegreeError("negative degree", field="degree")
    if resolution is None:
        resolution = Resolution(G, n + 1, caps)
    if resolution.group is not G:
        raise ValueError("resolution is for a different group")
    if resolution.max_degree < n + 1:
        raise DegreeError(f"resolution covers degrees ≤ {resolution.max_degree}, need {n + 1}", field="degree")
    return complex_cohomology(ExtComplex(resolution, None, A, caps), n)


def ext_group(G: FiniteGroup, M: GModule, A: GModule, r: int, resolution: Optional[Resolution] = None,
              caps: Optional[Caps] = None) -> CohomologyGroup:
    """Ext^r_G(M, A) for Z-free M, resolving M by P_* ⊗ M."""
    caps = resolve_caps(caps)
    resolution = resolution or Resolution(G, r + 1, caps)
    return complex_cohomology(ExtComplex(resolution, M, A, caps), r)


def is_coboundary(cocycle: Cocycle, resolution: Resolution, caps: Optional[Caps] = None) -> bool:
    complex = ExtComplex(resolution, cocycle.source, cocycle.coefficients, caps)
    return complex.is_coboundary(cocycle.degree, cocycle.values)


def cohomology_range(G: FiniteGroup, A: GModule, degrees: Sequence[int],
                     caps: Optional[Caps] = None, workers: Optional[int] = None) -> list[CohomologyGroup]:
    """H^n for several n over one shared complex, in the order given."""
    caps = resolve_caps(caps)
    workers = workers or get_settings().engine.workers
    resolution = Resolution(G, max(degrees) + 1, caps)
    complex = ExtComplex(resolution, None, A, caps)
    # the complex caches per degree; build its pieces up front so threads only read
    for n in sorted(degrees):
        if complex.dim(n):
            complex.cocycle_echelon(n)
        if n > 0 and complex.dim(n - 1):
            complex.coboundary_columns(n - 1)
    if workers <= 1:
        return [complex_cohomology(complex, n) for n in degrees]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda n: complex_cohomology(complex, n), degrees))
