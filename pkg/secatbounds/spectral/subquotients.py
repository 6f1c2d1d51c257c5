# secatbounds/spectral/subquotients.py
"""Subgroups of Ext groups as lattices in cocycle coordinates.

A ClassSpace is Z^k = Z^r in the kernel basis of δ^r, together with the
coboundary lattice B. A subgroup of H^r is carried as a lattice L ⊇ B, so
that invariants, images and preimages are plain lattice arithmetic.
"""
from __future__ import annotations

from functools import cached_property
from typing import Callable, Sequence

from secatbounds.linalg.invariants import (
    AbelianInvariants,
    lattice_contains,
    lattice_equal,
    lattice_preimage,
    quotient_invariants,
    subquotient_invariants,
)
from secatbounds.cohomology.complex import ExtComplex

Lattice = list[list[int]]


class ClassSpace:
    def __init__(self, complex: ExtComplex, degree: int):
        self.complex = complex
        self.degree = degree
        self.dim = complex.dim(degree) if degree >= 0 else 0

    @cached_property
    def basis(self) -> Lattice:
        if self.degree < 0 or self.dim == 0:
            return []
        return self.complex.cocycle_basis(self.degree)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @cached_property
    def boundary(self) -> Lattice:
        if self.rank == 0 or self.degree == 0:
            return []
        ech = self.complex.cocycle_echelon(self.degree)
        gens = [ech.kernel_coordinates(col) for col in self.complex.coboundary_columns(self.degree - 1)]
        return [g for g in gens if any(g)]

    @cached_property
    def invariants(self) -> AbelianInvariants:
        return quotient_invariants(self.rank, self.boundary)

    @property
    def full(self) -> Lattice:
        return [[1 if i == j else 0 for i in range(self.rank)] for j in range(self.rank)]

    def coords(self, values: Sequence[int]) -> list[int]:
        if self.rank == 0:
            return []
        return self.complex.cocycle_echelon(self.degree).kernel_coordinates(values)

    def cochain(self, t: Sequence[int]) -> list[int]:
        out = [0] * self.dim
        for c, b in zip(t, self.basis):
            if c:
                for i, v in enumerate(b):
                    if v:
                        out[i] += c * v
        return out

    def with_boundary(self, lattice: Lattice) -> Lattice:
        return [list(v) for v in lattice] + self.boundary

    def subgroup_invariants(self, lattice: Lattice) -> AbelianInvariants:
        """Invariants of (L + B)/B."""
        if self.rank == 0:
            return AbelianInvariants()
        return subquotient_invariants(self.rank, self.with_boundary(lattice), self.boundary)

    def is_zero_subgroup(self, lattice: Lattice) -> bool:
        return all(self.contains_class(v, self.boundary) for v in lattice)

    def contains_class(self, t: Sequence[int], lattice: Lattice) -> bool:
        return lattice_contains(self.rank, self.with_boundary(lattice), t)

    def same_subgroup(self, first: Lattice, second: Lattice) -> bool:
        if self.rank == 0:
            return True
        return lattice_equal(self.rank, self.with_boundary(first), self.with_boundary(second))


class ClassMap:
    """A map of cohomology groups induced by a cochain map, as a matrix in cocycle coordinates."""

    def __init__(self, source: ClassSpace, target: ClassSpace, cochain_map: Callable[[list[int]], list[int]],
                 name: str = "map"):
        self.source = source
        self.target = target
        self.name = name
        self._cochain_map = cochain_map

    @cached_property
    def columns(self) -> Lattice:
        if self.target.rank == 0:
            return [[] for _ in self.source.basis]
        return [self.target.coords(self._cochain_map(b)) for b in self.source.basis]

    def apply(self, t: Sequence[int]) -> list[int]:
        out = [0] * self.target.rank
        for c, col in zip(t, self.columns):
            if c:
                for i, v in enumerate(col):
                    if v:
                        out[i] += c * v
        return out

    def image(self, lattice: Lattice) -> Lattice:
        return [self.apply(t) for t in lattice]

    def preimage(self, lattice: Lattice) -> Lattice:
        """Generators of {t : Φt ∈ L + B_target} (contains B_source)."""
        if self.source.rank == 0:
            return []
        if self.target.rank == 0:
            return self.source.full
        return lattice_preimage(self.source.rank, self.target.rank, self.columns,
                                self.target.with_boundary(lattice))

    def kernel(self) -> Lattice:
        return self.preimage([])

    def matrix(self) -> list[list[int]]:
        """Row-major target.rank × source.rank."""
        return [[col[i] for col in self.columns] for i in range(self.target.rank)]
