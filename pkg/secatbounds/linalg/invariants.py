# secatbounds/linalg/invariants.py
"""Finitely generated abelian groups and sublattice arithmetic in Z^n."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from secatbounds.linalg.echelon import column_echelon, rows_of
from secatbounds.linalg.smith import smith


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank ⊕ Z/d_1 ⊕ ... with d_1 | d_2 | ... and every d_i > 1."""
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    @classmethod
    def from_divisors(cls, free_rank: int, divisors: Sequence[int]) -> "AbelianInvariants":
        """Normalize arbitrary cyclic orders (zeros count as free summands)."""
        free = free_rank + sum(1 for d in divisors if d == 0)
        finite = [abs(d) for d in divisors if abs(d) > 1]
        if not finite:
            return cls(free, ())
        diag = [[d if i == j else 0 for j in range(len(finite))] for i, d in enumerate(finite)]
        return cls(free, smith(diag).torsion)

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> float:
        if self.free_rank:
            return float("inf")
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def direct_sum(self, other: "AbelianInvariants") -> "AbelianInvariants":
        return AbelianInvariants.from_divisors(
            self.free_rank + other.free_rank, self.torsion + other.torsion
        )

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion), "text": str(self)}


ZERO_GROUP = AbelianInvariants()


def quotient_invariants(dim: int, generators: Sequence[Sequence[int]]) -> AbelianInvariants:
    """Invariants of Z^dim / span(generators)."""
    if not generators:
        return AbelianInvariants(dim, ())
    rows = rows_of(generators, dim)
    decomposition = smith(rows, ncols=len(generators))
    return AbelianInvariants(dim - decomposition.rank, decomposition.torsion)


def lattice_basis(dim: int, generators: Sequence[Sequence[int]]) -> list[list[int]]:
    if not generators:
        return []
    return column_echelon(columns=[list(g) for g in generators], nrows=dim).image_basis()


def lattice_contains(dim: int, generators: Sequence[Sequence[int]], vector: Sequence[int]) -> bool:
    if not generators:
        return not any(vector)
    return column_echelon(columns=[list(g) for g in generators], nrows=dim).contains(vector)


def lattice_equal(dim: int, first: Sequence[Sequence[int]], second: Sequence[Sequence[int]]) -> bool:
    e1 = column_echelon(columns=[list(g) for g in first], nrows=dim) if first else None
    e2 = column_echelon(columns=[list(g) for g in second], nrows=dim) if second else None

    def inside(vectors, ech) -> bool:
        if ech is None:
            return not any(any(v) for v in vectors)
        return all(ech.contains(v) for v in vectors)

    return inside(second, e1) and inside(first, e2)


def subquotient_invariants(dim: int, upper: Sequence[Sequence[int]],
                           lower: Sequence[Sequence[int]]) -> AbelianInvariants:
    """Invariants of L/B for lattices B ⊆ L ⊆ Z^dim given by generators."""
    basis = lattice_basis(dim, upper)
    if not basis:
        return AbelianInvariants()
    ech = column_echelon(columns=basis, nrows=dim)
    coords = []
    for b in lower:
        x = ech.solve(b)
        if x is None:
            raise ValueError("lower lattice is not contained in the upper one")
        coords.append(x)
    return quotient_invariants(len(basis), coords)


def lattice_preimage(source_dim: int, target_dim: int, images: Sequence[Sequence[int]],
                     target_lattice: Sequence[Sequence[int]]) -> list[list[int]]:
    """Generators of {t ∈ Z^source_dim : Φ·t ∈ L}.

    ``images`` are the columns Φ(e_j); L is given by generators in Z^target_dim.
    """
    columns = [list(c) for c in images] + [[-v for v in g] for g in target_lattice]
    if not columns:
        return []
    if target_dim == 0:
        return [[1 if i == j else 0 for i in range(source_dim)] for j in range(source_dim)]
    kernel = column_echelon(columns=columns, nrows=target_dim).kernel_basis()
    gens = [k[:source_dim] for k in kernel]
    return [g for g in gens if any(g)]
