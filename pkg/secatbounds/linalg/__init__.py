from secatbounds.linalg.echelon import ColumnEchelon, column_echelon, kernel_basis, rank, solve
from secatbounds.linalg.invariants import (
    ZERO_GROUP,
    AbelianInvariants,
    lattice_basis,
    lattice_contains,
    lattice_equal,
    lattice_preimage,
    quotient_invariants,
    subquotient_invariants,
)
from secatbounds.linalg.smith import SmithDecomposition, smith, xgcd

__all__ = [
    "AbelianInvariants",
    "ColumnEchelon",
    "SmithDecomposition",
    "ZERO_GROUP",
    "column_echelon",
    "kernel_basis",
    "lattice_basis",
    "lattice_contains",
    "lattice_equal",
    "lattice_preimage",
    "quotient_invariants",
    "rank",
    "smith",
    "solve",
    "subquotient_invariants",
    "xgcd",
]
