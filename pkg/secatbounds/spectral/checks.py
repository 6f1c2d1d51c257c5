# secatbounds/spectral/checks.py
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from secatbounds.config import Caps, resolve_caps
from secatbounds.errors import VerificationError
from secatbounds.groups.finite_group import CosetSpace, FiniteGroup, Subgroup
from secatbounds.linalg.invariants import AbelianInvariants
from secatbounds.modules.gmodule import GModule, GMap
from secatbounds.modules.standard import (
    equivariant_maps,
    permutation_module,
    restrict,
    tensor_product,
)
from secatbounds.cohomology.complex import ExtComplex
from secatbounds.cohomology.groups import complex_cohomology
from secatbounds.cohomology.resolution import Resolution
from secatbounds.spectral.exact_couple import ExactCouple
from secatbounds.spectral.orbits import orbit_decompose

logger = logging.getLogger(__name__)


@dataclass
class ComparisonReport:
    name: str
    degree: int
    left: AbelianInvariants
    right: AbelianInvariants
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.left == self.right and all(v for v in self.details.values() if isinstance(v, bool))

    def to_dict(self) -> dict:
        return {"name": self.name, "degree": self.degree, "left": self.left.to_dict(),
                "right": self.right.to_dict(), "ok": self.ok, **self.details}


def shapiro_check(G: FiniteGroup, H: Subgroup, M: GModule, A: GModule, r: int,
                  caps: Optional[Caps] = None) -> ComparisonReport:
    """Ext^r_G(Z[G/H] ⊗ M, A) against Ext^r_H(res M, res A), computed independently."""
    caps = resolve_caps(caps)
    cosets = CosetSpace(G, H)
    induced = tensor_product(permutation_module(G, H, cosets), M, caps)
    left = complex_cohomology(ExtComplex(Resolution(G, r + 1, caps), induced, A, caps), r).invariants
    M_H, A_H = restrict(M, H), restrict(A, H)
    right = complex_cohomology(ExtComplex(Resolution(H.group, r + 1, caps), M_H, A_H, caps), r).invariants
    details: dict = {}
    if r == 0:
        details.update(_hom_isomorphism(G, H, cosets, M, A, induced, M_H, A_H, caps))
    report = ComparisonReport("shapiro", r, left, right, details)
    if not report.ok:
        raise VerificationError("Shapiro isomorphism fails", report.to_dict())
    return report


def _hom_isomorphism(G, H, cosets, M, A, induced, M_H, A_H, caps) -> dict:
    """Φ(F) = F restricted to H ⊗ M and Ψ(f) = Σ_c ρ_A(g_c) f ρ_M(g_c^{-1}) on block c."""
    m = M.rank
    base = cosets.base

    def phi(F: np.ndarray) -> np.ndarray:
        return F[:, base * m:(base + 1) * m]

    def psi(f: np.ndarray) -> np.ndarray:
        out = np.zeros((A.rank, cosets.index * m), dtype=np.int64)
        for c, g in enumerate(cosets.representatives):
            out[:, c * m:(c + 1) * m] = A.matrix(g) @ f @ M.matrix(G.inv(g))
        return out

    over_G = equivariant_maps(induced, A, caps)
    over_H = equivariant_maps(M_H, A_H, caps)
    round_G = all(np.array_equal(psi(phi(F.matrix)), F.matrix) for F in over_G)
    round_H = all(np.array_equal(phi(psi(f.matrix)), f.matrix) for f in over_H)
    psi_equivariant = all(GMap(induced, A, psi(f.matrix)).is_equivariant() for f in over_H)
    phi_equivariant = all(GMap(M_H, A_H, phi(F.matrix)).is_equivariant() for F in over_G)
    return {
        "psi_phi_identity": round_G,
        "phi_psi_identity": round_H,
        "psi_equivariant": psi_equivariant,
        "phi_equivariant": phi_equivariant,
        "hom_ranks": [len(over_G), len(over_H)],
    }


def e0_decomposition_check(G: FiniteGroup, H: Subgroup, A: GModule, r: int, s: int,
                           caps: Optional[Caps] = None, couple: Optional[ExactCouple] = None) -> ComparisonReport:
    """E_0^{r,s} against the sum over orbits C ⊂ ((G/H)*)^s of H^r(N_C; res A)."""
    caps = resolve_caps(caps)
    couple = couple or ExactCouple(G, H, A, r, caps)
    left = couple.E(r, s).invariants
    decomposition = orbit_decompose(G, H, s, caps, couple.bs.cosets)
    right = AbelianInvariants()
    blocks = []
    for orbit in decomposition.prime_orbits:
        N_C = orbit.isotropy
        res = Resolution(N_C.group, r + 1, caps)
        part = complex_cohomology(ExtComplex(res, None, restrict(A, N_C), caps), r).invariants
        blocks.append({"isotropy_order": N_C.order, "invariants": part.to_dict()})
        right = right.direct_sum(part)
    report = ComparisonReport("e0_decomposition", r, left, right, {"s": s, "orbits": blocks})
    if not report.ok:
        raise VerificationError("E_0 orbit decomposition fails", report.to_dict())
    return report
