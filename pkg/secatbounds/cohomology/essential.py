# secatbounds/cohomology/essential.py
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from secatbounds.config import Caps, resolve_caps
from secatbounds.errors import CapExceededError, InputError, NotNormalError, VerificationError
from secatbounds.groups.finite_group import FiniteGroup, GroupHom, Subgroup, quotient_group
from secatbounds.linalg.echelon import column_echelon
from secatbounds.modules.gmodule import GModule, GMap
from secatbounds.modules.standard import equivariant_maps, pullback_module, trivial_module
from secatbounds.cohomology.classes import RelativeClass, bs_class, omega_power, push_forward
from secatbounds.cohomology.complex import ExtComplex
from secatbounds.cohomology.groups import Cocycle, cohomology
from secatbounds.cohomology.resolution import Resolution

logger = logging.getLogger(__name__)


@dataclass
class EssentialReport:
    degree: int
    essential: bool
    witness: Optional[GMap]
    coefficients: list[int] = field(default_factory=list)  # in the Hom_G(I^n, A) basis
    basis_size: int = 0

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "essential": self.essential,
            "witness": self.witness.rows if self.witness is not None else None,
            "coefficients": self.coefficients,
            "hom_basis_size": self.basis_size,
        }


def essential_certify(G: FiniteGroup, H: Subgroup, u: Cocycle, caps: Optional[Caps] = None,
                      bs: Optional[RelativeClass] = None) -> EssentialReport:
    """Search Hom_G(I^n, A) for φ with φ_*(ω^n) - u a coboundary.

    Solves [φ_j*(ω^n) | -δ^{n-1}] (t, x) = u over Z; infeasibility is a proof
    that no witness exists.
    """
    caps = resolve_caps(caps)
    n = u.degree
    A = u.coefficients
    if u.source is not None:
        raise InputError("essential classes are cohomology classes", field="cocycle")
    if bs is None or bs.resolution.max_degree < n + 1:
        bs = bs_class(G, H, Resolution(G, n + 1, caps), caps)
    res = bs.resolution
    complex = ExtComplex(res, None, A, caps)
    if not complex.is_cocycle(n, u.values):
        raise InputError("input is not a cocycle", field="cocycle")
    if complex.is_coboundary(n, u.values):
        raise InputError("class is zero; essentiality is only defined for nonzero classes", field="cocycle")
    omega_n = omega_power(bs, n)
    maps = equivariant_maps(omega_n.coefficients, A, caps)
    images = [list(push_forward(phi, omega_n).values) for phi in maps]
    boundary = [[-v for v in col] for col in complex.coboundary_columns(n - 1)] if n > 0 else []
    columns = images + boundary
    solution = None
    if columns:
        solution = column_echelon(columns=columns, nrows=complex.dim(n)).solve(list(u.values))
    if solution is None:
        logger.debug("no essential witness in degree %d (%d maps searched)", n, len(maps))
        return EssentialReport(n, False, None, [], len(maps))
    t = solution[:len(maps)]
    matrix = np.zeros((A.rank, omega_n.coefficients.rank), dtype=np.int64)
    for tj, phi in zip(t, maps):
        if tj:
            matrix += tj * phi.matrix
    witness = GMap(omega_n.coefficients, A, matrix, name="phi")
    if not witness.is_equivariant():
        raise VerificationError("witness is not equivariant", {"degree": n})
    # φ_*(ω^n) = u ≠ 0 forces ω^n ≠ 0
    power_complex = ExtComplex(res, None, omega_n.coefficients, caps)
    if power_complex.is_coboundary(n, omega_n.values):
        raise VerificationError("essential class found while ω^n = 0", {"degree": n})
    return EssentialReport(n, True, witness, t, len(maps))


def pullback_cochain(hom: GroupHom, cocycle: Cocycle, source_res: Resolution,
                     target_res: Resolution) -> Cocycle:
    """π^#c through the chain map g - 1 ↦ π(g) - 1 (zero when π(g) = e)."""
    n = cocycle.degree
    a = cocycle.rank
    Q = hom.target
    images = []
    for g in source_res.k_basis:
        img = hom(g)
        images.append(None if img == Q.identity else int(target_res.k_index[img]))
    kG, kQ = source_res.k_rank, target_res.k_rank
    values = [0] * (kG ** n * a)
    for z in range(kG ** n):
        zq = 0
        for d in source_res.k_tuple(z, n):
            if images[d] is None:
                zq = None
                break
            zq = zq * kQ + images[d]
        if zq is not None:
            values[z * a:(z + 1) * a] = cocycle.values[zq * a:(zq + 1) * a]
    module = pullback_module(cocycle.coefficients, hom)
    return Cocycle(n, module, tuple(values), cocycle.is_cocycle)


@dataclass
class NormalCaseReport:
    quotient_order: int
    modules_agree: bool
    exact: bool
    cohomologous: bool
    essential: list[dict] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.modules_agree and self.cohomologous and all(e["ok"] for e in self.essential)

    def to_dict(self) -> dict:
        return {
            "quotient_order": self.quotient_order,
            "modules_agree": self.modules_agree,
            "exact": self.exact,
            "cohomologous": self.cohomologous,
            "essential": self.essential,
            "skipped": self.skipped,
        }


def normal_case_check(G: FiniteGroup, N: Subgroup, A: Optional[GModule] = None, max_degree: int = 1,
                      caps: Optional[Caps] = None) -> NormalCaseReport:
    """π*β = ω for π: G → G/N, and pulled-back classes of H^n(G/N; A) are essential relative to N.

    ``A`` is a module over the quotient (default: trivial Z).
    """
    caps = resolve_caps(caps)
    if N.parent is not G:
        raise InputError("subgroup belongs to a different group", field="subgroup")
    if not N.is_normal():
        raise NotNormalError("subgroup is not normal", field="subgroup")
    Q, quotient = quotient_group(G, N)
    top = max(max_degree, 1) + 1
    res_G = Resolution(G, top, caps)
    res_Q = Resolution(Q, top, caps)
    omega = bs_class(G, N, res_G, caps)
    beta = bs_class(Q, Subgroup.trivial(Q), res_Q, caps)
    pulled = pullback_cochain(quotient, beta.cocycle, res_G, res_Q)
    # Q-element i is the i-th coset of N, so π*(I_Q) and I_{G/N} share a basis
    modules_agree = pulled.coefficients.rank == omega.module.rank and all(
        np.array_equal(pulled.coefficients.matrix(g), omega.module.matrix(g)) for g in G.elements
    )
    exact = list(pulled.values) == list(omega.cocycle.values)
    cohomologous = exact
    if not exact and modules_agree:
        diff = [x - y for x, y in zip(pulled.values, omega.cocycle.values)]
        cohomologous = ExtComplex(res_G, None, omega.module, caps).is_coboundary(1, diff)
    report = NormalCaseReport(Q.order, modules_agree, exact, cohomologous)
    if not cohomologous:
        raise VerificationError("π*β is not cohomologous to ω", {"group": G.name})
    A_Q = A if A is not None else trivial_module(Q)
    if A_Q.group is not Q:
        raise InputError("coefficients must be a module over the quotient", field="coefficients")
    for n in range(1, max_degree + 1):
        try:
            H_Q = cohomology(Q, A_Q, n, res_Q, caps)
        except CapExceededError as exc:
            report.skipped.append(f"degree {n}: {exc}")
            continue
        for v in H_Q.representatives:
            u = pullback_cochain(quotient, v, res_G, res_Q)
            target = ExtComplex(res_G, None, u.coefficients, caps)
            if target.is_coboundary(n, u.values):
                report.essential.append({"degree": n, "pullback_zero": True, "essential": False, "ok": True})
                continue
            cert = essential_certify(G, N, u, caps, bs=omega)
            report.essential.append({"degree": n, "pullback_zero": False, "essential": cert.essential,
                                     "ok": cert.essential})
            if not cert.essential:
                raise VerificationError("pulled-back class is not essential", {"degree": n,
                                                                             "values": list(u.values)})
    return report
