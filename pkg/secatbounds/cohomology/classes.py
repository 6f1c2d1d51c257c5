# secatbounds/cohomology/classes.py
"""The relative Berstein-Schwarz class ω ∈ H^1(G; I), its cup powers and height.

A degree-1 cochain is the list of its values on g - 1 (g ≠ e); ω sends
g - 1 to gH - H. Cup products use the lift â(y) = a(1 ⊗ y), so that on the
basis of K^{p+q} = K^p ⊗ K^q the product is the Kronecker product of values
and ω^n is μ^{⊗n}.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from secatbounds.config import Caps, resolve_caps
from secatbounds.errors import InputError, VerificationError
from secatbounds.groups.finite_group import CosetSpace, FiniteGroup, Subgroup
from secatbounds.modules.gmodule import GModule, GMap
from secatbounds.modules.standard import (
    AugmentationIdeal,
    ideal_I,
    permutation_module,
    restrict,
    tensor_power,
    tensor_product,
    trivial_module,
)
from secatbounds.cohomology.complex import ExtComplex, push_values
from secatbounds.cohomology.groups import Cocycle
from secatbounds.cohomology.resolution import Resolution

logger = logging.getLogger(__name__)


@dataclass
class RelativeClass:
    """ω for H ≤ G together with the modules it lives in."""
    group: FiniteGroup
    subgroup: Subgroup
    cosets: CosetSpace
    permutation: GModule
    ideal: AugmentationIdeal
    cocycle: Cocycle
    resolution: Resolution
    caps: Caps
    checks: dict[str, bool] = field(default_factory=dict)
    _powers: dict[int, GModule] = field(default_factory=dict, repr=False)

    @property
    def degenerate(self) -> bool:
        return self.subgroup.is_whole

    @property
    def module(self) -> GModule:
        return self.ideal.module

    def ideal_power(self, n: int) -> GModule:
        """I^{⊗n}, built once per n."""
        mod = self._powers.get(n)
        if mod is None:
            mod = self.module if n == 1 else tensor_power(self.module, n, self.caps)
            self._powers[n] = mod
        return mod

    def power(self, n: int) -> Cocycle:
        return omega_power(self, n)

    def to_dict(self) -> dict:
        return {
            "index": self.cosets.index,
            "degenerate": self.degenerate,
            "values": list(self.cocycle.values),
            "checks": dict(sorted(self.checks.items())),
        }


def bs_values(res: Resolution, cosets: CosetSpace, ideal: AugmentationIdeal) -> list[int]:
    rank = ideal.module.rank
    values = [0] * (res.k_rank * rank)
    for j, g in enumerate(res.k_basis):
        idx = ideal.index_of(int(cosets.coset_of[g]))
        if idx is not None:
            values[j * rank + idx] = 1
    return values


def bs_class(G: FiniteGroup, H: Subgroup, resolution: Optional[Resolution] = None,
             caps: Optional[Caps] = None, verify: bool = True) -> RelativeClass:
    caps = resolve_caps(caps)
    if H.parent is not G:
        raise InputError("subgroup belongs to a different group", field="subgroup")
    res = resolution or Resolution(G, 2, caps)
    cosets = CosetSpace(G, H)
    perm = permutation_module(G, H, cosets)
    ideal = ideal_I(G, H, cosets, perm)
    cocycle = Cocycle(1, ideal.module, tuple(bs_values(res, cosets, ideal)))
    bs = RelativeClass(G, H, cosets, perm, ideal, cocycle, res, caps)
    bs._powers[1] = ideal.module
    if H.is_whole:
        logger.debug("ω is degenerate for H = G")
    if verify:
        complex = ExtComplex(res, None, ideal.module, caps)
        bs.checks["cocycle"] = complex.is_cocycle(1, cocycle.values)
        if not bs.checks["cocycle"]:
            raise VerificationError("ω is not a cocycle", {"group": G.name})
        restricted = restrict_cocycle(cocycle, res, H, caps=caps)
        sub_complex = ExtComplex(restricted[1], None, restricted[0].coefficients, caps)
        bs.checks["restriction_vanishes"] = sub_complex.is_coboundary(1, restricted[0].values)
        if not bs.checks["restriction_vanishes"]:
            raise VerificationError("ω does not restrict to zero on H", {"group": G.name})
    return bs


def cup(a: Cocycle, b: Cocycle, module: Optional[GModule] = None,
        complex: Optional[ExtComplex] = None) -> Cocycle:
    """a ∪ b with coefficients A ⊗ B (or ``module`` when it is that tensor product)."""
    if not (a.is_cocycle and b.is_cocycle):
        raise InputError("cup product needs cocycles", field="cocycle")
    if a.source is not None or b.source is not None:
        raise InputError("cup product is defined for cohomology cochains", field="cocycle")
    ra, rb = a.rank, b.rank
    target = module or tensor_product(a.coefficients, b.coefficients)
    if target.rank != ra * rb:
        raise ValueError("target module has the wrong rank")
    na = len(a.values) // ra if ra else 0
    nb = len(b.values) // rb if rb else 0
    if not ra or not rb:
        k = a.coefficients.group.order - 1
        values: list[int] = [0] * (k ** (a.degree + b.degree) * ra * rb)
    else:
        values = [0] * (na * nb * ra * rb)
        for z1 in range(na):
            blk_a = a.values[z1 * ra:(z1 + 1) * ra]
            if not any(blk_a):
                continue
            for z2 in range(nb):
                blk_b = b.values[z2 * rb:(z2 + 1) * rb]
                if not any(blk_b):
                    continue
                base = (z1 * nb + z2) * ra * rb
                for alpha, x in enumerate(blk_a):
                    if x:
                        off = base + alpha * rb
                        for beta, y in enumerate(blk_b):
                            if y:
                                values[off + beta] = x * y
    result = Cocycle(a.degree + b.degree, target, tuple(values))
    if complex is not None and not complex.is_cocycle(result.degree, result.values):
        raise VerificationError("cup product is not a cocycle", {"degrees": [a.degree, b.degree]})
    return result


def omega_power(bs: RelativeClass, n: int) -> Cocycle:
    """The explicit representative (ε ⊗ id) then μ^{⊗n} of ω^n."""
    if n < 0:
        raise InputError("power must be non-negative", field="degree")
    if n == 0:
        return Cocycle(0, trivial_module(bs.group), (1,))
    module = bs.ideal_power(n)
    k = bs.resolution.k_rank
    q = bs.module.rank
    mu = [bs.ideal.index_of(int(bs.cosets.coset_of[g])) for g in bs.resolution.k_basis]
    values = [0] * (k ** n * q ** n)
    if q:
        resolve_caps(bs.caps).check("max_rank", len(values))
        stack = [(0, 0)]  # (z prefix, I^n prefix)
        for _ in range(n):
            nxt = []
            for z, y in stack:
                for j in range(k):
                    if mu[j] is not None:
                        nxt.append((z * k + j, y * q + mu[j]))
            stack = nxt
        rank = q ** n
        for z, y in stack:
            values[z * rank + y] = 1
    return Cocycle(n, module, tuple(values))


@dataclass
class HeightResult:
    value: int
    at_least: bool
    powers: list[tuple[int, bool]]  # (n, ω^n nonzero)

    def to_dict(self) -> dict:
        text = f"≥ {self.value}" if self.at_least else str(self.value)
        return {
            "height": self.value,
            "at_least": self.at_least,
            "text": text,
            "powers": [{"n": n, "nonzero": nz} for n, nz in self.powers],
        }


def height(G: FiniteGroup, H: Subgroup, max_n: int, caps: Optional[Caps] = None,
           resolution: Optional[Resolution] = None) -> HeightResult:
    """Largest n ≤ max_n with ω^n ≠ 0, deciding each power by integer solvability."""
    caps = resolve_caps(caps)
    if max_n < 0:
        raise InputError("max_n must be non-negative", field="degree")
    caps.check("max_degree", max_n)
    res = resolution or Resolution(G, max_n + 1, caps)
    bs = bs_class(G, H, res, caps)
    powers: list[tuple[int, bool]] = []
    last = 0
    for n in range(1, max_n + 1):
        omega_n = omega_power(bs, n)
        complex = ExtComplex(res, None, omega_n.coefficients, caps)
        nonzero = not complex.is_coboundary(n, omega_n.values)
        powers.append((n, nonzero))
        logger.debug("ω^%d %s for %s", n, "nonzero" if nonzero else "zero", G.name)
        if not nonzero:
            break
        last = n
    at_least = last == max_n and max_n > 0
    return HeightResult(last, at_least, powers)


def push_forward(phi: GMap, cocycle: Cocycle) -> Cocycle:
    """φ_*(c): apply φ to every value."""
    if phi.source.rank != cocycle.rank:
        raise InputError("map source does not match the coefficients", field="map")
    m = cocycle.source.rank if cocycle.source is not None else 1
    tensor_rank = len(cocycle.values) // (cocycle.rank * m) if cocycle.rank else 0
    if not cocycle.rank:
        k = phi.source.group.order - 1
        tensor_rank = k ** cocycle.degree
    values = push_values(cocycle.values, phi.rows, tensor_rank, m, cocycle.rank, phi.target.rank)
    return Cocycle(cocycle.degree, phi.target, tuple(values), cocycle.is_cocycle, cocycle.source)


def restrict_cocycle(cocycle: Cocycle, resolution: Resolution, H: Subgroup,
                     sub_resolution: Optional[Resolution] = None,
                     caps: Optional[Caps] = None) -> tuple[Cocycle, Resolution]:
    """ι*(c) on the resolution of H; returns it with that resolution.

    K_H sits inside K_G (h - 1 ↦ h - 1), so the restricted values are the
    values on tuples of elements of H.
    """
    if cocycle.source is not None:
        raise InputError("restriction is defined for cohomology cochains", field="cocycle")
    sub = H.group
    res_H = sub_resolution or Resolution(sub, max(cocycle.degree + 1, 1), caps)
    A_H = restrict(cocycle.coefficients, H)
    a = cocycle.rank
    n = cocycle.degree
    emb = H.embedding
    parent_idx = [int(resolution.k_index[int(emb[h])]) for h in res_H.k_basis]
    kH = res_H.k_rank
    kG = resolution.k_rank
    values = [0] * (kH ** n * a)
    for zH in range(kH ** n):
        digits = res_H.k_tuple(zH, n)
        zG = 0
        for d in digits:
            zG = zG * kG + parent_idx[d]
        values[zH * a:(zH + 1) * a] = cocycle.values[zG * a:(zG + 1) * a]
    return Cocycle(n, A_H, tuple(values), cocycle.is_cocycle), res_H
