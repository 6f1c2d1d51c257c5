# secatbounds/groups/constructions.py
"""Subgroup constructions: diagonals, centralizers, conjugate intersections, pullbacks."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import reduce
from typing import Optional

import numpy as np

from secatbounds.config import Caps, resolve_caps
from secatbounds.errors import InvalidGroupError, NotSurjectiveError
from secatbounds.groups.finite_group import (
    DirectPower,
    FiniteGroup,
    GroupHom,
    Subgroup,
    direct_power,
)

logger = logging.getLogger(__name__)


def diagonal_subgroup(G: FiniteGroup, r: int, caps: Optional[Caps] = None) -> Subgroup:
    """Δ_r = {(g, ..., g)} inside direct_power(G, r)."""
    P = direct_power(G, r, caps)
    if r == 1:
        return Subgroup.whole(G)
    return Subgroup(P, tuple(sorted(P.encode((g,) * r) for g in G.elements)))


def centralizer(G: FiniteGroup, g: int) -> Subgroup:
    commuting = np.nonzero(G.left_row(g) == G.right_col(g))[0]
    return Subgroup(G, tuple(int(h) for h in commuting))


def center(G: FiniteGroup) -> Subgroup:
    members = reduce(lambda acc, g: acc & set(centralizer(G, g).elements), G.generators, set(G.elements))
    return Subgroup(G, tuple(sorted(members)))


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    members = [g for g in G.elements if all(G.conj(g, h) in H for h in H.generators)]
    return Subgroup(G, tuple(members))


def conjugate_intersection(G: FiniteGroup, H: Subgroup, x: int) -> Subgroup:
    """H ∩ xHx^{-1}: the h ∈ H with x^{-1}hx ∈ H."""
    x_inv = G.inv(x)
    return Subgroup(G, tuple(h for h in H.elements if G.conj(x_inv, h) in H))


def is_malnormal(G: FiniteGroup, H: Subgroup) -> bool:
    return all(conjugate_intersection(G, H, x).is_trivial for x in G.elements if x not in H)


@dataclass
class DiagonalFamily:
    """Δ ∩ xΔx^{-1} for x ∉ Δ, computed directly and through centralizers."""
    power: FiniteGroup
    diagonal: Subgroup
    entries: list[tuple[int, Subgroup]] = field(default_factory=list)
    mismatches: list[dict] = field(default_factory=list)

    @property
    def identity_holds(self) -> bool:
        return not self.mismatches


def diagonal_conjugate_family(G: FiniteGroup, r: int, caps: Optional[Caps] = None) -> DiagonalFamily:
    """(h, ..., h) lies in xΔx^{-1} exactly when h commutes with every x_i x_j^{-1}."""
    P = direct_power(G, r, caps)
    delta = diagonal_subgroup(G, r, caps)
    family = DiagonalFamily(power=P, diagonal=delta)
    if r == 1:
        return family
    centralizers = [set(centralizer(G, g).elements) for g in G.elements]
    whole = set(G.elements)
    for x in P.elements:
        if x in delta:
            continue
        direct = conjugate_intersection(P, delta, x)
        parts = P.decode(x)
        common = set(whole)
        for i in range(r):
            for j in range(r):
                if i != j:
                    common &= centralizers[G.mul(parts[i], G.inv(parts[j]))]
        via_centralizers = tuple(sorted(P.encode((h,) * r) for h in common))
        if direct.elements != via_centralizers:
            family.mismatches.append({
                "x": P.label(x),
                "direct": [P.label(e) for e in direct.elements],
                "centralizers": [P.label(e) for e in via_centralizers],
            })
        family.entries.append((x, direct))
    logger.debug("diagonal family for %s, r=%d: %d entries", G.name, r, len(family.entries))
    return family


@dataclass
class NormalizerReport:
    normalizer: Subgroup
    predicted: Subgroup
    self_normalizing: bool
    center_trivial: bool

    @property
    def consistent(self) -> bool:
        return self.normalizer.elements == self.predicted.elements and \
            self.self_normalizing == self.center_trivial


def diagonal_normalizer(G: FiniteGroup, r: int, caps: Optional[Caps] = None) -> NormalizerReport:
    """N(Δ_r) by brute force next to {x : x_j x_i^{-1} ∈ Z(G) for all i, j}."""
    P = direct_power(G, r, caps)
    delta = diagonal_subgroup(G, r, caps)
    brute = normalizer(P, delta)
    Z = center(G)
    predicted = []
    for x in P.elements:
        parts = P.decode(x) if isinstance(P, DirectPower) else (x,)
        if all(G.mul(parts[j], G.inv(parts[i])) in Z for i in range(len(parts)) for j in range(len(parts))):
            predicted.append(x)
    return NormalizerReport(
        normalizer=brute,
        predicted=Subgroup(P, tuple(predicted)),
        self_normalizing=brute.order == delta.order,
        center_trivial=Z.is_trivial,
    )


@dataclass
class PullbackGroup:
    """G ×_Q G with its diagonal and the semidirect-product model."""
    rho: GroupHom
    product: FiniteGroup  # G × G
    subgroup: Subgroup  # G ×_Q G inside G × G
    kernel: Subgroup
    semidirect: FiniteGroup  # (ker ρ) ⋊ G, element (k, g) at index pos(k)·|G| + g
    phi: GroupHom  # pullback-as-group → semidirect, (g, h) ↦ (gh^{-1}, h)
    checks: dict[str, bool]

    @property
    def group(self) -> FiniteGroup:
        return self.subgroup.group

    @property
    def diagonal(self) -> Subgroup:
        """Δ_G as a subgroup of ``group``."""
        P = self.product
        pos = {int(e): i for i, e in enumerate(self.subgroup.elements)}
        n = self.rho.source.order
        return Subgroup(self.group, tuple(sorted(pos[P.encode((g, g))] for g in range(n))))


def semidirect_with_conjugation(G: FiniteGroup, N: Subgroup) -> FiniteGroup:
    """N ⋊ G with (k1, g1)(k2, g2) = (k1 · g1 k2 g1^{-1}, g1 g2)."""
    n = G.order
    kpos = {k: i for i, k in enumerate(N.elements)}
    size = N.order * n
    table = np.empty((size, size), dtype=np.int64)
    for i1, k1 in enumerate(N.elements):
        for g1 in G.elements:
            row = table[i1 * n + g1]
            for i2, k2 in enumerate(N.elements):
                k = kpos[G.mul(k1, G.conj(g1, k2))]
                row[i2 * n: (i2 + 1) * n] = k * n + G.left_row(g1)
    inverses = np.empty(size, dtype=np.int64)
    for i, k in enumerate(N.elements):
        for g in G.elements:
            gi = G.inv(g)
            # (k, g)^{-1} = (g^{-1} k^{-1} g, g^{-1})
            inverses[i * n + g] = kpos[G.conj(gi, G.inv(k))] * n + gi
    identity = kpos[G.identity] * n + G.identity
    labels = [f"({G.label(k)};{G.label(g)})" for k in N.elements for g in G.elements]
    return FiniteGroup(table, identity, inverses, name=f"ker x| {G.name}", labels=labels)


def pullback_group(rho: GroupHom, caps: Optional[Caps] = None) -> PullbackGroup:
    if not rho.is_surjective:
        raise NotSurjectiveError("pullback needs a surjective homomorphism", field="rho")
    G = rho.source
    P = direct_power(G, 2, caps)
    members = tuple(sorted(P.encode((x, y)) for x in G.elements for y in G.elements if rho(x) == rho(y)))
    sub = Subgroup(P, members)
    K = rho.kernel()

    # ((ker ρ) × 1) · Δ_G as an independent set computation
    product_set = {P.mul(P.encode((k, G.identity)), P.encode((g, g))) for k in K.elements for g in G.elements}
    product_ok = product_set == set(members)

    semi = semidirect_with_conjugation(G, K)
    kpos = {k: i for i, k in enumerate(K.elements)}
    n = G.order
    images = []
    for e in members:
        g, h = P.decode(e)
        images.append(kpos[G.mul(g, G.inv(h))] * n + h)
    phi = GroupHom(sub.group, semi, images, name="phi")
    hom_ok = True
    try:
        phi.validate(caps)
    except InvalidGroupError as exc:
        logger.error("phi failed homomorphism check: %s", exc)
        hom_ok = False
    checks = {
        "product_set": product_ok,
        "phi_homomorphism": hom_ok,
        "phi_bijective": phi.is_injective and phi.is_surjective,
        "order": len(members) == n * K.order,
    }
    return PullbackGroup(rho=rho, product=P, subgroup=sub, kernel=K, semidirect=semi, phi=phi, checks=checks)
