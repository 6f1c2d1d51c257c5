# secatbounds/spectral/kappa.py
from __future__ import annotations

from dataclasses import dataclass, field

from secatbounds.errors import InputError
from secatbounds.groups.constructions import conjugate_intersection
from secatbounds.groups.finite_group import CosetSpace, FiniteGroup, Subgroup


@dataclass(frozen=True)
class KappaEntry:
    representative: int  # minimal element of the double coset HxH
    intersection: Subgroup  # H ∩ xHx^{-1}
    abelian: bool
    order_profile: tuple[int, ...]  # sorted element orders, an isomorphism-invariant fingerprint

    def to_dict(self, G: FiniteGroup) -> dict:
        return {
            "x": G.label(self.representative),
            "order": self.intersection.order,
            "abelian": self.abelian,
            "order_profile": list(self.order_profile),
        }


@dataclass
class KappaReport:
    """The family H ∩ xHx^{-1}, x ∉ H, one entry per double coset HxH.

    Nontrivial finite groups have infinite cd, so the report carries only
    the family; ``kappa`` is 0 exactly when every member is trivial.
    """
    group: FiniteGroup
    subgroup: Subgroup
    entries: list[KappaEntry] = field(default_factory=list)

    @property
    def malnormal(self) -> bool:
        return all(e.intersection.is_trivial for e in self.entries)

    @property
    def kappa(self):
        return 0 if self.malnormal else None

    @property
    def normal(self) -> bool:
        return self.subgroup.is_normal()

    def profile(self) -> list[tuple[int, tuple[int, ...]]]:
        return sorted((e.intersection.order, e.order_profile) for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "malnormal": self.malnormal,
            "normal": self.normal,
            "kappa": self.kappa,
            "kappa_text": "0" if self.malnormal else "infinite (nontrivial finite intersections)",
            "family": [e.to_dict(self.group) for e in self.entries],
        }


def kappa_finite(G: FiniteGroup, H: Subgroup) -> KappaReport:
    """Enumerate H ∩ xHx^{-1} for x outside H, up to x ~ h x h'."""
    if H.parent is not G:
        raise InputError("subgroup belongs to a different group", field="subgroup")
    if H.is_whole:
        raise InputError("κ is undefined for H = G (no elements outside H)", field="subgroup")
    cosets = CosetSpace(G, H)
    seen: set[int] = set()
    report = KappaReport(G, H)
    for c in range(cosets.index):
        if c == cosets.base or c in seen:
            continue
        # the H-orbit of the coset xH is the double coset HxH
        orbit = {cosets.act(h, c) for h in H.elements}
        seen |= orbit
        x = min(g for d in orbit for g in cosets.cosets[d])
        inter = conjugate_intersection(G, H, x)
        sub = inter.group
        profile = tuple(sorted(sub.element_order(g) for g in sub.elements))
        report.entries.append(KappaEntry(x, inter, sub.is_abelian, profile))
    return report
