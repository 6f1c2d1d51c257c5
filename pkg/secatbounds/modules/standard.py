# secatbounds/modules/standard.py
"""The standard modules: ZG, Z[G/H], their augmentation ideals, tensor and Hom modules.

Basis conventions (fixed; golden tests depend on them):
  ZG        elements in index order
  K         g - 1 for g != e, in index order
  Z[X]      points of the G-set X in index order (cosets ordered by minimal element)
  I         x - base for x != base, in point order
  M ⊗ N     lexicographic in (m, n); action is the Kronecker product
  Hom(M,N)  index i·rank(M) + j is the map m_j ↦ n_i
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from secatbounds.config import Caps, resolve_caps
from secatbounds.groups.finite_group import CosetSpace, FiniteGroup, GroupHom, Subgroup
from secatbounds.linalg.echelon import column_echelon
from secatbounds.modules.gmodule import GModule, GMap


def trivial_module(G: FiniteGroup, rank: int = 1, name: str = "Z") -> GModule:
    eye = np.eye(rank, dtype=np.int64)
    return GModule(G, rank, np.broadcast_to(eye, (G.order, rank, rank)).copy(), name=name)


def set_permutation_module(G: FiniteGroup, action: np.ndarray, labels: Optional[Sequence[str]] = None,
                           name: str = "Z[X]") -> GModule:
    """Z[X] for a G-set X given by ``action[g, x] = g·x``."""
    action = np.asarray(action, dtype=np.int64)
    npts = action.shape[1]
    mats = np.zeros((G.order, npts, npts), dtype=np.int64)
    cols = np.arange(npts)
    for g in G.elements:
        mats[g, action[g], cols] = 1
    return GModule(G, npts, mats, labels=labels, name=name)


@dataclass
class AugmentationIdeal:
    """Kernel of the coefficient sum on Z[X], with basis x - base."""
    module: GModule
    inclusion: GMap
    base: int
    points: tuple[int, ...]  # point of X behind each basis vector

    def index_of(self, x: int) -> Optional[int]:
        """Basis index of x - base (None for the base point itself)."""
        return self._index.get(x)

    def __post_init__(self):
        self._index = {x: i for i, x in enumerate(self.points)}


def augmentation_submodule(ambient: GModule, action: np.ndarray, base: int, name: str = "I") -> AugmentationIdeal:
    G = ambient.group
    npts = action.shape[1]
    points = tuple(x for x in range(npts) if x != base)
    idx = {x: i for i, x in enumerate(points)}
    r = len(points)
    mats = np.zeros((G.order, r, r), dtype=np.int64)
    for g in G.elements:
        gb = int(action[g, base])
        for j, x in enumerate(points):
            # g·(x - b) = (gx - b) - (gb - b)
            gx = int(action[g, x])
            if gx != base:
                mats[g, idx[gx], j] += 1
            if gb != base:
                mats[g, idx[gb], j] -= 1
    labels = [f"{ambient.labels[x]}-{ambient.labels[base]}" for x in points]
    module = GModule(G, r, mats, labels=labels, name=name)
    incl = np.zeros((npts, r), dtype=np.int64)
    for j, x in enumerate(points):
        incl[x, j] = 1
        incl[base, j] = -1
    return AugmentationIdeal(module, GMap(module, ambient, incl, name="i"), base, points)


def regular_action(G: FiniteGroup) -> np.ndarray:
    return np.stack([G.left_row(g) for g in G.elements])


def group_ring(G: FiniteGroup) -> GModule:
    return set_permutation_module(G, regular_action(G), labels=[G.label(g) for g in G.elements], name="ZG")


def augmentation_eps(G: FiniteGroup, ring: Optional[GModule] = None) -> GMap:
    ring = ring or group_ring(G)
    return GMap(ring, trivial_module(G), np.ones((1, G.order), dtype=np.int64), name="eps")


def augmentation_ideal_K(G: FiniteGroup, ring: Optional[GModule] = None) -> AugmentationIdeal:
    ring = ring or group_ring(G)
    return augmentation_submodule(ring, regular_action(G), G.identity, name="K")


def permutation_module(G: FiniteGroup, H: Subgroup, cosets: Optional[CosetSpace] = None) -> GModule:
    cosets = cosets or CosetSpace(G, H)
    labels = [cosets.label(c) for c in range(cosets.index)]
    return set_permutation_module(G, cosets.action, labels=labels, name="Z[G/H]")


def sigma(G: FiniteGroup, H: Subgroup, module: Optional[GModule] = None) -> GMap:
    module = module or permutation_module(G, H)
    return GMap(module, trivial_module(G), np.ones((1, module.rank), dtype=np.int64), name="sigma")


def ideal_I(G: FiniteGroup, H: Subgroup, cosets: Optional[CosetSpace] = None,
            module: Optional[GModule] = None) -> AugmentationIdeal:
    cosets = cosets or CosetSpace(G, H)
    module = module or permutation_module(G, H, cosets)
    return augmentation_submodule(module, cosets.action, cosets.base, name="I")


def tensor_product(M: GModule, N: GModule, caps: Optional[Caps] = None, name: Optional[str] = None) -> GModule:
    if M.group is not N.group:
        raise ValueError("tensor factors live over different groups")
    resolve_caps(caps).check("max_rank", M.rank * N.rank)
    labels = [f"{a}⊗{b}" for a in M.labels for b in N.labels]
    return GModule(
        M.group,
        M.rank * N.rank,
        action_fn=lambda g: np.kron(M.matrix(g), N.matrix(g)),
        labels=labels,
        name=name or f"{M.name}⊗{N.name}",
    )


def tensor_power(M: GModule, p: int, caps: Optional[Caps] = None) -> GModule:
    if p < 0:
        raise ValueError("tensor power must be non-negative")
    resolve_caps(caps).check("max_rank", M.rank ** p)
    if p == 0:
        return trivial_module(M.group)
    out = M
    for _ in range(p - 1):
        out = tensor_product(out, M, caps)
    if p > 1:
        out.name = f"{M.name}^{p}"
    return out


def hom_module(M: GModule, N: GModule, caps: Optional[Caps] = None) -> GModule:
    """Hom_Z(M, N) with (g·f)(m) = g f(g^{-1} m)."""
    if M.group is not N.group:
        raise ValueError("Hom arguments live over different groups")
    resolve_caps(caps).check("max_rank", M.rank * N.rank)
    G = M.group
    labels = [f"{m}->{n}" for n in N.labels for m in M.labels]
    return GModule(
        G,
        M.rank * N.rank,
        action_fn=lambda g: np.kron(N.matrix(g), M.matrix(G.inv(g)).T),
        labels=labels,
        name=f"Hom({M.name},{N.name})",
    )


def restrict(M: GModule, H: Subgroup) -> GModule:
    """res^G_H M over the standalone group ``H.group``."""
    if H.parent is not M.group:
        raise ValueError("subgroup of a different group")
    emb = H.embedding
    return GModule(H.group, M.rank, action_fn=lambda i: M.matrix(int(emb[i])), labels=M.labels,
                   name=f"res({M.name})")


def pullback_module(A: GModule, hom: GroupHom) -> GModule:
    """π*A: the target's module viewed over the source through ``hom``."""
    if hom.target is not A.group:
        raise ValueError("module is not over the homomorphism's target")
    return GModule(hom.source, A.rank, action_fn=lambda g: A.matrix(hom(g)), labels=A.labels,
                   name=f"pullback({A.name})")


def invariants(M: GModule) -> list[list[int]]:
    """A Z-basis of M^G: kernel of the stacked ρ(s) - 1 over generators s."""
    G = M.group
    if M.rank == 0:
        return []
    if not G.generators:
        return [[1 if i == j else 0 for i in range(M.rank)] for j in range(M.rank)]
    eye = np.eye(M.rank, dtype=np.int64)
    stacked = np.vstack([M.matrix(s) - eye for s in G.generators])
    return column_echelon(stacked).kernel_basis()


def equivariant_maps(M: GModule, N: GModule, caps: Optional[Caps] = None) -> list[GMap]:
    """A Z-basis of Hom_G(M, N) = Hom_Z(M, N)^G."""
    hom = hom_module(M, N, caps)
    basis = invariants(hom)
    return [GMap(M, N, np.array(v, dtype=np.int64).reshape(N.rank, M.rank), name=f"phi{i}")
            for i, v in enumerate(basis)]
