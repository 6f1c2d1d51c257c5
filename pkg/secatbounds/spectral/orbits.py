# secatbounds/spectral/orbits.py
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from secatbounds.config import Caps, resolve_caps
from secatbounds.errors import VerificationError
from secatbounds.groups.finite_group import CosetSpace, FiniteGroup, Subgroup


@dataclass(frozen=True)
class Orbit:
    representative: tuple[int, ...]  # lexicographically minimal coset tuple
    size: int
    isotropy: Subgroup  # N_C, a subgroup of G inside H
    in_prime: bool  # every coordinate off the base coset
    basis: tuple[int, ...]  # indices of the I^s basis vectors in this orbit (empty unless in_prime)

    def to_dict(self, cosets: CosetSpace) -> dict:
        return {
            "representative": [cosets.label(c) for c in self.representative],
            "size": self.size,
            "isotropy_order": self.isotropy.order,
            "in_prime": self.in_prime,
        }


@dataclass
class OrbitDecomposition:
    group: FiniteGroup
    subgroup: Subgroup
    power: int
    cosets: CosetSpace
    orbits: list[Orbit]

    @property
    def prime_orbits(self) -> list[Orbit]:
        return [o for o in self.orbits if o.in_prime]

    def to_dict(self) -> dict:
        return {
            "power": self.power,
            "orbits": [o.to_dict(self.cosets) for o in self.orbits],
            "prime_count": len(self.prime_orbits),
        }


def orbit_decompose(G: FiniteGroup, H: Subgroup, s: int, caps: Optional[Caps] = None,
                    cosets: Optional[CosetSpace] = None) -> OrbitDecomposition:
    """Orbits of the diagonal H-action on (G/H)^s, with isotropy and the J_C basis blocks.

    Tuples are indexed mixed-radix in the coset order; the I^s basis vector
    (c_1 - H) ⊗ ... ⊗ (c_s - H) belongs to the orbit of (c_1, ..., c_s).
    """
    caps = resolve_caps(caps)
    cosets = cosets or CosetSpace(G, H)
    k = cosets.index
    caps.check("max_order", k ** s)
    base = cosets.base
    off_base = [c for c in range(k) if c != base]
    ideal_index = {c: i for i, c in enumerate(off_base)}
    action = cosets.action
    h_elems = list(H.elements)
    seen = np.zeros(k ** s, dtype=bool)
    orbits: list[Orbit] = []

    def encode(t) -> int:
        z = 0
        for c in t:
            z = z * k + c
        return z

    for rep in itertools.product(range(k), repeat=s):
        if seen[encode(rep)]:
            continue
        members = set()
        stabilizer = []
        for h in h_elems:
            image = tuple(int(action[h, c]) for c in rep)
            members.add(image)
            if image == rep:
                stabilizer.append(h)
        for t in members:
            seen[encode(t)] = True
        in_prime = all(c != base for c in rep)
        basis: tuple[int, ...] = ()
        if in_prime:
            q = k - 1
            idx = []
            for t in members:
                z = 0
                for c in t:
                    z = z * q + ideal_index[c]
                idx.append(z)
            basis = tuple(sorted(idx))
        iso = Subgroup(G, tuple(sorted(stabilizer)))
        if len(members) * iso.order != H.order:
            raise VerificationError("orbit-stabilizer count fails", {"representative": list(rep)})
        orbits.append(Orbit(tuple(rep), len(members), iso, in_prime, basis))
    return OrbitDecomposition(G, H, s, cosets, orbits)
