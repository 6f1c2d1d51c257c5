# secatbounds/groups/catalog.py
"""Named small groups and subgroup enumeration for the verification grid."""
from __future__ import annotations

from functools import lru_cache
from typing import Optional

from secatbounds.config import Caps
from secatbounds.groups.finite_group import (
    FiniteGroup,
    Subgroup,
    _closure,
    direct_product,
    group_from_permutations,
    group_from_table,
)


def trivial_group() -> FiniteGroup:
    return group_from_permutations(1, [], name="1")


def cyclic(n: int) -> FiniteGroup:
    if n == 1:
        return trivial_group()
    return group_from_permutations(n, [[list(range(1, n + 1))]], name=f"Z{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    if n < 3:
        raise ValueError("dihedral(n) needs n >= 3; use klein_four or cyclic")
    rotation = [list(range(1, n + 1))]
    reflection = [[i, n + 1 - i] for i in range(1, n // 2 + 1) if i != n + 1 - i]
    return group_from_permutations(n, [rotation, reflection], name=f"D{n}")


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return trivial_group()
    gens = [[[1, 2]]]
    if n > 2:
        gens.append([list(range(1, n + 1))])
    return group_from_permutations(n, gens, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        return trivial_group()
    return group_from_permutations(n, [[[1, 2, k]] for k in range(3, n + 1)], name=f"A{n}")


def quaternion() -> FiniteGroup:
    i = [[1, 2, 3, 4], [5, 6, 7, 8]]
    j = [[1, 5, 3, 7], [2, 8, 4, 6]]
    return group_from_permutations(8, [i, j], name="Q8")


def klein_four() -> FiniteGroup:
    return group_from_permutations(4, [[[1, 2], [3, 4]], [[1, 3], [2, 4]]], name="K4")


def _group_from_rule(elements: list[tuple], mul, name: str, labels: list[str]) -> FiniteGroup:
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return group_from_table(table, name=name, labels=labels)


def metacyclic(m: int, n: int, r: int, name: Optional[str] = None) -> FiniteGroup:
    """Z/m ⋊ Z/n with b a b^{-1} = a^r; needs r^n ≡ 1 mod m."""
    if pow(r, n, m) != 1 % m:
        raise ValueError(f"{r}^{n} is not 1 mod {m}")
    elements = [(i, j) for j in range(n) for i in range(m)]

    def mul(x, y):
        return (x[0] + pow(r, x[1], m) * y[0]) % m, (x[1] + y[1]) % n

    labels = [f"a^{i}b^{j}" for i, j in elements]
    return _group_from_rule(elements, mul, name or f"Z{m}:Z{n}", labels)


def dicyclic(n: int) -> FiniteGroup:
    """Order 4n: a^{2n} = 1, x^2 = a^n, x a x^{-1} = a^{-1}. Dic2 is Q8."""
    m = 2 * n
    elements = [(i, j) for j in range(2) for i in range(m)]

    def mul(x, y):
        (i1, j1), (i2, j2) = x, y
        if not j1:
            return (i1 + i2) % m, j2
        if not j2:
            return (i1 - i2) % m, 1
        return (i1 - i2 + n) % m, 0

    labels = [f"a^{i}x^{j}" for i, j in elements]
    return _group_from_rule(elements, mul, "Q16" if n == 4 else f"Dic{n}", labels)


def klein_by_four() -> FiniteGroup:
    """Z/2² ⋊ Z/4, the generator of Z/4 swapping the two Z/2 factors."""
    elements = [(u, v, k) for k in range(4) for u in range(2) for v in range(2)]

    def mul(x, y):
        u, v = (y[1], y[0]) if x[2] % 2 else (y[0], y[1])
        return (x[0] + u) % 2, (x[1] + v) % 2, (x[2] + y[2]) % 4

    labels = [f"({u}{v})t^{k}" for u, v, k in elements]
    return _group_from_rule(elements, mul, "Z2^2:Z4", labels)


def pauli() -> FiniteGroup:
    """i^c X^a Z^b with Z X = -X Z."""
    elements = [(c, a, b) for c in range(4) for a in range(2) for b in range(2)]

    def mul(x, y):
        return (x[0] + y[0] + 2 * x[2] * y[1]) % 4, (x[1] + y[1]) % 2, (x[2] + y[2]) % 2

    labels = [f"i^{c}X^{a}Z^{b}" for c, a, b in elements]
    return _group_from_rule(elements, mul, "Pauli", labels)


_SPECIAL = {
    "Q8": quaternion,
    "K4": klein_four,
    "Q16": lambda: dicyclic(4),
    "SD16": lambda: metacyclic(8, 2, 3, name="SD16"),
    "M16": lambda: metacyclic(8, 2, 5, name="M16"),
    "Z4:Z4": lambda: metacyclic(4, 4, 3),
    "Z2^2:Z4": klein_by_four,
    "Pauli": pauli,
}


def abelian(*orders: int, caps: Optional[Caps] = None) -> FiniteGroup:
    """Z/n_1 × ... × Z/n_k."""
    if len(orders) == 1:
        return cyclic(orders[0])
    return direct_product(*(cyclic(n) for n in orders), name="x".join(f"Z{n}" for n in orders), caps=caps)


def by_name(name: str) -> FiniteGroup:
    """Catalog lookup: Z<n>, D<n>, S<n>, A<n>, Dic<n>, Q8, Q16, SD16, M16, K4, Pauli,
    Z4:Z4, Z2^2:Z4, and products of these such as Z2xZ4 or Q8xZ2.
    """
    key = name.strip()
    if key in ("1", "trivial"):
        return trivial_group()
    if key in _SPECIAL:
        return _SPECIAL[key]()
    if "x" in key:
        parts = key.split("x")
        if all(p.startswith("Z") and p[1:].isdigit() for p in parts):
            return abelian(*(int(p[1:]) for p in parts))
        return direct_product(*(by_name(p) for p in parts), name=key)
    if key.startswith("Dic") and key[3:].isdigit() and int(key[3:]) >= 2:
        return dicyclic(int(key[3:]))
    head, tail = key[0], key[1:]
    if tail.isdigit():
        n = int(tail)
        builders = {"Z": cyclic, "D": dihedral, "S": symmetric, "A": alternating}
        if head in builders:
            return builders[head](n)
    raise KeyError(f"unknown group name: {name}")


# every group of order ≤ 16, one per isomorphism class
SMALL_GROUP_NAMES = (
    "1", "Z2", "Z3", "Z4", "K4", "Z5", "Z6", "S3", "Z7",
    "Z8", "Z2xZ4", "Z2xZ2xZ2", "D4", "Q8",
    "Z9", "Z3xZ3", "D5", "Z10", "Z11", "Z12", "Z2xZ6", "A4", "D6", "Dic3",
    "Z13", "Z14", "D7", "Z15",
    "Z16", "Z2xZ8", "Z4xZ4", "Z2xZ2xZ4", "Z2xZ2xZ2xZ2", "D8", "Q16", "SD16", "M16",
    "D4xZ2", "Q8xZ2", "Z4:Z4", "Z2^2:Z4", "Pauli",
)


def small_groups(max_order: int) -> list[FiniteGroup]:
    out = []
    for name in SMALL_GROUP_NAMES:
        G = by_name(name)
        if G.order <= max_order:
            out.append(G)
    return out


@lru_cache(maxsize=32)
def all_subgroups(G: FiniteGroup) -> tuple[Subgroup, ...]:
    """Every subgroup, ordered by (order, elements).

    Cyclic subgroups first, then joins of pairs until nothing new appears.
    """
    found: dict[tuple[int, ...], Subgroup] = {}
    for g in G.elements:
        elems = tuple(_closure(G, [g]))
        found.setdefault(elems, Subgroup(G, elems))
    frontier = list(found.values())
    while frontier:
        fresh = []
        current = list(found.values())
        for a in frontier:
            for b in current:
                if a.is_subgroup_of(b) or b.is_subgroup_of(a):
                    continue
                elems = tuple(_closure(G, a.generators + b.generators))
                if elems not in found:
                    found[elems] = Subgroup(G, elems)
                    fresh.append(found[elems])
        frontier = fresh
    return tuple(sorted(found.values(), key=lambda H: (H.order, H.elements)))


def subgroup_classes(G: FiniteGroup) -> list[Subgroup]:
    """One subgroup per conjugacy class (the first in ``all_subgroups`` order)."""
    reps: list[Subgroup] = []
    seen: set[tuple[int, ...]] = set()
    for H in all_subgroups(G):
        if H.elements in seen:
            continue
        reps.append(H)
        for x in G.elements:
            seen.add(H.conjugate(x).elements)
    return reps


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    return [H for H in all_subgroups(G) if H.is_normal()]
