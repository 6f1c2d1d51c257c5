# secatbounds/groups/finite_group.py
"""Finite groups as multiplication tables over element indices.

Elements are the integers 0..n-1. Direct powers are encoded mixed-radix with
the first factor most significant, so the index order of G^r is the
lexicographic order of r-tuples.
"""
from __future__ import annotations

import bisect
import logging
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Iterable, Mapping, Optional, Sequence

import numpy as np

from secatbounds.config import Caps, get_settings, resolve_caps
from secatbounds.errors import InvalidGroupError, NotNormalError

logger = logging.getLogger(__name__)


class FiniteGroup:
    """A validated finite group given by its multiplication table.

    Instances are immutable after construction and compare by identity.
    Use :func:`make_group` (or the catalog) rather than calling this directly.
    """

    def __init__(
        self,
        table: np.ndarray,
        identity: int,
        inverses: np.ndarray,
        name: str = "G",
        labels: Optional[Sequence[str]] = None,
    ):
        self._table = np.asarray(table, dtype=np.int64)
        self._table.setflags(write=False)
        self._inverses = np.asarray(inverses, dtype=np.int64)
        self._inverses.setflags(write=False)
        self.identity = int(identity)
        self.name = name
        self._labels = tuple(labels) if labels is not None else None

    # --- basic structure -------------------------------------------------
    @property
    def order(self) -> int:
        return int(self._inverses.shape[0])

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def inverses(self) -> np.ndarray:
        return self._inverses

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def non_identity(self) -> list[int]:
        return [g for g in self.elements if g != self.identity]

    def mul(self, a: int, b: int) -> int:
        return int(self._table[a, b])

    def inv(self, a: int) -> int:
        return int(self._inverses[a])

    def left_row(self, g: int) -> np.ndarray:
        """g·x for every x."""
        return self._table[g]

    def right_col(self, g: int) -> np.ndarray:
        """x·g for every x."""
        return self._table[:, g]

    def conj(self, g: int, x: int) -> int:
        """g x g^{-1}"""
        return self.mul(self.mul(g, x), self.inv(g))

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv(g), -k
        out = self.identity
        base = g
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mul(x, g)
            k += 1
        return k

    @cached_property
    def exponent(self) -> int:
        out = 1
        for g in self.elements:
            out = int(np.lcm(out, self.element_order(g)))
        return out

    @cached_property
    def is_abelian(self) -> bool:
        return all(np.array_equal(self.left_row(g), self.right_col(g)) for g in self.generators)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """Greedy generating set: scan elements in index order, keep those outside the span so far."""
        gens: list[int] = []
        span = {self.identity}
        for g in self.elements:
            if g in span:
                continue
            gens.append(g)
            span = set(_closure(self, gens))
            if len(span) == self.order:
                break
        return tuple(gens)

    def label(self, g: int) -> str:
        if self._labels is not None:
            return self._labels[g]
        return str(g)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


class DirectPower(FiniteGroup):
    """G^r without a materialized table; products are computed digit-wise."""

    def __init__(self, factor: FiniteGroup, power: int):
        self.factor = factor
        self.power_r = power
        n = factor.order
        size = n ** power
        digits = np.array(np.unravel_index(np.arange(size), (n,) * power), dtype=np.int64).T
        digits = digits.reshape(size, power)
        digits.setflags(write=False)
        self.digits = digits
        self.weights = np.array([n ** (power - 1 - i) for i in range(power)], dtype=np.int64)
        inverses = (factor.inverses[digits] * self.weights).sum(axis=1)
        identity = int(factor.identity * self.weights.sum())
        self._table = None
        self._inverses = np.asarray(inverses, dtype=np.int64)
        self._inverses.setflags(write=False)
        self.identity = identity
        self.name = f"{factor.name}^{power}"
        self._labels = None

    @property
    def table(self) -> np.ndarray:
        if self._table is None:
            self._table = np.stack([self.left_row(g) for g in self.elements])
            self._table.setflags(write=False)
        return self._table

    def encode(self, parts: Sequence[int]) -> int:
        return int(sum(int(p) * int(w) for p, w in zip(parts, self.weights)))

    def decode(self, g: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.digits[g])

    def mul(self, a: int, b: int) -> int:
        t = self.factor.table
        da, db = self.digits[a], self.digits[b]
        return int((t[da, db] * self.weights).sum())

    def left_row(self, g: int) -> np.ndarray:
        t = self.factor.table
        return (t[self.digits[g][None, :], self.digits] * self.weights).sum(axis=1)

    def right_col(self, g: int) -> np.ndarray:
        t = self.factor.table
        return (t[self.digits, self.digits[g][None, :]] * self.weights).sum(axis=1)

    def label(self, g: int) -> str:
        return "(" + ",".join(self.factor.label(p) for p in self.decode(g)) + ")"


def _closure(G: FiniteGroup, gens: Iterable[int]) -> list[int]:
    gens = list(gens)
    seen = {G.identity}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = G.mul(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    elements: tuple[int, ...]  # sorted

    @classmethod
    def from_elements(cls, G: FiniteGroup, elements: Iterable[int], check: bool = True) -> "Subgroup":
        elems = tuple(sorted(set(int(e) for e in elements)))
        sub = cls(G, elems)
        if check:
            sub.validate()
        return sub

    @classmethod
    def generated_by(cls, G: FiniteGroup, gens: Iterable[int]) -> "Subgroup":
        return cls(G, tuple(_closure(G, gens)))

    @classmethod
    def trivial(cls, G: FiniteGroup) -> "Subgroup":
        return cls(G, (G.identity,))

    @classmethod
    def whole(cls, G: FiniteGroup) -> "Subgroup":
        return cls(G, tuple(G.elements))

    def validate(self) -> None:
        G = self.parent
        if G.identity not in self:
            raise InvalidGroupError("subset does not contain the identity", field="subgroup")
        for a in self.elements:
            if G.inv(a) not in self:
                raise InvalidGroupError(f"subset not closed under inverses at {G.label(a)}", field="subgroup")
            row = G.left_row(a)
            for b in self.elements:
                if int(row[b]) not in self:
                    raise InvalidGroupError("subset not closed under multiplication", field="subgroup")

    def __contains__(self, g: int) -> bool:
        i = bisect.bisect_left(self.elements, g)
        return i < len(self.elements) and self.elements[i] == g

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return all(g in other for g in self.elements)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        gens: list[int] = []
        span = {self.parent.identity}
        for g in self.elements:
            if g not in span:
                gens.append(g)
                span = set(_closure(self.parent, gens))
        return tuple(gens)

    def conjugate(self, x: int) -> "Subgroup":
        """x H x^{-1}"""
        G = self.parent
        return Subgroup(G, tuple(sorted(G.conj(x, h) for h in self.elements)))

    def is_normal(self) -> bool:
        G = self.parent
        return all(G.conj(g, h) in self for g in G.generators for h in self.generators)

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, tuple(sorted(set(self.elements) & set(other.elements))))

    @cached_property
    def _as_group(self) -> tuple[FiniteGroup, np.ndarray]:
        G = self.parent
        elems = np.array(self.elements, dtype=np.int64)
        pos = {int(e): i for i, e in enumerate(self.elements)}
        table = np.empty((len(elems), len(elems)), dtype=np.int64)
        for i, a in enumerate(self.elements):
            row = G.left_row(a)[elems]
            table[i] = [pos[int(v)] for v in row]
        inverses = np.array([pos[G.inv(a)] for a in self.elements], dtype=np.int64)
        labels = [G.label(a) for a in self.elements]
        group = FiniteGroup(table, pos[G.identity], inverses, name=f"sub({G.name})", labels=labels)
        return group, elems

    @property
    def group(self) -> FiniteGroup:
        """This subgroup as a standalone group; element i is ``elements[i]``."""
        return self._as_group[0]

    @property
    def embedding(self) -> np.ndarray:
        return self._as_group[1]


class CosetSpace:
    """Left cosets gH ordered by their minimal element, with the left G-action."""

    def __init__(self, G: FiniteGroup, H: Subgroup):
        if H.parent is not G:
            raise InvalidGroupError("subgroup belongs to a different group", field="subgroup")
        self.group = G
        self.subgroup = H
        coset_of = np.full(G.order, -1, dtype=np.int64)
        cosets: list[tuple[int, ...]] = []
        h_elems = np.array(H.elements, dtype=np.int64)
        for g in G.elements:
            if coset_of[g] >= 0:
                continue
            members = tuple(sorted(int(v) for v in G.left_row(g)[h_elems]))
            coset_of[list(members)] = len(cosets)
            cosets.append(members)
        self.cosets = cosets
        self.representatives = tuple(c[0] for c in cosets)
        self.coset_of = coset_of
        self.coset_of.setflags(write=False)
        reps = np.array(self.representatives, dtype=np.int64)
        action = np.empty((G.order, len(cosets)), dtype=np.int64)
        for g in G.elements:
            action[g] = coset_of[G.left_row(g)[reps]]
        action.setflags(write=False)
        self.action = action
        self.base = int(coset_of[G.identity])

    @property
    def index(self) -> int:
        return len(self.cosets)

    def act(self, g: int, c: int) -> int:
        return int(self.action[g, c])

    def label(self, c: int) -> str:
        return f"{self.group.label(self.representatives[c])}H"


class GroupHom:
    def __init__(self, source: FiniteGroup, target: FiniteGroup, images: Sequence[int], name: str = "rho"):
        self.source = source
        self.target = target
        self.images = np.asarray(images, dtype=np.int64)
        self.images.setflags(write=False)
        self.name = name

    def __call__(self, g: int) -> int:
        return int(self.images[g])

    @cached_property
    def is_surjective(self) -> bool:
        return len(set(self.images.tolist())) == self.target.order

    @cached_property
    def is_injective(self) -> bool:
        return len(set(self.images.tolist())) == self.source.order

    def kernel(self) -> Subgroup:
        e = self.target.identity
        return Subgroup(self.source, tuple(int(g) for g in np.nonzero(self.images == e)[0]))

    def validate(self, caps: Optional[Caps] = None) -> None:
        caps = resolve_caps(caps)
        S, T = self.source, self.target
        if self.images.shape != (S.order,) or self.images.min(initial=0) < 0 or \
                self.images.max(initial=0) >= T.order:
            raise InvalidGroupError("image table has the wrong shape", field=self.name)
        if self(S.identity) != T.identity:
            raise InvalidGroupError("identity is not preserved", field=self.name)
        for a, b in _pairs(S.order, caps):
            if self(S.mul(a, b)) != T.mul(self(a), self(b)):
                raise InvalidGroupError(
                    f"not a homomorphism at ({S.label(a)}, {S.label(b)})", field=self.name
                )


def _pairs(n: int, caps: Caps):
    if n <= caps.full_check_order:
        for a in range(n):
            for b in range(n):
                yield a, b
        return
    rng = random.Random(get_settings().engine.seed)
    for _ in range(caps.sampled_checks):
        yield rng.randrange(n), rng.randrange(n)


# --- construction -----------------------------------------------------------

def _validate_table(table: np.ndarray, caps: Caps) -> tuple[int, np.ndarray]:
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise InvalidGroupError("multiplication table must be a non-empty square array", field="table")
    n = table.shape[0]
    caps.check("max_order", n)
    if table.min() < 0 or table.max() >= n:
        raise InvalidGroupError("table entries must be element indices 0..n-1", field="table")
    full = np.arange(n)
    for g in range(n):
        if not np.array_equal(np.sort(table[g]), full):
            raise InvalidGroupError(f"row {g} is not a permutation", field=f"table[{g}]")
        if not np.array_equal(np.sort(table[:, g]), full):
            raise InvalidGroupError(f"column {g} is not a permutation", field=f"table[*][{g}]")
    candidates = [e for e in range(n) if np.array_equal(table[e], full) and np.array_equal(table[:, e], full)]
    if not candidates:
        raise InvalidGroupError("no two-sided identity element", field="table")
    e = candidates[0]
    inverses = np.empty(n, dtype=np.int64)
    for g in range(n):
        h = int(np.nonzero(table[g] == e)[0][0])
        if table[h, g] != e:
            raise InvalidGroupError(f"element {g} has no two-sided inverse", field="table")
        inverses[g] = h

    if n <= caps.full_check_order:
        for a in range(n):
            # (a·b)·c against a·(b·c) for every b, c
            if not np.array_equal(table[table[a]], table[a][table]):
                raise InvalidGroupError(f"table is not associative (left factor {a})", field="table")
    else:
        rng = random.Random(get_settings().engine.seed)
        for _ in range(caps.sampled_checks):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if table[table[a, b], c] != table[a, table[b, c]]:
                raise InvalidGroupError(f"table is not associative at ({a}, {b}, {c})", field="table")
    return e, inverses


def group_from_table(table, name: str = "G", labels: Optional[Sequence[str]] = None,
                     caps: Optional[Caps] = None) -> FiniteGroup:
    caps = resolve_caps(caps)
    arr = np.asarray(table, dtype=np.int64)
    e, inverses = _validate_table(arr, caps)
    return FiniteGroup(arr, e, inverses, name=name, labels=labels)


def _perm_from_cycles(degree: int, cycles: Sequence[Sequence[int]], where: str) -> tuple[int, ...]:
    image = list(range(degree))
    seen: set[int] = set()
    for cycle in cycles:
        for p in cycle:
            if not 1 <= p <= degree:
                raise InvalidGroupError(f"point {p} outside 1..{degree}", field=where)
            if p in seen:
                raise InvalidGroupError(f"point {p} repeated in cycle notation", field=where)
            seen.add(p)
        for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
            image[a - 1] = b - 1
    return tuple(image)


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = []
        x = start
        while x not in seen:
            seen.add(x)
            cycle.append(x + 1)
            x = perm[x]
        parts.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(parts) or "()"


def group_from_permutations(degree: int, generators: Sequence[Sequence[Sequence[int]]],
                            name: str = "G", caps: Optional[Caps] = None) -> FiniteGroup:
    """Closure of permutation generators given in 1-based cycle notation.

    Composition is right-to-left: (p·q)(x) = p(q(x)).
    """
    caps = resolve_caps(caps)
    if degree <= 0:
        raise InvalidGroupError("degree must be positive", field="degree")
    gens = [_perm_from_cycles(degree, g, f"generators[{i}]") for i, g in enumerate(generators)]
    ident = tuple(range(degree))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = tuple(x[s[i]] for i in range(degree))
            if y not in seen:
                seen.add(y)
                caps.check("max_order", len(seen))
                queue.append(y)
    perms = sorted(seen)
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        table[i] = [index[tuple(p[q[k]] for k in range(degree))] for q in perms]
    inverses = np.empty(n, dtype=np.int64)
    for i, p in enumerate(perms):
        inv = [0] * degree
        for k, v in enumerate(p):
            inv[v] = k
        inverses[i] = index[tuple(inv)]
    labels = [_cycle_label(p) for p in perms]
    logger.debug("closed %d permutation generators on %d points: order %d", len(gens), degree, n)
    return FiniteGroup(table, index[ident], inverses, name=name, labels=labels)


def make_group(spec: Mapping[str, Any] | Any, caps: Optional[Caps] = None) -> FiniteGroup:
    """Build a validated group from a table, permutation-generator or catalog-name spec."""
    from secatbounds.utils.validators import GroupSpec, parse_group_spec

    model = spec if isinstance(spec, GroupSpec) else parse_group_spec(spec)
    payload = model.root
    if payload.kind == "named":
        from secatbounds.groups.catalog import by_name
        try:
            return by_name(payload.name)
        except KeyError as exc:
            raise InvalidGroupError(str(exc.args[0]), field="group.name") from exc
    name = payload.name or ("G" if payload.kind == "table" else f"<perm {payload.degree}>")
    if payload.kind == "table":
        return group_from_table(payload.table, name=name, labels=payload.labels, caps=caps)
    return group_from_permutations(payload.degree, payload.generators, name=name, caps=caps)


@lru_cache(maxsize=64)
def _direct_power_cached(G: FiniteGroup, r: int) -> FiniteGroup:
    return DirectPower(G, r)


def direct_power(G: FiniteGroup, r: int, caps: Optional[Caps] = None) -> FiniteGroup:
    """G^r with mixed-radix element indices; r = 1 returns G itself."""
    if r < 1:
        raise InvalidGroupError("power must be positive", field="r")
    if r == 1:
        return G
    resolve_caps(caps).check("max_order", G.order ** r)
    return _direct_power_cached(G, r)


def direct_product(*groups: FiniteGroup, name: Optional[str] = None,
                   caps: Optional[Caps] = None) -> FiniteGroup:
    """G_1 × ... × G_k as a table group, first factor most significant."""
    caps = resolve_caps(caps)
    sizes = [G.order for G in groups]
    total = int(np.prod(sizes))
    caps.check("max_order", total)
    digits = np.array(np.unravel_index(np.arange(total), sizes), dtype=np.int64).T.reshape(total, len(groups))
    weights = np.array([int(np.prod(sizes[i + 1:])) for i in range(len(groups))], dtype=np.int64)
    table = np.zeros((total, total), dtype=np.int64)
    for i, G in enumerate(groups):
        table += G.table[digits[:, i][:, None], digits[:, i][None, :]] * weights[i]
    inverses = sum(G.inverses[digits[:, i]] * weights[i] for i, G in enumerate(groups))
    identity = int(sum(G.identity * weights[i] for i, G in enumerate(groups)))
    labels = ["(" + ",".join(G.label(int(d[i])) for i, G in enumerate(groups)) + ")" for d in digits]
    return FiniteGroup(table, identity, inverses, name=name or " x ".join(G.name for G in groups), labels=labels)


def quotient_group(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """G/N with Q-element i the i-th coset of ``CosetSpace(G, N)``."""
    if not N.is_normal():
        raise NotNormalError("subgroup is not normal", field="subgroup")
    space = CosetSpace(G, N)
    k = space.index
    reps = space.representatives
    table = np.empty((k, k), dtype=np.int64)
    for i, a in enumerate(reps):
        table[i] = [space.coset_of[G.mul(a, b)] for b in reps]
    inverses = np.array([space.coset_of[G.inv(a)] for a in reps], dtype=np.int64)
    labels = [f"{G.label(a)}N" for a in reps]
    Q = FiniteGroup(table, space.base, inverses, name=f"{G.name}/N", labels=labels)
    return Q, GroupHom(G, Q, space.coset_of, name="quotient")
