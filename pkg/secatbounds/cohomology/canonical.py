# secatbounds/cohomology/canonical.py
"""The canonical class v_r of π^r and its comparison with ω for the diagonal.

π^r acts on π^{r-1} by (x_i)·(g_i) = (x_i g_i x_{i+1}^{-1}); ∂(g) = (g_i g_{i+1}^{-1})
is the orbit map of the identity tuple and f_r(g) = ∂(g) - 1 is a crossed
homomorphism into the augmentation ideal I_r of Z[π^{r-1}].
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from secatbounds.config import Caps, get_settings, resolve_caps
from secatbounds.errors import InputError, VerificationError
from secatbounds.groups.constructions import diagonal_subgroup
from secatbounds.groups.finite_group import CosetSpace, FiniteGroup, direct_power
from secatbounds.modules.gmodule import GMap
from secatbounds.modules.standard import AugmentationIdeal, augmentation_submodule, set_permutation_module
from secatbounds.cohomology.classes import bs_class
from secatbounds.cohomology.complex import ExtComplex
from secatbounds.cohomology.groups import Cocycle
from secatbounds.cohomology.resolution import Resolution

logger = logging.getLogger(__name__)

# exhaustive crossed-hom law check up to this many pairs, sampled above
_EXHAUSTIVE_PAIRS = 250_000

Chain = dict[int, int]  # point of π^{r-1} -> coefficient


def _add(acc: Chain, other: Chain, sign: int = 1) -> None:
    for x, c in other.items():
        v = acc.get(x, 0) + sign * c
        if v:
            acc[x] = v
        else:
            acc.pop(x, None)


@dataclass
class TupleAction:
    """π^r acting on the points of π^{r-1}."""
    factor: FiniteGroup
    power: FiniteGroup
    points: FiniteGroup
    action: np.ndarray  # action[g, x]
    boundary: np.ndarray  # ∂(g) as a point index
    base: int

    def act_chain(self, g: int, chain: Chain) -> Chain:
        out: Chain = {}
        for x, c in chain.items():
            y = int(self.action[g, x])
            out[y] = out.get(y, 0) + c
        return {x: c for x, c in out.items() if c}


def tuple_action(pi: FiniteGroup, r: int, caps: Optional[Caps] = None) -> TupleAction:
    if r < 2:
        raise InputError("r must be at least 2", field="r")
    caps = resolve_caps(caps)
    P = direct_power(pi, r, caps)
    X = direct_power(pi, r - 1, caps)
    n = pi.order
    digits = P.digits
    xdigits = X.digits if r > 2 else np.arange(n, dtype=np.int64).reshape(n, 1)
    xweights = np.array([n ** (r - 2 - i) for i in range(r - 1)], dtype=np.int64)
    T = pi.table
    inv = pi.inverses
    action = np.zeros((P.order, X.order), dtype=np.int64)
    for g in P.elements:
        d = digits[g]
        target = np.zeros(X.order, dtype=np.int64)
        for i in range(r - 1):
            col = T[T[d[i], xdigits[:, i]], inv[d[i + 1]]]
            target += col * xweights[i]
        action[g] = target
    base = int(X.identity)
    boundary = action[:, base].copy()
    return TupleAction(pi, P, X, action, boundary, base)


@dataclass
class CrossedHom:
    """A map π^r → I_r with f(gh) = g·f(h) + f(g), stored as vectors."""
    group: FiniteGroup
    module_ideal: AugmentationIdeal
    values: list[tuple[int, ...]]
    data: TupleAction
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def module(self):
        return self.module_ideal.module

    def chain(self, g: int) -> Chain:
        """f(g) as an element of Z[π^{r-1}]."""
        out: Chain = {}
        base = self.data.base
        for i, c in enumerate(self.values[g]):
            if c:
                x = self.module_ideal.points[i]
                out[x] = out.get(x, 0) + c
                out[base] = out.get(base, 0) - c
        return {x: c for x, c in out.items() if c}

    def check_law(self, caps: Optional[Caps] = None) -> bool:
        G = self.group
        n = G.order
        if n * n <= _EXHAUSTIVE_PAIRS:
            pairs = ((g, h) for g in G.elements for h in G.elements)
        else:
            rng = random.Random(get_settings().engine.seed)
            budget = resolve_caps(caps).sampled_checks
            pairs = ((rng.randrange(n), rng.randrange(n)) for _ in range(budget))
        chains = {}

        def ch(g):
            c = chains.get(g)
            if c is None:
                c = chains[g] = self.chain(g)
            return c

        for g, h in pairs:
            rhs = self.data.act_chain(g, ch(h))
            _add(rhs, ch(g))
            if rhs != ch(G.mul(g, h)):
                raise VerificationError("crossed homomorphism law fails",
                                        {"g": G.label(g), "h": G.label(h)})
        return True

    def to_cocycle(self, resolution: Resolution, convention: str = "direct") -> Cocycle:
        """c(1 ⊗ (g - 1)) := f(g), or -g·f(g^{-1}) for convention "inverse"."""
        G = self.group
        rank = self.module.rank
        values = [0] * (resolution.k_rank * rank)
        for j, g in enumerate(resolution.k_basis):
            if convention == "direct":
                vec = self.values[g]
            elif convention == "inverse":
                vec = [-v for v in self.module.apply(g, self.values[G.inv(g)])]
            else:
                raise InputError(f"unknown convention {convention!r}", field="convention")
            values[j * rank:(j + 1) * rank] = list(vec)
        return Cocycle(1, self.module, tuple(values))

    def to_dict(self) -> dict:
        return {"group_order": self.group.order, "rank": self.module.rank, "checks": dict(sorted(self.checks.items()))}


def crossed_hom_fr(pi: FiniteGroup, r: int, caps: Optional[Caps] = None, verify: bool = True) -> CrossedHom:
    """f_r(g_1, ..., g_r) = (g_1 g_2^{-1}, ..., g_{r-1} g_r^{-1}) - 1."""
    data = tuple_action(pi, r, caps)
    ambient = set_permutation_module(data.power, data.action,
                                     labels=[data.points.label(x) for x in data.points.elements],
                                     name="Z[pi^(r-1)]")
    ideal = augmentation_submodule(ambient, data.action, data.base, name="I_r")
    rank = ideal.module.rank
    values = []
    for g in data.power.elements:
        vec = [0] * rank
        idx = ideal.index_of(int(data.boundary[g]))
        if idx is not None:
            vec[idx] = 1
        values.append(tuple(vec))
    f = CrossedHom(data.power, ideal, values, data)
    if verify:
        f.checks["identity_zero"] = not any(values[data.power.identity])
        f.checks["crossed_law"] = f.check_law(caps)
        f.checks["generator_formula"] = generator_formula_check(f, r)
        if not all(f.checks.values()):
            raise VerificationError("f_r checks failed", dict(f.checks))
    return f


def generator_formula_check(f: CrossedHom, r: int) -> bool:
    """Rebuild f from its values on the coordinate generators e_j(g) and compare.

    f(g_1, ..., g_r) = Σ_j (g_1, ..., g_{j-1}, 1, ..., 1)·f(e_j(g_j)).
    """
    P = f.group
    e = f.data.factor.identity
    for g in P.elements:
        parts = P.decode(g)
        total: Chain = {}
        prefix = [e] * r
        for j in range(r):
            unit = [e] * r
            unit[j] = parts[j]
            gen = P.encode(unit)
            _add(total, f.data.act_chain(P.encode(prefix), f.chain(gen)))
            prefix[j] = parts[j]
        if total != f.chain(g):
            raise VerificationError("generator formula disagrees with f_r", {"g": P.label(g)})
    return True


def canonical_class(pi: FiniteGroup, r: int, resolution: Optional[Resolution] = None,
                    caps: Optional[Caps] = None) -> tuple[Cocycle, CrossedHom]:
    """v_r as a degree-1 cocycle on the resolution of π^r."""
    f = crossed_hom_fr(pi, r, caps)
    res = resolution or Resolution(f.group, 2, caps)
    cocycle = f.to_cocycle(res)
    alt = f.to_cocycle(res, "inverse")
    f.checks["conventions_agree"] = alt.values == cocycle.values
    if not f.checks["conventions_agree"]:
        diff = [x - y for x, y in zip(cocycle.values, alt.values)]
        if not ExtComplex(res, None, f.module, caps).is_coboundary(1, diff):
            raise VerificationError("crossed-hom conventions give different classes", {"r": r})
    return cocycle, f


@dataclass
class PsiReport:
    order: int
    r: int
    well_defined: bool
    bijective: bool
    equivariant: bool
    exact: bool

    @property
    def ok(self) -> bool:
        return self.well_defined and self.bijective and self.equivariant and self.exact

    def to_dict(self) -> dict:
        return {"order": self.order, "r": self.r, "well_defined": self.well_defined,
                "bijective": self.bijective, "equivariant": self.equivariant, "exact": self.exact}


def psi_compare(pi: FiniteGroup, r: int, caps: Optional[Caps] = None) -> PsiReport:
    """ψ_*(ω) = v_r through the coset bijection gΔ ↦ ∂(g)."""
    caps = resolve_caps(caps)
    v_r, f = canonical_class(pi, r, caps=caps)
    P = f.group
    res = Resolution(P, 2, caps)
    delta = diagonal_subgroup(pi, r, caps)
    cosets = CosetSpace(P, delta)
    bs = bs_class(P, delta, res, caps, verify=False)
    phi = [int(f.data.boundary[rep]) for rep in cosets.representatives]
    well_defined = all(int(f.data.boundary[g]) == phi[int(cosets.coset_of[g])] for g in P.elements)
    bijective = len(set(phi)) == len(phi) == f.data.points.order
    equivariant = all(
        phi[cosets.act(g, c)] == int(f.data.action[g, phi[c]]) for g in P.generators for c in range(cosets.index)
    )
    rank = bs.module.rank
    matrix = np.zeros((f.module.rank, rank), dtype=np.int64)
    for c in range(cosets.index):
        src = bs.ideal.index_of(c)
        if src is None:
            continue
        matrix[f.module_ideal.index_of(phi[c]), src] = 1
    psi = GMap(bs.module, f.module, matrix, name="psi")
    if not psi.is_equivariant():
        raise VerificationError("ψ is not equivariant", {"r": r})
    pushed = []
    for j in range(res.k_rank):
        pushed.extend(psi.apply(bs.cocycle.values[j * rank:(j + 1) * rank]))
    exact = pushed == list(v_r.values)
    report = PsiReport(pi.order, r, well_defined, bijective, equivariant, exact)
    if not report.ok:
        raise VerificationError("ψ_*(ω) differs from v_r", report.to_dict())
    return report
