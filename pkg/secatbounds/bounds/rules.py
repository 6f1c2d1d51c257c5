# secatbounds/bounds/rules.py
"""
Inference rules for the bound engine.

Each rule concludes an interval for one quantity from the current intervals of
its premises. Rules are registered into ``RULES``; the engine evaluates
whatever is registered, so adding a theorem means adding a rule here.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Optional, Union

from secatbounds.bounds.descriptors import (
    EpimorphismDescriptor,
    GroupDescriptor,
    Relation,
    SpaceQuery,
    SubgroupQuery,
    Variant,
)
from secatbounds.bounds.interval import BoundInterval, maximum_of, sum_of


@dataclass(frozen=True)
class Quantity:
    """A number the engine bounds: ``kind`` of ``subject`` (and ``r`` for TC_r)."""
    kind: str
    subject: Hashable
    r: Optional[int] = None

    def __str__(self) -> str:
        s = self.subject
        if self.kind == "cd":
            return f"cd({s.label()})"
        if self.kind == "k":
            return f"k({s.label()})"
        if self.kind == "tc":
            return f"TC_{self.r}({s.label()})"
        if self.kind == "secat":
            return f"secat({s.label()})"
        if self.kind == "kappa":
            return f"κ({s.label()})"
        if self.kind == "tc_epi":
            return f"TC[{s.label()}]"
        if self.kind == "cd_fibered":
            return f"cd({s.fibered_product})"
        if self.kind == "k_rho":
            return f"k({s.label()})"
        if self.kind == "tc_space":
            return s.label()
        return f"{self.kind}({s})"


Premises = dict[str, Quantity]
Conclusion = Callable[[Quantity, dict[str, BoundInterval]], Optional[BoundInterval]]


def _no_premises(q: Quantity) -> Premises:
    return {}


def _always(q: Quantity) -> bool:
    return True


@dataclass(frozen=True)
class Rule:
    name: str
    kind: str
    anchor: Union[str, Callable[[Quantity], str]]
    conclude: Conclusion
    applies: Callable[[Quantity], bool] = _always
    premises: Callable[[Quantity], Premises] = _no_premises

    def anchor_for(self, q: Quantity) -> str:
        return self.anchor(q) if callable(self.anchor) else self.anchor


@dataclass
class RuleRegistry:
    rules: list[Rule] = field(default_factory=list)

    def add(self, rule: Rule) -> Rule:
        if any(r.name == rule.name for r in self.rules):
            raise ValueError(f"duplicate rule name {rule.name}")
        self.rules.append(rule)
        return rule

    def rule(self, kind: str, name: str, anchor, applies=_always, premises=_no_premises):
        def register(fn: Conclusion) -> Conclusion:
            self.add(Rule(name, kind, anchor, fn, applies, premises))
            return fn
        return register

    def for_quantity(self, q: Quantity) -> list[Rule]:
        return [r for r in self.rules if r.kind == q.kind and r.applies(q)]

    def names(self) -> list[str]:
        return [r.name for r in self.rules]


RULES = RuleRegistry()

point = BoundInterval.point


def cd(d: GroupDescriptor) -> Quantity:
    return Quantity("cd", d)


def k(d: GroupDescriptor) -> Quantity:
    return Quantity("k", d)


def tc(d: GroupDescriptor, r: int) -> Quantity:
    return Quantity("tc", d, r)


def _variant(*variants: Variant) -> Callable[[Quantity], bool]:
    return lambda q: q.subject.variant in variants


def _known_nontrivial(d: GroupDescriptor) -> bool:
    if d.variant in (Variant.FREE_ABELIAN, Variant.FREE, Variant.SURFACE, Variant.HYPERBOLIC):
        return True
    if d.variant in (Variant.DIRECT_PRODUCT, Variant.AMALGAM):
        return any(_known_nontrivial(f) for f in d.factors)
    return d.cd is not None and (d.cd[0] or 0) >= 1


def _metadata_anchor(q: Quantity) -> str:
    return f"supplied: {q.subject.provenance}"


# ---------------------------------------------------------------- cd(π)

@RULES.rule("cd", "cd_metadata", _metadata_anchor, applies=lambda q: q.subject.cd is not None)
def _cd_metadata(q, p):
    return BoundInterval(*q.subject.cd)


@RULES.rule("cd", "cd_trivial", "cd(1) = 0", applies=_variant(Variant.TRIVIAL))
def _cd_trivial(q, p):
    return point(0)


@RULES.rule("cd", "cd_free_abelian", "cd(Z^n) = n", applies=_variant(Variant.FREE_ABELIAN))
def _cd_free_abelian(q, p):
    return point(q.subject.parameter)


@RULES.rule("cd", "cd_free", "free groups have cd 1", applies=_variant(Variant.FREE))
def _cd_free(q, p):
    return point(1)


@RULES.rule("cd", "cd_surface", "closed aspherical surfaces have cd 2", applies=_variant(Variant.SURFACE))
def _cd_surface(q, p):
    return point(2)


@RULES.rule("cd", "cd_hyperbolic", "cd of a torsion-free hyperbolic group as declared",
            applies=_variant(Variant.HYPERBOLIC))
def _cd_hyperbolic(q, p):
    return point(q.subject.parameter)


def _factor_premises(q: Quantity) -> Premises:
    return {f"f{i}": cd(f) for i, f in enumerate(q.subject.factors)}


@RULES.rule("cd", "cd_product_bounds",
            "max cd(π_i) ≤ cd(π_1 × ... × π_m) ≤ Σ cd(π_i): factors are subgroups, products add at most",
            applies=_variant(Variant.DIRECT_PRODUCT), premises=_factor_premises)
def _cd_product_bounds(q, p):
    factors = list(p.values())
    lower = maximum_of(factors).lower
    upper = sum_of(factors).upper
    return BoundInterval(lower, upper)


@RULES.rule("cd", "cd_product_geometrically_finite",
            "cd(π_1 × π_2) = cd(π_1) + cd(π_2) for geometrically finite factors",
            applies=lambda q: q.subject.variant is Variant.DIRECT_PRODUCT and all(
                f.is_geometrically_finite for f in q.subject.factors),
            premises=_factor_premises)
def _cd_product_gf(q, p):
    return sum_of(p.values())


def _amalgam_premises(q: Quantity) -> Premises:
    return {"left": cd(q.subject.left), "right": cd(q.subject.right)}


@RULES.rule("cd", "cd_amalgam_bounds",
            "max{cd π_1, cd π_2} ≤ cd(π_1 *_H π_2) ≤ max{cd π_1, cd π_2} + 1",
            applies=_variant(Variant.AMALGAM), premises=_amalgam_premises)
def _cd_amalgam_bounds(q, p):
    m = p["left"].maximum(p["right"])
    return BoundInterval(m.lower, None if m.upper is None else m.upper + 1)


@RULES.rule("cd", "cd_amalgam_unequal",
            "cd(π_1 *_H π_2) = max{cd π_1, cd π_2} + 1 requires cd π_1 = cd π_2",
            applies=_variant(Variant.AMALGAM), premises=_amalgam_premises)
def _cd_amalgam_unequal(q, p):
    a, b = p["left"], p["right"]
    disjoint = (a.upper is not None and b.lower is not None and a.upper < b.lower) or (
        b.upper is not None and a.lower is not None and b.upper < a.lower)
    if not disjoint:
        return None
    return a.maximum(b).upper_only()


@RULES.rule("cd", "cd_amalgam_finite_index",
            "cd(π_1 *_H π_2) = max{cd π_1, cd π_2} + 1 when both factors are FP_∞ "
            "and H has finite index in both",
            applies=lambda q: q.subject.variant is Variant.AMALGAM and q.subject.edge.finite_index
            and q.subject.edge.factors_fp_infinity,
            premises=_amalgam_premises)
def _cd_amalgam_finite_index(q, p):
    return p["left"].maximum(p["right"]) + 1


# ---------------------------------------------------------------- k(π)
# k(π) = max{cd C(g) : g ≠ 1}; k(1) = 0 as an empty maximum.

@RULES.rule("k", "k_metadata", _metadata_anchor, applies=lambda q: q.subject.k is not None)
def _k_metadata(q, p):
    return BoundInterval(*q.subject.k)


@RULES.rule("k", "k_trivial", "k(1) = 0 (no nontrivial elements)", applies=_variant(Variant.TRIVIAL))
def _k_trivial(q, p):
    return point(0)


@RULES.rule("k", "k_free_abelian", "k(Z^n) = n since every centralizer is Z^n",
            applies=_variant(Variant.FREE_ABELIAN))
def _k_free_abelian(q, p):
    return point(q.subject.parameter)


@RULES.rule("k", "k_hyperbolic",
            "centralizers of nontrivial elements of torsion-free hyperbolic groups are infinite cyclic",
            applies=_variant(Variant.FREE, Variant.SURFACE, Variant.HYPERBOLIC))
def _k_hyperbolic(q, p):
    return point(1)


def _k_amalgam_premises(q: Quantity) -> Premises:
    return {"left": k(q.subject.left), "right": k(q.subject.right)}


@RULES.rule("k", "k_amalgam_malnormal",
            "H malnormal in a factor: each centralizer in π_1 *_H π_2 is infinite cyclic or "
            "a centralizer in a factor, so k ≤ max{1, k(π_1), k(π_2)}",
            applies=lambda q: q.subject.variant is Variant.AMALGAM and q.subject.edge.malnormal,
            premises=_k_amalgam_premises)
def _k_amalgam_malnormal(q, p):
    return maximum_of([point(1), p["left"], p["right"]]).upper_only()


@RULES.rule("k", "k_amalgam_factors",
            "factors embed in π_1 *_H π_2, so k ≥ max{k(π_1), k(π_2)}",
            applies=_variant(Variant.AMALGAM), premises=_k_amalgam_premises)
def _k_amalgam_factors(q, p):
    return p["left"].maximum(p["right"]).lower_only()


@RULES.rule("k", "k_at_most_cd", "centralizers are subgroups, so k(π) ≤ cd(π)",
            applies=lambda q: q.subject.variant is not Variant.DIRECT_PRODUCT,
            premises=lambda q: {"cd": cd(q.subject)})
def _k_at_most_cd(q, p):
    return p["cd"].upper_only()


@RULES.rule("k", "k_torsion_free",
            "nontrivial torsion-free π: C(g) ⊇ ⟨g⟩ ≅ Z, so k(π) ≥ 1",
            applies=lambda q: q.subject.variant is not Variant.DIRECT_PRODUCT
            and q.subject.is_torsion_free and _known_nontrivial(q.subject))
def _k_torsion_free(q, p):
    return BoundInterval.at_least(1)


# ---------------------------------------------------------------- TC_r(π)

def _gf(q: Quantity) -> bool:
    return q.subject.is_geometrically_finite


@RULES.rule("tc", "tc_trivial", "TC_r of a point is 0", applies=_variant(Variant.TRIVIAL))
def _tc_trivial(q, p):
    return point(0)


@RULES.rule("tc", "tc_upper_cd",
            "TC_r(π) = secat(Δ ↪ π^r) ≤ cd(π^r) = r·cd(π)",
            applies=_gf, premises=lambda q: {"cd": cd(q.subject)})
def _tc_upper(q, p):
    return p["cd"].scale(q.r).upper_only()


@RULES.rule("tc", "tc_lower_centralizers",
            "TC_r(π) ≥ r·cd(π) − k(π) for geometrically finite π",
            applies=_gf, premises=lambda q: {"cd": cd(q.subject), "k": k(q.subject)})
def _tc_lower(q, p):
    return (p["cd"].scale(q.r) - p["k"]).lower_only()


@RULES.rule("tc", "tc_free_abelian",
            "π free abelian: Δ is normal with quotient π^{r−1}, so TC_r(π) = (r−1)·cd(π)",
            applies=_variant(Variant.FREE_ABELIAN), premises=lambda q: {"cd": cd(q.subject)})
def _tc_free_abelian(q, p):
    return p["cd"].scale(q.r - 1)


@RULES.rule("tc", "tc_hyperbolic",
            "TC_r(π) = r·cd(π) for torsion-free hyperbolic π not infinite cyclic",
            applies=lambda q: q.subject.nonelementary_hyperbolic,
            premises=lambda q: {"cd": cd(q.subject)})
def _tc_hyperbolic(q, p):
    return p["cd"].scale(q.r)


@RULES.rule("tc", "tc_amalgam_malnormal",
            "H malnormal in a factor, factors geometrically finite: "
            "TC_r(π_1 *_H π_2) ≥ r·cd(π_1 *_H π_2) − max{k(π_1), k(π_2)}",
            applies=lambda q: q.subject.variant is Variant.AMALGAM and q.subject.edge.malnormal
            and q.subject.left.is_geometrically_finite and q.subject.right.is_geometrically_finite,
            premises=lambda q: {"cd": cd(q.subject), "left": k(q.subject.left), "right": k(q.subject.right)})
def _tc_amalgam(q, p):
    return (p["cd"].scale(q.r) - p["left"].maximum(p["right"])).lower_only()


# ---------------------------------------------------------------- secat(H ↪ G), κ_{G,H}

def _not_whole(q: Quantity) -> bool:
    return q.subject.subgroup.relation is not Relation.WHOLE


def _ambient_gf(q: Quantity) -> bool:
    return _not_whole(q) and q.subject.ambient.is_geometrically_finite


def kappa(query: SubgroupQuery) -> Quantity:
    return Quantity("kappa", query)


@RULES.rule("secat", "secat_whole", "secat(G ↪ G) = 0: the identity has a global section",
            applies=lambda q: not _not_whole(q))
def _secat_whole(q, p):
    return point(0)


@RULES.rule("secat", "secat_upper_cd", "secat(H ↪ G) ≤ cd(G) for geometrically finite G",
            applies=_ambient_gf, premises=lambda q: {"cd": cd(q.subject.ambient)})
def _secat_upper(q, p):
    return p["cd"].upper_only()


@RULES.rule("secat", "secat_lower_kappa", "secat(H ↪ G) ≥ cd(G) − κ_{G,H}",
            applies=_ambient_gf, premises=lambda q: {"cd": cd(q.subject.ambient), "kappa": kappa(q.subject)})
def _secat_lower(q, p):
    return (p["cd"] - p["kappa"]).lower_only()


def _normal_with_quotient(q: Quantity) -> bool:
    sub = q.subject.subgroup
    return sub.relation is Relation.NORMAL and sub.quotient is not None


@RULES.rule("secat", "secat_normal_upper", "secat(N ↪ G) ≤ cd(G/N)",
            applies=_normal_with_quotient, premises=lambda q: {"cd": cd(q.subject.subgroup.quotient)})
def _secat_normal_upper(q, p):
    return p["cd"].upper_only()


@RULES.rule("secat", "secat_normal_top_degree",
            "π^* nonzero on H^{cd Q}(Q; A) for some A: secat(N ↪ G) ≥ cd(Q)",
            applies=lambda q: _normal_with_quotient(q) and q.subject.subgroup.top_degree_pullback_nonzero,
            premises=lambda q: {"cd": cd(q.subject.subgroup.quotient)})
def _secat_normal_top(q, p):
    return p["cd"].lower_only()


@RULES.rule("secat", "secat_normal_z_free",
            "H^{cd N}(N; Z[N]) free abelian: cd(G/N) = cd(G) − cd(N), so secat(N ↪ G) = cd(G) − cd(N)",
            applies=lambda q: _ambient_gf(q) and q.subject.subgroup.relation is Relation.NORMAL
            and q.subject.subgroup.top_cohomology_z_free and q.subject.subgroup.group is not None,
            premises=lambda q: {"G": cd(q.subject.ambient), "N": cd(q.subject.subgroup.group)})
def _secat_normal_z_free(q, p):
    return p["G"] - p["N"]


@RULES.rule("secat", "secat_diagonal",
            "secat(Δ_r ↪ π^r) = TC_r(π)",
            applies=lambda q: q.subject.subgroup.relation is Relation.DIAGONAL,
            premises=lambda q: {"tc": tc(q.subject.subgroup.diagonal_of, q.subject.subgroup.diagonal_power)})
def _secat_diagonal(q, p):
    return p["tc"]


def _kappa_anchor(q: Quantity) -> str:
    return f"supplied: {q.subject.subgroup.kappa_provenance}"


@RULES.rule("kappa", "kappa_metadata", _kappa_anchor, applies=lambda q: q.subject.subgroup.kappa is not None)
def _kappa_metadata(q, p):
    return BoundInterval(*q.subject.subgroup.kappa)


@RULES.rule("kappa", "kappa_malnormal",
            "H trivial or malnormal: every H ∩ xHx^{-1}, x ∉ H, is trivial, so κ = 0",
            applies=lambda q: q.subject.subgroup.relation is Relation.TRIVIAL or q.subject.subgroup.malnormal)
def _kappa_malnormal(q, p):
    return point(0)


@RULES.rule("kappa", "kappa_not_self_normalizing",
            "some x ∈ N_G(H) ∖ H gives H ∩ xHx^{-1} = H, so κ = cd(H)",
            applies=lambda q: q.subject.subgroup.group is not None and (
                q.subject.subgroup.relation is Relation.NORMAL or q.subject.subgroup.self_normalizing is False),
            premises=lambda q: {"cd": cd(q.subject.subgroup.group)})
def _kappa_not_self_normalizing(q, p):
    return p["cd"]


@RULES.rule("kappa", "kappa_at_most_cd", "each H ∩ xHx^{-1} is a subgroup of H, so κ ≤ cd(H)",
            applies=lambda q: q.subject.subgroup.group is not None,
            premises=lambda q: {"cd": cd(q.subject.subgroup.group)})
def _kappa_at_most(q, p):
    return p["cd"].upper_only()


@RULES.rule("kappa", "kappa_diagonal",
            "Δ ∩ xΔx^{-1} ≅ ⋂_{i≠j} C(x_j^{-1} x_i), and x = (g, 1, ..., 1) realises C(g): κ = k(π)",
            applies=lambda q: q.subject.subgroup.relation is Relation.DIAGONAL,
            premises=lambda q: {"k": k(q.subject.subgroup.diagonal_of)})
def _kappa_diagonal(q, p):
    return p["k"]


# ---------------------------------------------------------------- TC[ρ: G ↠ Q]

def _epi_gf(q: Quantity) -> bool:
    e: EpimorphismDescriptor = q.subject
    return e.source.is_geometrically_finite and e.target.is_geometrically_finite


@RULES.rule("tc_epi", "epi_injective", "ker ρ = 1: G ×_Q G = Δ_G, so TC[ρ] = 0",
            applies=lambda q: q.subject.kernel.is_trivial)
def _epi_injective(q, p):
    return point(0)


@RULES.rule("tc_epi", "epi_upper_fibered", "TC[ρ] = secat(Δ_G ↪ G ×_Q G) ≤ cd(G ×_Q G)",
            applies=_epi_gf, premises=lambda q: {"cd": Quantity("cd_fibered", q.subject)})
def _epi_upper(q, p):
    return p["cd"].upper_only()


@RULES.rule("tc_epi", "epi_lower_centralizers", "TC[ρ] ≥ cd(G ×_Q G) − k(ρ)",
            applies=lambda q: _epi_gf(q) and not q.subject.kernel.is_trivial,
            premises=lambda q: {"cd": Quantity("cd_fibered", q.subject), "k": Quantity("k_rho", q.subject)})
def _epi_lower(q, p):
    return (p["cd"] - p["k"]).lower_only()


@RULES.rule("tc_epi", "epi_upper_semidirect",
            "G ×_Q G ≅ ker ρ ⋊ G, so TC[ρ] ≤ cd(G) + cd(ker ρ)",
            applies=_epi_gf, premises=lambda q: {"G": cd(q.subject.source), "K": cd(q.subject.kernel)})
def _epi_upper_semidirect(q, p):
    return (p["G"] + p["K"]).upper_only()


@RULES.rule("tc_epi", "epi_central_kernel", "central kernel: TC[ρ] = cd(ker ρ)",
            applies=lambda q: _epi_gf(q) and q.subject.central_kernel,
            premises=lambda q: {"K": cd(q.subject.kernel)})
def _epi_central(q, p):
    return p["K"]


@RULES.rule("tc_epi", "epi_central_phi", "central kernel: cd(φ: G ×_Q G → ker ρ) ≤ TC[ρ]",
            applies=lambda q: _epi_gf(q) and q.subject.central_kernel and q.subject.cd_phi is not None)
def _epi_central_phi(q, p):
    return BoundInterval.at_least(q.subject.cd_phi)


@RULES.rule("tc_epi", "epi_trivial_target", "Q = 1: TC[ρ] = secat(Δ_G ↪ G × G) = TC_2(G)",
            applies=lambda q: q.subject.target.is_trivial,
            premises=lambda q: {"tc": tc(q.subject.source, 2)})
def _epi_trivial_target(q, p):
    return p["tc"]


@RULES.rule("cd_fibered", "fibered_bounds",
            "ker ρ and Δ_G ≅ G are subgroups of G ×_Q G ≅ ker ρ ⋊ G: "
            "max{cd G, cd ker ρ} ≤ cd(G ×_Q G) ≤ cd G + cd ker ρ",
            premises=lambda q: {"G": cd(q.subject.source), "K": cd(q.subject.kernel)})
def _fibered_bounds(q, p):
    return BoundInterval(p["G"].maximum(p["K"]).lower, (p["G"] + p["K"]).upper)


@RULES.rule("cd_fibered", "fibered_z_free",
            "H^n(ker ρ; Z[ker ρ]) Z-free, n = cd(ker ρ): cd(G ×_Q G) = cd G + cd ker ρ = 2cd(G) − cd(Q)",
            applies=lambda q: _epi_gf(q) and q.subject.kernel_top_cohomology_z_free,
            premises=lambda q: {"G": cd(q.subject.source), "Q": cd(q.subject.target)})
def _fibered_z_free(q, p):
    return p["G"].scale(2) - p["Q"]


@RULES.rule("cd_fibered", "fibered_trivial_target", "Q = 1: G ×_Q G = G × G, cd = 2cd(G)",
            applies=lambda q: q.subject.target.is_trivial and q.subject.source.is_geometrically_finite,
            premises=lambda q: {"G": cd(q.subject.source)})
def _fibered_trivial_target(q, p):
    return p["G"].scale(2)


@RULES.rule("k_rho", "k_rho_metadata", "supplied: user metadata",
            applies=lambda q: q.subject.k_rho is not None)
def _k_rho_metadata(q, p):
    return BoundInterval(*q.subject.k_rho)


@RULES.rule("k_rho", "k_rho_trivial_kernel", "k(ρ) = 0 when ker ρ = 1 (empty maximum)",
            applies=lambda q: q.subject.kernel.is_trivial)
def _k_rho_trivial(q, p):
    return point(0)


@RULES.rule("k_rho", "k_rho_at_most_k", "k(ρ) ranges over part of G ∖ 1, so k(ρ) ≤ k(G)",
            premises=lambda q: {"k": k(q.subject.source)})
def _k_rho_upper(q, p):
    return p["k"].upper_only()


@RULES.rule("k_rho", "k_rho_trivial_target", "Q = 1: ker ρ = G, so k(ρ) = k(G)",
            applies=lambda q: q.subject.target.is_trivial,
            premises=lambda q: {"k": k(q.subject.source)})
def _k_rho_all(q, p):
    return p["k"]


@RULES.rule("k_rho", "k_rho_central", "central kernel: C(g) = G for g ∈ ker ρ, so k(ρ) = cd(G)",
            applies=lambda q: q.subject.central_kernel and _known_nontrivial(q.subject.kernel),
            premises=lambda q: {"G": cd(q.subject.source)})
def _k_rho_central(q, p):
    return p["G"]


@RULES.rule("k_rho", "k_rho_torsion_free", "torsion-free G, ker ρ ≠ 1: C(g) ⊇ ⟨g⟩ ≅ Z, so k(ρ) ≥ 1",
            applies=lambda q: q.subject.source.is_torsion_free and _known_nontrivial(q.subject.kernel))
def _k_rho_torsion_free(q, p):
    return BoundInterval.at_least(1)


# ---------------------------------------------------------------- TC_r(X)

def _space(q: Quantity) -> SpaceQuery:
    return q.subject


@RULES.rule("tc_space", "space_upper_dimension", "TC_r(X) ≤ dim(X^r) = r·n")
def _space_upper(q, p):
    s = _space(q)
    return BoundInterval.at_most(s.r * s.hypotheses.dimension)


@RULES.rule("tc_space", "space_lower_connectivity",
            "universal cover (k−1)-connected and cd(π) ≤ k, π geometrically finite: "
            "TC_r(X) ≥ r·cd(π) − k(π)",
            applies=lambda q: _space(q).group.is_geometrically_finite,
            premises=lambda q: {"cd": cd(_space(q).group), "k": k(_space(q).group)})
def _space_lower(q, p):
    s = _space(q)
    bound = p["cd"].upper
    if bound is None or bound > s.hypotheses.cover_connectivity + 1:
        return None
    return (p["cd"].scale(s.r) - p["k"]).lower_only()


@RULES.rule("tc_space", "space_canonical_height", "TC_r(X) ≥ height of the canonical class v_r",
            applies=lambda q: _space(q).hypotheses.canonical_height is not None)
def _space_height(q, p):
    return BoundInterval.at_least(_space(q).hypotheses.canonical_height)


@RULES.rule("tc_space", "space_maximality", "TC_r(X) = r·n if and only if v_r^{r·n} ≠ 0",
            applies=lambda q: _space(q).hypotheses.top_power_nonzero is not None)
def _space_maximality(q, p):
    s = _space(q)
    top = s.r * s.hypotheses.dimension
    if s.hypotheses.top_power_nonzero:
        return point(top)
    return BoundInterval.at_most(top - 1)


@RULES.rule("tc_space", "space_abelian_not_maximal",
            "π_1(X) free abelian of rank ≤ n = dim X: TC_r(X) < r·n",
            applies=lambda q: _space(q).hypotheses.dimension >= 1 and (
                _space(q).group.is_trivial or (
                    _space(q).group.variant is Variant.FREE_ABELIAN
                    and _space(q).group.parameter <= _space(q).hypotheses.dimension)))
def _space_abelian(q, p):
    s = _space(q)
    return BoundInterval.at_most(s.r * s.hypotheses.dimension - 1)


@RULES.rule("tc_space", "space_aspherical", "X aspherical: TC_r(X) = TC_r(π_1 X)",
            applies=lambda q: _space(q).hypotheses.aspherical,
            premises=lambda q: {"tc": tc(_space(q).group, _space(q).r)})
def _space_aspherical(q, p):
    return p["tc"]
