# secatbounds/bounds/descriptors.py
"""
Descriptors of (possibly infinite) groups, subgroup inclusions, epimorphisms
and spaces, as consumed by the rule engine.

A descriptor names a family (free abelian of rank n, surface of genus g, ...)
plus optional user metadata. Metadata ranges are ``(lower, upper)`` with
``None`` for an unbounded end and are intersected with what the rules derive.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from secatbounds.errors import InputError

Range = tuple[Optional[int], Optional[int]]


class Variant(str, Enum):
    TRIVIAL = "trivial"
    FREE_ABELIAN = "free_abelian"
    FREE = "free"
    SURFACE = "surface"
    HYPERBOLIC = "hyperbolic"
    DIRECT_PRODUCT = "direct_product"
    AMALGAM = "amalgam"
    GENERIC = "generic"


_INTRINSIC = {Variant.TRIVIAL, Variant.FREE_ABELIAN, Variant.FREE, Variant.SURFACE, Variant.HYPERBOLIC}


def _check_range(rng: Optional[Range], where: str) -> None:
    if rng is None:
        return
    lo, hi = rng
    if lo is not None and lo < 0:
        raise InputError("lower bound must be non-negative", field=where)
    if lo is not None and hi is not None and lo > hi:
        raise InputError(f"empty range [{lo}, {hi}]", field=where)


@dataclass(frozen=True)
class AmalgamEdge:
    """Flags on the edge group H of π_1 *_H π_2."""
    malnormal_in_left: bool = False
    malnormal_in_right: bool = False
    finite_index_in_left: bool = False
    finite_index_in_right: bool = False
    factors_fp_infinity: bool = False  # both factors of type FP_∞

    @property
    def malnormal(self) -> bool:
        return self.malnormal_in_left or self.malnormal_in_right

    @property
    def finite_index(self) -> bool:
        return self.finite_index_in_left and self.finite_index_in_right


@dataclass(frozen=True)
class GroupDescriptor:
    variant: Variant
    parameter: Optional[int] = None  # rank, genus or cd, depending on the variant
    factors: tuple["GroupDescriptor", ...] = ()
    edge: Optional[AmalgamEdge] = None
    cd: Optional[Range] = None
    k: Optional[Range] = None
    geometrically_finite: Optional[bool] = None
    trivial_center: Optional[bool] = None
    torsion_free: Optional[bool] = None
    abelian: Optional[bool] = None
    provenance: str = "user metadata"
    name: Optional[str] = None

    def __post_init__(self):
        v = self.variant
        p = self.parameter
        if v is Variant.FREE_ABELIAN and (p is None or p < 1):
            raise InputError("free abelian rank must be at least 1", field="n")
        if v is Variant.FREE and (p is None or p < 2):
            raise InputError("free group rank must be at least 2", field="n")
        if v is Variant.SURFACE and (p is None or p < 2):
            raise InputError("surface genus must be at least 2", field="n")
        if v is Variant.HYPERBOLIC and (p is None or p < 1):
            raise InputError("hyperbolic cd must be at least 1", field="n")
        if v is Variant.DIRECT_PRODUCT and len(self.factors) < 2:
            raise InputError("direct product needs at least two factors", field="factors")
        if v is Variant.AMALGAM:
            if len(self.factors) != 2:
                raise InputError("amalgam needs exactly two factors", field="factors")
            if self.edge is None:
                object.__setattr__(self, "edge", AmalgamEdge())
        elif self.edge is not None:
            raise InputError("edge flags only apply to amalgams", field="edge")
        _check_range(self.cd, "cd")
        _check_range(self.k, "k")
        if v is Variant.TRIVIAL and self.cd is not None and self.cd[0] not in (None, 0):
            raise InputError("the trivial group has cd 0", field="cd")
        if v in (Variant.FREE, Variant.SURFACE, Variant.HYPERBOLIC, Variant.FREE_ABELIAN):
            if self.geometrically_finite is False:
                raise InputError(f"{v.value} groups are geometrically finite", field="geometrically_finite")
            if self.torsion_free is False:
                raise InputError(f"{v.value} groups are torsion-free", field="torsion_free")
        if v in (Variant.FREE, Variant.SURFACE) and self.abelian:
            raise InputError(f"{v.value} groups are not abelian", field="abelian")

    # constructors
    @classmethod
    def trivial(cls, **meta) -> "GroupDescriptor":
        return cls(Variant.TRIVIAL, **meta)

    @classmethod
    def free_abelian(cls, n: int, **meta) -> "GroupDescriptor":
        return cls(Variant.FREE_ABELIAN, n, **meta)

    @classmethod
    def free(cls, rank: int, **meta) -> "GroupDescriptor":
        return cls(Variant.FREE, rank, **meta)

    @classmethod
    def surface(cls, genus: int, **meta) -> "GroupDescriptor":
        return cls(Variant.SURFACE, genus, **meta)

    @classmethod
    def hyperbolic(cls, cd: int, **meta) -> "GroupDescriptor":
        return cls(Variant.HYPERBOLIC, cd, **meta)

    @classmethod
    def product(cls, *factors: "GroupDescriptor", **meta) -> "GroupDescriptor":
        return cls(Variant.DIRECT_PRODUCT, factors=tuple(factors), **meta)

    @classmethod
    def amalgam(cls, left: "GroupDescriptor", right: "GroupDescriptor",
                edge: Optional[AmalgamEdge] = None, **meta) -> "GroupDescriptor":
        return cls(Variant.AMALGAM, factors=(left, right), edge=edge or AmalgamEdge(), **meta)

    @classmethod
    def generic(cls, name: str = "G", **meta) -> "GroupDescriptor":
        return cls(Variant.GENERIC, name=name, **meta)

    def power(self, r: int) -> "GroupDescriptor":
        """π^r as a direct product of r copies (π itself for r = 1)."""
        if r == 1:
            return self
        return GroupDescriptor.product(*([self] * r))

    @property
    def left(self) -> "GroupDescriptor":
        return self.factors[0]

    @property
    def right(self) -> "GroupDescriptor":
        return self.factors[1]

    @property
    def is_trivial(self) -> bool:
        return self.variant is Variant.TRIVIAL

    @property
    def is_intrinsic(self) -> bool:
        return self.variant in _INTRINSIC

    @property
    def is_geometrically_finite(self) -> bool:
        if self.geometrically_finite is not None:
            return self.geometrically_finite
        if self.variant in _INTRINSIC:
            return True
        if self.variant in (Variant.DIRECT_PRODUCT, Variant.AMALGAM):
            return all(f.is_geometrically_finite for f in self.factors)
        return False

    @property
    def is_torsion_free(self) -> bool:
        if self.torsion_free is not None:
            return self.torsion_free
        if self.variant in _INTRINSIC:
            return True
        if self.variant in (Variant.DIRECT_PRODUCT, Variant.AMALGAM):
            return all(f.is_torsion_free for f in self.factors)
        return False

    @property
    def is_abelian(self) -> Optional[bool]:
        if self.abelian is not None:
            return self.abelian
        if self.variant in (Variant.TRIVIAL, Variant.FREE_ABELIAN):
            return True
        if self.variant in (Variant.FREE, Variant.SURFACE):
            return False
        if self.variant is Variant.HYPERBOLIC and (self.parameter or 0) >= 2:
            return False
        if self.variant is Variant.DIRECT_PRODUCT:
            flags = [f.is_abelian for f in self.factors]
            if all(flags):
                return True
            if any(flag is False for flag in flags):
                return False
        return None

    @property
    def nonelementary_hyperbolic(self) -> bool:
        """Torsion-free hyperbolic and not infinite cyclic."""
        return self.variant in (Variant.FREE, Variant.SURFACE) or (
            self.variant is Variant.HYPERBOLIC and (self.parameter or 0) >= 2)

    def label(self) -> str:
        v = self.variant
        if self.name and v is Variant.GENERIC:
            return self.name
        if v is Variant.TRIVIAL:
            return "1"
        if v is Variant.FREE_ABELIAN:
            return "Z" if self.parameter == 1 else f"Z^{self.parameter}"
        if v is Variant.FREE:
            return f"F_{self.parameter}"
        if v is Variant.SURFACE:
            return f"Σ_{self.parameter}"
        if v is Variant.HYPERBOLIC:
            return self.name or f"Hyp(cd={self.parameter})"
        if v is Variant.DIRECT_PRODUCT:
            return " × ".join(_paren(f) for f in self.factors)
        if v is Variant.AMALGAM:
            return f"{_paren(self.left)} *_H {_paren(self.right)}"
        return "G"

    def to_dict(self) -> dict:
        out: dict = {"variant": self.variant.value}
        if self.parameter is not None:
            out["n"] = self.parameter
        if self.factors:
            out["factors"] = [f.to_dict() for f in self.factors]
        if self.edge is not None:
            out["edge"] = {
                "malnormal_in_left": self.edge.malnormal_in_left,
                "malnormal_in_right": self.edge.malnormal_in_right,
                "finite_index_in_left": self.edge.finite_index_in_left,
                "finite_index_in_right": self.edge.finite_index_in_right,
                "factors_fp_infinity": self.edge.factors_fp_infinity,
            }
        for key in ("cd", "k"):
            rng = getattr(self, key)
            if rng is not None:
                out[key] = list(rng)
        for key in ("geometrically_finite", "trivial_center", "torsion_free", "abelian", "name"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out

    def __str__(self) -> str:
        return self.label()


def _paren(d: GroupDescriptor) -> str:
    text = d.label()
    return f"({text})" if d.variant in (Variant.DIRECT_PRODUCT, Variant.AMALGAM) else text


class Relation(str, Enum):
    GENERAL = "general"
    TRIVIAL = "trivial"
    WHOLE = "whole"
    NORMAL = "normal"
    DIAGONAL = "diagonal"


@dataclass(frozen=True)
class SubgroupDescriptor:
    """H ≤ G for ``secat_subgroup``: how H sits in G plus κ metadata."""
    relation: Relation = Relation.GENERAL
    group: Optional[GroupDescriptor] = None  # H itself
    quotient: Optional[GroupDescriptor] = None  # G/H when H is normal
    kappa: Optional[Range] = None
    kappa_provenance: str = "user metadata"
    malnormal: bool = False
    self_normalizing: Optional[bool] = None
    top_degree_pullback_nonzero: bool = False  # π^*: H^{cd Q}(Q;A) → H^{cd Q}(G;π^*A) nonzero for some A
    top_cohomology_z_free: bool = False  # H^{cd N}(N; Z[N]) free abelian
    diagonal_of: Optional[GroupDescriptor] = None
    diagonal_power: Optional[int] = None

    def __post_init__(self):
        _check_range(self.kappa, "kappa")
        if self.relation is Relation.DIAGONAL:
            if self.diagonal_of is None or self.diagonal_power is None or self.diagonal_power < 2:
                raise InputError("diagonal subgroup needs a group and r ≥ 2", field="diagonal")
        if self.relation is Relation.NORMAL and self.self_normalizing:
            raise InputError("a proper normal subgroup is not self-normalizing", field="self_normalizing")
        if self.relation is Relation.TRIVIAL and self.group is not None and not self.group.is_trivial:
            raise InputError("relation 'trivial' with a nontrivial subgroup descriptor", field="group")

    @classmethod
    def diagonal(cls, pi: GroupDescriptor, r: int) -> "SubgroupDescriptor":
        return cls(Relation.DIAGONAL, group=pi, diagonal_of=pi, diagonal_power=r)

    @property
    def subgroup_label(self) -> str:
        if self.relation is Relation.DIAGONAL:
            return f"Δ_{self.diagonal_power}({self.diagonal_of.label()})"
        if self.relation is Relation.TRIVIAL:
            return "1"
        if self.relation is Relation.WHOLE:
            return "G"
        return self.group.label() if self.group is not None else "H"


@dataclass(frozen=True)
class SubgroupQuery:
    ambient: GroupDescriptor
    subgroup: SubgroupDescriptor

    def label(self) -> str:
        return f"{self.subgroup.subgroup_label} ↪ {self.ambient.label()}"

    @classmethod
    def diagonal(cls, pi: GroupDescriptor, r: int) -> "SubgroupQuery":
        return cls(pi.power(r), SubgroupDescriptor.diagonal(pi, r))


@dataclass(frozen=True)
class EpimorphismDescriptor:
    """ρ: G ↠ Q with kernel K."""
    source: GroupDescriptor
    target: GroupDescriptor
    kernel: GroupDescriptor
    central_kernel: bool = False
    kernel_top_cohomology_z_free: bool = False  # H^n(ker ρ; Z[ker ρ]) Z-free, n = cd(ker ρ)
    cd_phi: Optional[int] = None  # cd of φ: G ×_Q G → ker ρ, central case
    k_rho: Optional[Range] = None

    def __post_init__(self):
        if self.central_kernel and self.kernel.is_abelian is False:
            raise InputError("a central kernel must be abelian", field="central_kernel")
        if self.cd_phi is not None and self.cd_phi < 0:
            raise InputError("cd_phi must be non-negative", field="cd_phi")
        if self.cd_phi is not None and not self.central_kernel:
            raise InputError("cd_phi is only meaningful for a central kernel", field="cd_phi")
        _check_range(self.k_rho, "k_rho")
        if self.kernel.is_trivial and self.target.is_trivial and not self.source.is_trivial:
            raise InputError("trivial kernel and trivial target force a trivial source", field="kernel")

    def label(self) -> str:
        return f"ρ: {self.source.label()} ↠ {self.target.label()}"

    @property
    def fibered_product(self) -> str:
        return f"{_paren(self.source)} ×_Q {_paren(self.source)}"


@dataclass(frozen=True)
class SpaceHypotheses:
    """A connected n-dimensional CW complex X with π_1(X) described separately."""
    dimension: int
    cover_connectivity: int = 0  # universal cover is c-connected; 0 means only path-connected
    aspherical: bool = False
    canonical_height: Optional[int] = None  # height of v_r, when known
    top_power_nonzero: Optional[bool] = None  # v_r^{r·n} ≠ 0

    def __post_init__(self):
        if self.dimension < 0:
            raise InputError("dimension must be non-negative", field="dimension")
        if self.cover_connectivity < 0:
            raise InputError("connectivity must be non-negative", field="connectivity")
        if self.canonical_height is not None and self.canonical_height < 0:
            raise InputError("height must be non-negative", field="canonical_height")


@dataclass(frozen=True)
class SpaceQuery:
    group: GroupDescriptor
    r: int
    hypotheses: SpaceHypotheses

    def label(self) -> str:
        return f"TC_{self.r}(X), π_1(X) = {self.group.label()}, dim X = {self.hypotheses.dimension}"
