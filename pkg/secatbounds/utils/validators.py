# secatbounds/utils/validators.py
"""
Input schemas. Every file the CLI reads is validated here; pydantic's error
location becomes the ``field`` of the resulting ``InputError``.
"""
from __future__ import annotations

import json
import tomllib
from pathlib import Path
from typing import Annotated, Any, Literal, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, RootModel, ValidationError, field_validator

from secatbounds.bounds.descriptors import (
    AmalgamEdge,
    EpimorphismDescriptor,
    GroupDescriptor,
    Relation,
    SpaceHypotheses,
    SubgroupDescriptor,
    Variant,
)
from secatbounds.errors import InputError

SCHEMA_VERSION = 1


def _location(loc) -> str:
    return ".".join(str(part) for part in loc) or "<root>"


def input_error(exc: ValidationError, prefix: str = "") -> InputError:
    first = exc.errors()[0]
    where = _location(first["loc"])
    if prefix:
        where = f"{prefix}.{where}" if where != "<root>" else prefix
    return InputError(first["msg"], field=where)


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


# ---------------------------------------------------------------- finite groups

class TableGroupSpec(_Strict):
    kind: Literal["table"]
    table: list[list[int]]
    labels: Optional[list[str]] = None
    name: Optional[str] = None

    @field_validator("table")
    @classmethod
    def _square(cls, table):
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise ValueError("table must be a non-empty square matrix")
        return table


class PermGroupSpec(_Strict):
    kind: Literal["perm"]
    degree: int = Field(gt=0)
    generators: list[list[list[int]]]  # each generator in 1-based cycle notation
    name: Optional[str] = None


class NamedGroupSpec(_Strict):
    kind: Literal["named"]
    name: str


class GroupSpec(RootModel):
    root: Annotated[Union[TableGroupSpec, PermGroupSpec, NamedGroupSpec], Field(discriminator="kind")]


def parse_group_spec(raw: Any, prefix: str = "") -> GroupSpec:
    try:
        return GroupSpec.model_validate(raw)
    except ValidationError as exc:
        raise input_error(exc, prefix) from exc


ElementRef = Union[int, str]


class SubgroupSpec(_Strict):
    """A subgroup by generators or by its full element list (indices or labels)."""
    generators: Optional[list[ElementRef]] = None
    elements: Optional[list[ElementRef]] = None

    @field_validator("elements")
    @classmethod
    def _nonempty(cls, v):
        if v is not None and not v:
            raise ValueError("element list must not be empty")
        return v


class FiniteQuery(_Strict):
    version: int = SCHEMA_VERSION
    group: GroupSpec
    subgroup: Optional[Union[Literal["trivial", "whole"], SubgroupSpec]] = None
    coefficients: Optional[Literal["trivial", "regular", "ideal"]] = None
    degree: Optional[int] = Field(default=None, ge=0)
    max_n: Optional[int] = Field(default=None, ge=1)
    window: Optional[int] = Field(default=None, ge=0)
    r: Optional[int] = Field(default=None, ge=2)


# ---------------------------------------------------------------- descriptors

class RangeBounds(_Strict):
    """Table form of a range; an omitted end is unbounded (TOML has no null)."""
    lower: Optional[int] = None
    upper: Optional[int] = None


RangeSpec = Union[int, tuple[Optional[int], Optional[int]], RangeBounds]


def _range(v: Optional[RangeSpec]):
    if v is None:
        return None
    if isinstance(v, int):
        return (v, v)
    if isinstance(v, RangeBounds):
        return (v.lower, v.upper)
    return (v[0], v[1])


class EdgeModel(_Strict):
    malnormal_in_left: bool = False
    malnormal_in_right: bool = False
    finite_index_in_left: bool = False
    finite_index_in_right: bool = False
    factors_fp_infinity: bool = False


class DescriptorModel(_Strict):
    variant: Variant
    n: Optional[int] = None
    factors: list["DescriptorModel"] = Field(default_factory=list)
    edge: Optional[EdgeModel] = None
    cd: Optional[RangeSpec] = None
    k: Optional[RangeSpec] = None
    geometrically_finite: Optional[bool] = None
    trivial_center: Optional[bool] = None
    torsion_free: Optional[bool] = None
    abelian: Optional[bool] = None
    provenance: str = "user metadata"
    name: Optional[str] = None

    def to_descriptor(self, where: str = "group") -> GroupDescriptor:
        factors = tuple(f.to_descriptor(f"{where}.factors.{i}") for i, f in enumerate(self.factors))
        edge = AmalgamEdge(**self.edge.model_dump()) if self.edge is not None else None
        try:
            return GroupDescriptor(
                variant=self.variant, parameter=self.n, factors=factors, edge=edge,
                cd=_range(self.cd), k=_range(self.k),
                geometrically_finite=self.geometrically_finite, trivial_center=self.trivial_center,
                torsion_free=self.torsion_free, abelian=self.abelian,
                provenance=self.provenance, name=self.name,
            )
        except InputError as exc:
            raise InputError(str(exc.args[0]), field=f"{where}.{exc.field}") from exc


DescriptorModel.model_rebuild()


class SubgroupModel(_Strict):
    relation: Relation = Relation.GENERAL
    group: Optional[DescriptorModel] = None
    quotient: Optional[DescriptorModel] = None
    kappa: Optional[RangeSpec] = None
    kappa_provenance: str = "user metadata"
    malnormal: bool = False
    self_normalizing: Optional[bool] = None
    top_degree_pullback_nonzero: bool = False
    top_cohomology_z_free: bool = False

    def to_descriptor(self, group: Optional[GroupDescriptor], r: Optional[int]) -> SubgroupDescriptor:
        """For the diagonal relation ``group`` is π (the ambient group is π^r)."""
        where = "subgroup"
        try:
            if self.relation is Relation.DIAGONAL:
                pi = self.group.to_descriptor(f"{where}.group") if self.group else group
                return SubgroupDescriptor(Relation.DIAGONAL, group=pi, diagonal_of=pi, diagonal_power=r,
                                          kappa=_range(self.kappa), kappa_provenance=self.kappa_provenance)
            return SubgroupDescriptor(
                relation=self.relation,
                group=self.group.to_descriptor(f"{where}.group") if self.group else None,
                quotient=self.quotient.to_descriptor(f"{where}.quotient") if self.quotient else None,
                kappa=_range(self.kappa), kappa_provenance=self.kappa_provenance,
                malnormal=self.malnormal, self_normalizing=self.self_normalizing,
                top_degree_pullback_nonzero=self.top_degree_pullback_nonzero,
                top_cohomology_z_free=self.top_cohomology_z_free,
            )
        except InputError as exc:
            if exc.field and exc.field.startswith(where):
                raise
            raise InputError(str(exc.args[0]), field=f"{where}.{exc.field}") from exc


class EpimorphismModel(_Strict):
    source: DescriptorModel
    target: DescriptorModel
    kernel: DescriptorModel
    central_kernel: bool = False
    kernel_top_cohomology_z_free: bool = False
    cd_phi: Optional[int] = None
    k_rho: Optional[RangeSpec] = None

    def to_descriptor(self) -> EpimorphismDescriptor:
        where = "epimorphism"
        source = self.source.to_descriptor(f"{where}.source")
        target = self.target.to_descriptor(f"{where}.target")
        kernel = self.kernel.to_descriptor(f"{where}.kernel")
        try:
            return EpimorphismDescriptor(source, target, kernel, self.central_kernel,
                                         self.kernel_top_cohomology_z_free, self.cd_phi, _range(self.k_rho))
        except InputError as exc:
            raise InputError(str(exc.args[0]), field=f"{where}.{exc.field}") from exc


class SpaceModel(_Strict):
    dimension: int = Field(ge=0)
    cover_connectivity: int = Field(default=0, ge=0)
    aspherical: bool = False
    canonical_height: Optional[int] = Field(default=None, ge=0)
    top_power_nonzero: Optional[bool] = None

    def to_hypotheses(self) -> SpaceHypotheses:
        return SpaceHypotheses(**self.model_dump())


class BoundQuery(_Strict):
    version: int = SCHEMA_VERSION
    query: Literal["cd", "k", "tc", "secat", "tc_epi", "tc_space"]
    group: Optional[DescriptorModel] = None
    r: Optional[int] = Field(default=None, ge=2)
    subgroup: Optional[SubgroupModel] = None
    epimorphism: Optional[EpimorphismModel] = None
    space: Optional[SpaceModel] = None

    def require_group(self) -> GroupDescriptor:
        if self.group is None:
            raise InputError(f"query {self.query!r} needs a group descriptor", field="group")
        return self.group.to_descriptor()


def parse_model(model: type[BaseModel], raw: Any):
    try:
        return model.model_validate(raw)
    except ValidationError as exc:
        raise input_error(exc) from exc


# ---------------------------------------------------------------- files

def load_document(path: str | Path) -> dict:
    """Read a JSON, TOML or YAML document, chosen by file extension."""
    p = Path(path)
    if not p.exists():
        raise InputError(f"input file not found: {p}", field="--input")
    suffix = p.suffix.lower()
    try:
        if suffix == ".json":
            with open(p, "r") as f:
                data = json.load(f)
        elif suffix == ".toml":
            with open(p, "rb") as f:
                data = tomllib.load(f)
        elif suffix in (".yaml", ".yml"):
            with open(p, "r") as f:
                data = yaml.safe_load(f)
        else:
            raise InputError(f"unsupported input format {suffix or '(none)'}", field="--input")
    except (json.JSONDecodeError, tomllib.TOMLDecodeError, yaml.YAMLError) as exc:
        raise InputError(f"cannot parse {p.name}: {exc}", field="--input") from exc
    if not isinstance(data, dict):
        raise InputError("top level of the input must be a mapping", field="<root>")
    return data
