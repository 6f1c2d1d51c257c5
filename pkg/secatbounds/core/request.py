# secatbounds/core/request.py
"""
One CLI invocation: the validated request and its dispatch to the engines.

Reports are plain dicts; ``main.py`` renders them and maps exceptions to exit
codes.
"""
import logging
from dataclasses import dataclass, fields, replace
from typing import Optional

from secatbounds.bounds import Relation, bound_report
from secatbounds.cohomology import cohomology, height
from secatbounds.config import Settings, load_settings, set_settings
from secatbounds.core.verify import Verifier, verify_report
from secatbounds.errors import InputError
from secatbounds.groups.finite_group import FiniteGroup, Subgroup, make_group
from secatbounds.modules import GModule, group_ring, ideal_I, trivial_module
from secatbounds.spectral import (
    ExactCouple,
    derived_pages,
    dp_lower_bound,
    exactness_checks,
    kappa_finite,
    membership_chain_check,
    restriction_kernel_check,
)
from secatbounds.utils.validators import (
    SCHEMA_VERSION,
    BoundQuery,
    FiniteQuery,
    SubgroupSpec,
    load_document,
    parse_model,
)

logger = logging.getLogger(__name__)

SUBCOMMANDS = ("bound", "cohomology", "height", "spectral", "verify")
COEFFICIENTS = ("trivial", "regular", "ideal")

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2


@dataclass(frozen=True)
class Request:
    subcommand: str
    input: Optional[str] = None
    r: Optional[int] = None
    degree: Optional[int] = None
    max_n: Optional[int] = None
    window: Optional[int] = None
    coefficients: Optional[str] = None
    fmt: str = "json"
    config: Optional[str] = None
    max_degree: Optional[int] = None
    max_rank: Optional[int] = None
    max_order: Optional[int] = None

    def validate(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise InputError(f"unknown subcommand {self.subcommand!r}", field="subcommand")
        if self.input is None and self.subcommand != "verify":
            raise InputError(f"{self.subcommand} needs an input file", field="--input")
        if self.coefficients is not None and self.coefficients not in COEFFICIENTS:
            raise InputError(f"coefficients must be one of {', '.join(COEFFICIENTS)}", field="--coefficients")
        if self.fmt not in ("json", "text"):
            raise InputError("format must be json or text", field="--format")
        if self.r is not None and self.r < 2:
            raise InputError("r must be at least 2", field="--r")
        for name in ("degree", "max_n", "window"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise InputError(f"{name} must be non-negative", field=f"--{name.replace('_', '-')}")
        for name in ("max_degree", "max_rank", "max_order"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise InputError("caps must be positive", field=f"--{name.replace('_', '-')}")

    def settings(self) -> Settings:
        """config.yaml (or --config) with the cap flags applied on top."""
        settings = load_settings(self.config)
        overrides = {name: getattr(self, name) for name in ("max_degree", "max_rank", "max_order")
                     if getattr(self, name) is not None}
        if overrides:
            settings = replace(settings, caps=replace(settings.caps, **overrides))
        return settings


# ---------------------------------------------------------------- finite inputs

def _element(G: FiniteGroup, ref, where: str) -> int:
    if isinstance(ref, int):
        if not 0 <= ref < G.order:
            raise InputError(f"element index {ref} out of range 0..{G.order - 1}", field=where)
        return ref
    for g in G.elements:
        if G.label(g) == ref:
            return g
    raise InputError(f"no element labelled {ref!r}", field=where)


def resolve_subgroup(G: FiniteGroup, spec) -> Subgroup:
    """``trivial``, ``whole``, or a SubgroupSpec by generators or element list."""
    if spec is None or spec == "trivial":
        return Subgroup.trivial(G)
    if spec == "whole":
        return Subgroup.whole(G)
    if not isinstance(spec, SubgroupSpec):
        raise InputError("subgroup must be trivial, whole or a generator/element list", field="subgroup")
    if spec.elements is not None:
        elems = [_element(G, ref, f"subgroup.elements.{i}") for i, ref in enumerate(spec.elements)]
        return Subgroup.from_elements(G, elems)
    gens = [_element(G, ref, f"subgroup.generators.{i}") for i, ref in enumerate(spec.generators or [])]
    return Subgroup.generated_by(G, gens)


def coefficient_module(G: FiniteGroup, H: Subgroup, choice: str) -> GModule:
    if choice == "trivial":
        return trivial_module(G)
    if choice == "regular":
        return group_ring(G)
    if H.is_whole:
        raise InputError("ideal coefficients need a proper subgroup", field="subgroup")
    return ideal_I(G, H).module


def _pick(flag, stored, name: str, default=None):
    value = flag if flag is not None else stored
    if value is None:
        if default is None:
            raise InputError(f"missing {name}", field=name)
        return default
    return value


def _group_block(G: FiniteGroup, H: Optional[Subgroup] = None) -> dict:
    block = {"name": G.name, "order": G.order, "abelian": G.is_abelian}
    if H is not None:
        block["subgroup"] = {"order": H.order, "index": H.index,
                             "generators": [G.label(g) for g in H.generators]}
    return block


class Dispatcher:
    """Routes a validated request to the engine behind its subcommand."""

    def __init__(self, request: Request, settings: Settings):
        self.request = request
        self.settings = settings
        self.caps = settings.caps

    def _finite(self) -> tuple[FiniteQuery, FiniteGroup, Subgroup]:
        query = parse_model(FiniteQuery, load_document(self.request.input))
        _check_version(query.version)
        G = make_group(query.group, self.caps)
        H = resolve_subgroup(G, query.subgroup)
        return query, G, H

    def bound(self) -> dict:
        query = parse_model(BoundQuery, load_document(self.request.input))
        _check_version(query.version)
        r = self.request.r or query.r
        subgroup = epimorphism = space = None
        if query.query == "tc_epi":
            if query.epimorphism is None:
                raise InputError("tc_epi needs an epimorphism descriptor", field="epimorphism")
            return bound_report("tc_epi", epimorphism=query.epimorphism.to_descriptor()).to_dict()
        group = query.require_group()
        if query.query == "secat":
            if query.subgroup is None:
                raise InputError("secat needs a subgroup descriptor", field="subgroup")
            subgroup = query.subgroup.to_descriptor(group, r)
            if subgroup.relation is Relation.DIAGONAL:
                # the file names π; the ambient group is π^r
                group = subgroup.diagonal_of.power(subgroup.diagonal_power)
        elif query.query == "tc_space":
            if query.space is None:
                raise InputError("tc_space needs space hypotheses", field="space")
            space = query.space.to_hypotheses()
        return bound_report(query.query, group, r, subgroup, epimorphism, space).to_dict()

    def cohomology(self) -> dict:
        query, G, H = self._finite()
        n = _pick(self.request.degree, query.degree, "degree")
        choice = _pick(self.request.coefficients, query.coefficients, "coefficients", "trivial")
        A = coefficient_module(G, H, choice)
        H_n = cohomology(G, A, n, caps=self.caps)
        return {"group": _group_block(G, H if choice == "ideal" else None),
                "coefficients": choice, "cohomology": H_n.to_dict()}

    def height(self) -> dict:
        query, G, H = self._finite()
        max_n = _pick(self.request.max_n, query.max_n, "max_n")
        result = height(G, H, max_n, self.caps)
        return {"group": _group_block(G, H), "max_n": max_n, **result.to_dict()}

    def spectral(self) -> dict:
        query, G, H = self._finite()
        window = _pick(self.request.window, query.window, "window", self.settings.verify.spectral_window)
        n = _pick(self.request.degree, query.degree, "degree", max(window, 1))
        choice = _pick(self.request.coefficients, query.coefficients, "coefficients", "trivial")
        A = coefficient_module(G, H, choice)
        couple = ExactCouple(G, H, A, max(window + 1, n), self.caps)
        pages = derived_pages(G, H, A, window, window, self.caps, couple)
        report = {
            "group": _group_block(G, H),
            "coefficients": choice,
            "window": window,
            "pages": [page.to_dict() for page in pages],
            "dp": dp_lower_bound(G, H, A, n, self.caps, couple).to_dict(),
        }
        checks = exactness_checks(couple, window)
        if not H.is_whole:
            report["kappa"] = kappa_finite(G, H).to_dict()
            for k in range(1, window + 1):
                checks.append(restriction_kernel_check(couple, k))
                checks.extend(membership_chain_check(couple, k))
        report["checks"] = [c.to_dict() for c in checks]
        return report

    def verify(self) -> tuple[int, dict]:
        group = None
        if self.request.input is not None:
            query = parse_model(FiniteQuery, load_document(self.request.input))
            _check_version(query.version)
            group = make_group(query.group, self.caps)
        results = Verifier(self.settings, group).run()
        report = verify_report(results)
        status = EXIT_OK if report["status"] == "pass" else EXIT_VERIFICATION
        return status, report


def _check_version(version: int) -> None:
    if version != SCHEMA_VERSION:
        raise InputError(f"schema version {version} is not supported (expected {SCHEMA_VERSION})",
                         field="version")


def dispatch(request: Request) -> tuple[int, dict]:
    """Run one request; raises on input errors, returns (status, report) otherwise."""
    request.validate()
    settings = request.settings()
    set_settings(settings)
    logger.debug("dispatching %s with caps %s", request.subcommand,
                 {f.name: getattr(settings.caps, f.name) for f in fields(settings.caps)})
    handler = Dispatcher(request, settings)
    if request.subcommand == "verify":
        return handler.verify()
    report = getattr(handler, request.subcommand)()
    return EXIT_OK, {"command": request.subcommand, **report}
