# secatbounds/core/verify.py
"""
Structural verification suites.

Each suite checks one identity the engines rely on over a grid of small
groups and reports pass/fail per instance. A failing check records its
counterexample and the suite carries on; an instance that would exceed a cap
or the cochain-rank budget is skipped, not failed.
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Union

from secatbounds.bounds import (
    AmalgamEdge,
    EpimorphismDescriptor,
    GroupDescriptor,
    SubgroupDescriptor,
    secat_subgroup,
    tc_of_epi,
    tc_r,
)
from secatbounds.cohomology import (
    Resolution,
    bar_cohomology,
    bockstein_check,
    cohomology,
    crossed_hom_fr,
    normal_case_check,
    psi_compare,
)
from secatbounds.config import Settings
from secatbounds.errors import CapExceededError, VerificationError
from secatbounds.groups import (
    by_name,
    diagonal_conjugate_family,
    diagonal_normalizer,
    diagonal_subgroup,
    direct_power,
    normal_subgroups,
    pullback_group,
    small_groups,
    subgroup_classes,
)
from secatbounds.groups.finite_group import FiniteGroup, Subgroup, quotient_group
from secatbounds.modules import GModule, group_ring, ideal_I, trivial_module
from secatbounds.spectral import (
    ExactCouple,
    dp_lower_bound,
    e0_decomposition_check,
    exactness_checks,
    restriction_kernel_check,
    shapiro_check,
)

logger = logging.getLogger(__name__)

CANONICAL_GROUPS = ("Z2", "Z3", "Z4", "K4", "S3")

Outcome = Union[bool, tuple[bool, dict]]


@dataclass
class SuiteResult:
    name: str
    status: str = "skipped"  # pass | fail | skipped
    checks: int = 0
    failures: list[dict] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def finish(self) -> "SuiteResult":
        if self.failures:
            self.status = "fail"
        elif self.checks:
            self.status = "pass"
        else:
            self.status = "skipped"
        return self

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "checks": self.checks,
            "failures": self.failures,
            "skipped": self.skipped,
        }


def _subgroup_tag(G: FiniteGroup, H: Subgroup) -> str:
    if H.is_trivial:
        return f"{G.name} ⊇ 1"
    if H.is_whole:
        return f"{G.name} ⊇ {G.name}"
    gens = ",".join(G.label(g) for g in H.generators)
    return f"{G.name} ⊇ <{gens}>"


def _element_by_label(G: FiniteGroup, label: str, order: int) -> int:
    for g in G.elements:
        if G.label(g) == label:
            return g
    return next(g for g in G.non_identity if G.element_order(g) == order)


class Verifier:
    """Runs the suites on the catalog grids, or on one user-supplied group."""

    def __init__(self, settings: Settings, group: Optional[FiniteGroup] = None):
        self.settings = settings
        self.caps = settings.caps
        self.budget = settings.verify
        self.group = group

    # --- grids ---------------------------------------------------------------
    def _groups(self, max_order: int) -> list[FiniteGroup]:
        if self.group is not None:
            return [self.group]
        return small_groups(max_order)

    def _pairs(self, max_order: int) -> Iterable[tuple[FiniteGroup, Subgroup]]:
        for G in self._groups(max_order):
            for H in subgroup_classes(G):
                if not H.is_whole:
                    yield G, H

    def _coefficients(self, G: FiniteGroup, H: Optional[Subgroup] = None) -> list[tuple[str, Callable[[], GModule]]]:
        choices: list[tuple[str, Callable[[], GModule]]] = [
            ("Z", lambda: trivial_module(G)),
            ("ZG", lambda: group_ring(G)),
        ]
        if H is not None and not H.is_whole:
            choices.append(("I", lambda: ideal_I(G, H).module))
        return choices

    def _too_big(self, result: SuiteResult, tag: str, rank: int) -> bool:
        if rank > self.budget.max_cochain_rank:
            result.skipped.append(f"{tag}: cochain rank {rank} over budget")
            logger.warning("%s: skipping %s (cochain rank %d > %d)", result.name, tag, rank,
                           self.budget.max_cochain_rank)
            return True
        return False

    @staticmethod
    def _cochain_rank(G: FiniteGroup, degree: int, source_rank: int, target_rank: int) -> int:
        return (G.order - 1) ** degree * source_rank * target_rank

    def _attempt(self, result: SuiteResult, tag: str, check: Callable[[], Outcome]) -> None:
        try:
            outcome = check()
        except VerificationError as exc:
            result.checks += 1
            result.failures.append({"instance": tag, "error": str(exc), "counterexample": exc.counterexample})
            logger.error("%s: %s failed: %s", result.name, tag, exc)
            return
        except CapExceededError as exc:
            result.skipped.append(f"{tag}: {exc}")
            logger.warning("%s: skipping %s (%s)", result.name, tag, exc)
            return
        ok, detail = outcome if isinstance(outcome, tuple) else (outcome, {})
        result.checks += 1
        if not ok:
            result.failures.append({"instance": tag, "error": "identity does not hold", "counterexample": detail})
            logger.error("%s: %s failed", result.name, tag)

    # --- suites --------------------------------------------------------------
    def resolution_exactness(self) -> SuiteResult:
        result = SuiteResult("resolution_exactness")
        top = min(4, self.caps.max_degree)
        for G in self._groups(self.budget.family_order):
            def check(G=G):
                report = Resolution(G, top, self.caps).validate()
                return report.ok, {"degrees": {str(s): v for s, v in report.degrees.items()}}
            self._attempt(result, G.name, check)
        return result.finish()

    def bar_oracle(self) -> SuiteResult:
        result = SuiteResult("bar_oracle")
        top = min(self.budget.max_degree, self.caps.max_degree)
        for G in self._groups(self.budget.oracle_order):
            modules: list[tuple[str, Callable[[], GModule]]] = self._coefficients(G)
            for H in subgroup_classes(G):
                if not H.is_whole:
                    modules.append((f"I[{_subgroup_tag(G, H)}]", lambda H=H, G=G: ideal_I(G, H).module))
            for name, build in modules:
                A = build()
                for n in range(top + 1):
                    tag = f"{G.name}, A={name}, n={n}"
                    if self._too_big(result, tag, G.order ** (n + 1) * A.rank):
                        continue

                    def check(G=G, A=A, n=n):
                        left = cohomology(G, A, n, caps=self.caps).invariants
                        right = bar_cohomology(G, A, n, self.caps).invariants
                        return left == right, {"resolution": left.to_dict(), "bar": right.to_dict()}
                    self._attempt(result, tag, check)
        return result.finish()

    def diagonal_family(self) -> SuiteResult:
        """Δ ∩ xΔx⁻¹ through centralizers, and the self-normalizing criterion."""
        result = SuiteResult("diagonal_family")
        for G in self._groups(self.budget.family_order):
            for r in self.budget.powers:
                tag = f"{G.name}, r={r}"

                def check(G=G, r=r):
                    family = diagonal_conjugate_family(G, r, self.caps)
                    normalizer = diagonal_normalizer(G, r, self.caps)
                    ok = family.identity_holds and normalizer.consistent
                    return ok, {"mismatches": family.mismatches[:5],
                                "normalizer_order": normalizer.normalizer.order,
                                "center_trivial": normalizer.center_trivial}
                self._attempt(result, tag, check)
        return result.finish()

    def shapiro_e0(self) -> SuiteResult:
        result = SuiteResult("shapiro_e0")
        top = min(2, self.caps.max_degree - 1)
        for G, H in self._pairs(self.budget.grid_order):
            k = G.order // H.order
            for name, build in self._coefficients(G, H):
                A: Optional[GModule] = None
                couple: Optional[ExactCouple] = None
                for r in range(top + 1):
                    tag = f"{_subgroup_tag(G, H)}, A={name}, r={r}"
                    rank_A = G.order if name == "ZG" else (k - 1 if name == "I" else 1)
                    if self._too_big(result, f"shapiro {tag}", self._cochain_rank(G, r, k, rank_A)):
                        continue
                    if A is None:
                        A = build()
                    self._attempt(result, f"shapiro {tag}",
                                  lambda G=G, H=H, A=A, r=r: shapiro_check(G, H, trivial_module(G), A, r,
                                                                           self.caps).ok)
                    for s in range(top + 1):
                        e_rank = k * (k - 1) ** s
                        cell = f"{tag}, s={s}"
                        if self._too_big(result, f"e0 {cell}", self._cochain_rank(G, r, e_rank, rank_A)):
                            continue
                        if couple is None:
                            couple = ExactCouple(G, H, A, top, self.caps)
                        self._attempt(result, f"e0 {cell}",
                                      lambda G=G, H=H, A=A, r=r, s=s, couple=couple:
                                      e0_decomposition_check(G, H, A, r, s, self.caps, couple).ok)
        return result.finish()

    def canonical_class(self) -> SuiteResult:
        """ψ_*(ω) = v_r as cocycles."""
        result = SuiteResult("canonical_class")
        for pi in self._canonical_groups():
            for r in self.budget.powers:
                tag = f"{pi.name}, r={r}"

                def check(pi=pi, r=r):
                    report = psi_compare(pi, r, self.caps)
                    return report.ok, report.to_dict()
                self._attempt(result, tag, check)
        return result.finish()

    def crossed_hom(self) -> SuiteResult:
        """f_r(gh) = g·f_r(h) + f_r(g) and f_r(g) = ∂(g) − 1."""
        result = SuiteResult("crossed_hom")
        for pi in self._canonical_groups():
            for r in self.budget.powers:
                tag = f"{pi.name}, r={r}"

                def check(pi=pi, r=r):
                    f = crossed_hom_fr(pi, r, self.caps)
                    return all(f.checks.values()), f.to_dict()
                self._attempt(result, tag, check)
        return result.finish()

    def _canonical_groups(self) -> list[FiniteGroup]:
        if self.group is not None:
            return [self.group]
        return [by_name(name) for name in CANONICAL_GROUPS]

    def _bockstein_pairs(self) -> list[tuple[FiniteGroup, Subgroup]]:
        if self.group is not None:
            G = self.group
            return [(G, H) for H in subgroup_classes(G) if not H.is_whole and not H.is_trivial]
        Z4 = by_name("Z4")
        half = next(H for H in subgroup_classes(Z4) if H.order == 2)
        Z2 = by_name("Z2")
        K4 = direct_power(Z2, 2, self.caps)
        S3 = by_name("S3")
        swap = Subgroup.generated_by(S3, [_element_by_label(S3, "(1 2)", 2)])
        return [(Z4, half), (K4, diagonal_subgroup(Z2, 2, self.caps)), (S3, swap)]

    def bockstein(self) -> SuiteResult:
        """δ(1) = ω, δ(u) = ω ∪ u and δ(u) = −(ev_0)_*(ω ∪ u) up to coboundary."""
        result = SuiteResult("bockstein")
        samples = self.budget.bockstein_samples
        for G, H in self._bockstein_pairs():
            tag = _subgroup_tag(G, H)
            if self._too_big(result, tag, self._cochain_rank(G, 2, 1, G.order // H.order)):
                continue
            self._attempt(result, f"{tag}, unit",
                          lambda G=G, H=H: all(rep.ok for rep in bockstein_check(G, H, kind="unit", caps=self.caps)))
            for kind in ("cup", "ev"):
                def check(G=G, H=H, kind=kind):
                    reports = bockstein_check(G, H, kind=kind, s=0, caps=self.caps, samples=samples, degree=1)
                    return all(rep.ok for rep in reports), {"samples": len(reports)}
                self._attempt(result, f"{tag}, {kind}", check)
        return result.finish()

    def exact_couple(self) -> SuiteResult:
        """Triangle exactness, D_1^{n,0} = ker ι*, and D_p^{n,0} ≠ 0 only below the height."""
        result = SuiteResult("exact_couple")
        window = self.budget.spectral_window
        for G, H in self._pairs(self.budget.grid_order):
            k = G.order // H.order
            for name, build in self._coefficients(G, H):
                tag = f"{_subgroup_tag(G, H)}, A={name}"
                rank_A = G.order if name == "ZG" else (k - 1 if name == "I" else 1)
                widest = max(self._cochain_rank(G, r, k * (k - 1) ** (window + 1 - r), rank_A)
                             for r in range(window + 2))
                if self._too_big(result, tag, widest):
                    continue
                A = build()
                holder: dict[str, ExactCouple] = {}

                def couple(G=G, H=H, A=A, holder=holder) -> ExactCouple:
                    if "c" not in holder:
                        holder["c"] = ExactCouple(G, H, A, window + 1, self.caps)
                    return holder["c"]

                def triangle(couple=couple):
                    failed = [c.to_dict() for c in exactness_checks(couple(), window) if not c.passed]
                    return not failed, {"failed_cells": failed}
                self._attempt(result, f"{tag}, exactness", triangle)
                for n in range(1, window + 1):
                    self._attempt(result, f"{tag}, restriction kernel n={n}",
                                  lambda n=n, couple=couple: restriction_kernel_check(couple(), n).passed)
                    self._attempt(result, f"{tag}, dp ≤ height n={n}",
                                  lambda n=n, couple=couple, G=G, H=H, A=A:
                                  (True, dp_lower_bound(G, H, A, n, self.caps, couple()).to_dict()))
        return result.finish()

    def _normal_pairs(self) -> list[tuple[FiniteGroup, Subgroup]]:
        if self.group is not None:
            G = self.group
            return [(G, N) for N in normal_subgroups(G) if not N.is_whole and not N.is_trivial]
        Z4 = by_name("Z4")
        half = next(H for H in subgroup_classes(Z4) if H.order == 2)
        Z2 = by_name("Z2")
        K4 = direct_power(Z2, 2, self.caps)
        factor = Subgroup(K4, tuple(sorted(K4.encode((g, Z2.identity)) for g in Z2.elements)))
        return [(Z4, half), (K4, factor), (K4, diagonal_subgroup(Z2, 2, self.caps))]

    def normal_pullback(self) -> SuiteResult:
        """π*β − ω is a coboundary, and pulled-back classes are essential."""
        result = SuiteResult("normal_pullback")
        for G, N in self._normal_pairs():
            def check(G=G, N=N):
                report = normal_case_check(G, N, max_degree=1, caps=self.caps)
                return report.ok, report.to_dict()
            self._attempt(result, _subgroup_tag(G, N), check)
        return result.finish()

    def pullback(self) -> SuiteResult:
        """G ×_Q G ≅ ker ρ ⋊ G for every quotient ρ: G → G/N in the catalog."""
        result = SuiteResult("pullback")
        for G in self._groups(self.budget.family_order):
            for N in normal_subgroups(G):
                def check(G=G, N=N):
                    _, rho = quotient_group(G, N)
                    pb = pullback_group(rho, self.caps)
                    return all(pb.checks.values()), {"checks": pb.checks, "order": pb.group.order}
                self._attempt(result, _subgroup_tag(G, N), check)
        return result.finish()

    def golden_bounds(self) -> SuiteResult:
        """Exact symbolic values the rule engine must reproduce."""
        result = SuiteResult("golden_bounds")

        def expect(tag: str, compute, lower: int, upper: Optional[int]):
            def check():
                interval = compute()
                return (interval.lower == lower and interval.upper == upper), {"got": interval.text()}
            self._attempt(result, tag, check)

        for n in range(1, 6):
            for r in range(2, 6):
                value = (r - 1) * n
                expect(f"TC_{r}(Z^{n})", lambda n=n, r=r: tc_r(GroupDescriptor.free_abelian(n), r), value, value)
        for rank in (2, 3, 4):
            for r in range(2, 6):
                expect(f"TC_{r}(F_{rank})", lambda rank=rank, r=r: tc_r(GroupDescriptor.free(rank), r), r, r)
        for genus in (2, 3):
            for r in range(2, 6):
                expect(f"TC_{r}(Σ_{genus})", lambda genus=genus, r=r: tc_r(GroupDescriptor.surface(genus), r),
                       2 * r, 2 * r)
        # Σ_2 = F_2 *_Z F_2 along a malnormal cyclic subgroup
        free = GroupDescriptor.free(2)
        amalgam = GroupDescriptor.amalgam(free, free, AmalgamEdge(malnormal_in_left=True), cd=(2, 2))
        for r in (2, 3):
            expect(f"TC_{r}({amalgam.label()})", lambda r=r: tc_r(amalgam, r), 2 * r - 1, 2 * r)
        sandwich = EpimorphismDescriptor(
            source=GroupDescriptor.surface(2), target=GroupDescriptor.free(2),
            kernel=GroupDescriptor.generic("K", cd=(1, 1)),
            kernel_top_cohomology_z_free=True, k_rho=(1, 1),
        )
        expect(f"TC[{sandwich.label()}]", lambda: tc_of_epi(sandwich), 2, 3)
        central = EpimorphismDescriptor(
            source=GroupDescriptor.free_abelian(3), target=GroupDescriptor.free_abelian(1),
            kernel=GroupDescriptor.free_abelian(2), central_kernel=True,
        )
        expect(f"TC[{central.label()}]", lambda: tc_of_epi(central), 2, 2)
        for pi in (GroupDescriptor.free_abelian(2), GroupDescriptor.surface(2)):
            for r in (2, 3):
                def agree(pi=pi, r=r):
                    a = tc_r(pi, r)
                    b = secat_subgroup(pi.power(r), SubgroupDescriptor.diagonal(pi, r))
                    return a.same_bounds(b), {"tc": a.text(), "secat": b.text()}
                self._attempt(result, f"TC_{r}({pi.label()}) = secat(diagonal)", agree)
        return result.finish()

    SUITES = (
        "resolution_exactness", "bar_oracle", "diagonal_family", "shapiro_e0", "canonical_class",
        "crossed_hom", "bockstein", "exact_couple", "normal_pullback", "pullback", "golden_bounds",
    )

    def run(self, only: Optional[Iterable[str]] = None) -> list[SuiteResult]:
        names = list(only) if only is not None else list(self.SUITES)
        results = []
        for name in names:
            suite = getattr(self, name)()
            logger.info("suite %s: %s (%d checks, %d failures, %d skipped)", suite.name, suite.status,
                        suite.checks, len(suite.failures), len(suite.skipped))
            results.append(suite)
        return results


def verify_report(results: list[SuiteResult]) -> dict:
    return {
        "status": "fail" if any(not s.ok for s in results) else "pass",
        "skipped": sum(len(s.skipped) for s in results),
        "summary": [{"suite": s.name, "status": s.status, "checks": s.checks,
                     "failures": len(s.failures), "skipped": len(s.skipped)} for s in results],
        "suites": [s.to_dict() for s in results],
    }
