# secatbounds/bounds/engine.py
"""
Fixpoint evaluation of the rule registry.

Every quantity reachable from the goal starts at [0, +inf); each pass applies
all rules and intersects, until nothing tightens. Rules are monotone, so the
result does not depend on the order of evaluation; the order is still fixed so
derivation trails are reproducible.
"""
import logging
from dataclasses import dataclass, field
from typing import Optional

from secatbounds.bounds.descriptors import (
    EpimorphismDescriptor,
    GroupDescriptor,
    Relation,
    SpaceHypotheses,
    SpaceQuery,
    SubgroupDescriptor,
    SubgroupQuery,
)
from secatbounds.bounds.interval import BoundInterval, DerivationStep
from secatbounds.bounds.rules import RULES, Quantity, Rule, RuleRegistry
from secatbounds.errors import InconsistentBoundsError, InputError

logger = logging.getLogger(__name__)


@dataclass
class Evaluation:
    goal: Quantity
    values: dict[Quantity, BoundInterval]
    steps: list[DerivationStep]
    rounds: int

    @property
    def interval(self) -> BoundInterval:
        return self.values[self.goal].with_derivation(self.steps)


class BoundEngine:
    def __init__(self, registry: Optional[RuleRegistry] = None, max_rounds: int = 64):
        self.registry = registry or RULES
        self.max_rounds = max_rounds

    def _plan(self, goal: Quantity) -> dict[Quantity, list[tuple[Rule, dict[str, Quantity]]]]:
        plan: dict[Quantity, list[tuple[Rule, dict[str, Quantity]]]] = {}
        queue = [goal]
        while queue:
            q = queue.pop(0)
            if q in plan:
                continue
            firings = [(rule, rule.premises(q)) for rule in self.registry.for_quantity(q)]
            plan[q] = firings
            for _, premises in firings:
                queue.extend(p for p in premises.values() if p not in plan)
        return plan

    def evaluate(self, goal: Quantity) -> Evaluation:
        plan = self._plan(goal)
        values = {q: BoundInterval.unknown() for q in plan}
        steps: list[DerivationStep] = []
        logger.debug("evaluating %s over %d quantities", goal, len(plan))
        for rounds in range(1, self.max_rounds + 1):
            changed = False
            for q, firings in plan.items():
                for rule, premises in firings:
                    given = {label: values[p] for label, p in premises.items()}
                    conclusion = rule.conclude(q, given)
                    if conclusion is None:
                        continue
                    current = values[q]
                    try:
                        tightened = current.meet(conclusion)
                    except InconsistentBoundsError as exc:
                        raise InconsistentBoundsError(
                            f"rule {rule.name} concludes {conclusion.text()} for {q}, "
                            f"but it is already known to lie in {current.text()}"
                        ) from exc
                    if tightened.same_bounds(current):
                        continue
                    values[q] = BoundInterval(tightened.lower, tightened.upper)
                    steps.append(DerivationStep(
                        rule=rule.name,
                        anchor=rule.anchor_for(q),
                        quantity=str(q),
                        premises=tuple((str(premises[label]), iv.text()) for label, iv in given.items()),
                        conclusion=conclusion.text(),
                    ))
                    changed = True
            if not changed:
                return Evaluation(goal, values, steps, rounds)
        logger.warning("no fixpoint for %s after %d rounds; reporting the current intervals", goal, self.max_rounds)
        return Evaluation(goal, values, steps, self.max_rounds)


_default_engine = BoundEngine()


def _evaluate(goal: Quantity, engine: Optional[BoundEngine]) -> BoundInterval:
    return (engine or _default_engine).evaluate(goal).interval


def cd_of(d: GroupDescriptor, engine: Optional[BoundEngine] = None) -> BoundInterval:
    return _evaluate(Quantity("cd", d), engine)


def k_of(d: GroupDescriptor, engine: Optional[BoundEngine] = None) -> BoundInterval:
    """k(π) = max cd of centralizers of nontrivial elements."""
    return _evaluate(Quantity("k", d), engine)


def _check_r(r: int) -> None:
    if r < 2:
        raise InputError("r must be at least 2", field="r")


def tc_r(d: GroupDescriptor, r: int, engine: Optional[BoundEngine] = None) -> BoundInterval:
    _check_r(r)
    return _evaluate(Quantity("tc", d, r), engine)


def secat_subgroup(dG: GroupDescriptor, dH: SubgroupDescriptor,
                   engine: Optional[BoundEngine] = None) -> BoundInterval:
    if dH.relation is Relation.WHOLE:
        logger.info("H = G: secat is 0 without consulting κ")
    return _evaluate(Quantity("secat", SubgroupQuery(dG, dH)), engine)


def tc_of_epi(e: EpimorphismDescriptor, engine: Optional[BoundEngine] = None) -> BoundInterval:
    return _evaluate(Quantity("tc_epi", e), engine)


def tc_r_space(d: GroupDescriptor, r: int, hypotheses: SpaceHypotheses,
               engine: Optional[BoundEngine] = None) -> BoundInterval:
    _check_r(r)
    return _evaluate(Quantity("tc_space", SpaceQuery(d, r, hypotheses)), engine)


@dataclass
class BoundReport:
    query: str
    interval: BoundInterval
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        body = self.interval.to_dict()
        return {
            "query": self.query,
            "interval": {"lower": body["lower"], "upper": body["upper"], "text": body["text"]},
            "exact": body["exact"],
            "derivation": body["derivation"],
            "notes": list(self.notes),
        }


def bound_report(kind: str, group: Optional[GroupDescriptor] = None, r: Optional[int] = None,
                 subgroup: Optional[SubgroupDescriptor] = None,
                 epimorphism: Optional[EpimorphismDescriptor] = None,
                 space: Optional[SpaceHypotheses] = None,
                 engine: Optional[BoundEngine] = None) -> BoundReport:
    """Dispatch one bound query by kind: cd, k, tc, secat, tc_epi or tc_space."""
    if kind == "cd":
        return BoundReport(f"cd({group.label()})", cd_of(group, engine))
    if kind == "k":
        return BoundReport(f"k({group.label()})", k_of(group, engine))
    if kind == "tc":
        if r is None:
            raise InputError("tc needs r", field="r")
        return BoundReport(f"TC_{r}({group.label()})", tc_r(group, r, engine))
    if kind == "secat":
        if subgroup is None:
            raise InputError("secat needs a subgroup descriptor", field="subgroup")
        query = SubgroupQuery(group, subgroup)
        return BoundReport(f"secat({query.label()})", secat_subgroup(group, subgroup, engine))
    if kind == "tc_epi":
        if epimorphism is None:
            raise InputError("tc_epi needs an epimorphism descriptor", field="epimorphism")
        return BoundReport(f"TC[{epimorphism.label()}]", tc_of_epi(epimorphism, engine))
    if kind == "tc_space":
        if r is None or space is None:
            raise InputError("tc_space needs r and space hypotheses", field="space")
        interval = tc_r_space(group, r, space, engine)
        top = r * space.dimension
        notes = [f"maximality criterion: TC_{r}(X) = {top} if and only if v_{r}^{top} ≠ 0"]
        return BoundReport(SpaceQuery(group, r, space).label(), interval, notes)
    raise InputError(f"unknown query kind {kind!r}", field="query")
