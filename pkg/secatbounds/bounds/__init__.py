from secatbounds.bounds.descriptors import (
    AmalgamEdge,
    EpimorphismDescriptor,
    GroupDescriptor,
    Relation,
    SpaceHypotheses,
    SpaceQuery,
    SubgroupDescriptor,
    SubgroupQuery,
    Variant,
)
from secatbounds.bounds.engine import (
    BoundEngine,
    BoundReport,
    bound_report,
    cd_of,
    k_of,
    secat_subgroup,
    tc_of_epi,
    tc_r,
    tc_r_space,
)
from secatbounds.bounds.interval import BoundInterval, DerivationStep
from secatbounds.bounds.rules import RULES, Quantity, Rule, RuleRegistry

__all__ = [
    "AmalgamEdge",
    "BoundEngine",
    "BoundInterval",
    "BoundReport",
    "DerivationStep",
    "EpimorphismDescriptor",
    "GroupDescriptor",
    "Quantity",
    "RULES",
    "Relation",
    "Rule",
    "RuleRegistry",
    "SpaceHypotheses",
    "SpaceQuery",
    "SubgroupDescriptor",
    "SubgroupQuery",
    "Variant",
    "bound_report",
    "cd_of",
    "k_of",
    "secat_subgroup",
    "tc_of_epi",
    "tc_r",
    "tc_r_space",
]
