from secatbounds.groups.catalog import (
    abelian,
    all_subgroups,
    alternating,
    by_name,
    cyclic,
    dicyclic,
    dihedral,
    klein_four,
    metacyclic,
    normal_subgroups,
    quaternion,
    small_groups,
    subgroup_classes,
    symmetric,
    trivial_group,
)
from secatbounds.groups.constructions import (
    DiagonalFamily,
    NormalizerReport,
    PullbackGroup,
    center,
    centralizer,
    conjugate_intersection,
    diagonal_conjugate_family,
    diagonal_normalizer,
    diagonal_subgroup,
    is_malnormal,
    normalizer,
    pullback_group,
)
from secatbounds.groups.finite_group import (
    CosetSpace,
    DirectPower,
    FiniteGroup,
    GroupHom,
    Subgroup,
    direct_power,
    direct_product,
    group_from_permutations,
    group_from_table,
    make_group,
    quotient_group,
)

__all__ = [
    "CosetSpace",
    "DiagonalFamily",
    "DirectPower",
    "FiniteGroup",
    "GroupHom",
    "NormalizerReport",
    "PullbackGroup",
    "Subgroup",
    "abelian",
    "all_subgroups",
    "alternating",
    "by_name",
    "center",
    "centralizer",
    "conjugate_intersection",
    "cyclic",
    "dicyclic",
    "diagonal_conjugate_family",
    "diagonal_normalizer",
    "diagonal_subgroup",
    "dihedral",
    "direct_power",
    "direct_product",
    "group_from_permutations",
    "group_from_table",
    "is_malnormal",
    "klein_four",
    "make_group",
    "metacyclic",
    "normal_subgroups",
    "normalizer",
    "pullback_group",
    "quaternion",
    "quotient_group",
    "small_groups",
    "subgroup_classes",
    "symmetric",
    "trivial_group",
]
