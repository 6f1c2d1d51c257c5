from secatbounds.cohomology.bar import bar_cohomology
from secatbounds.cohomology.bockstein import (
    BocksteinReport,
    bockstein_check,
    bockstein_cup,
    bockstein_ev,
    bockstein_unit,
    sample_cocycles,
)
from secatbounds.cohomology.canonical import (
    CrossedHom,
    PsiReport,
    canonical_class,
    crossed_hom_fr,
    psi_compare,
    tuple_action,
)
from secatbounds.cohomology.classes import (
    HeightResult,
    RelativeClass,
    bs_class,
    cup,
    height,
    omega_power,
    push_forward,
    restrict_cocycle,
)
from secatbounds.cohomology.complex import ExtComplex, precompose, push_values
from secatbounds.cohomology.essential import (
    EssentialReport,
    NormalCaseReport,
    essential_certify,
    normal_case_check,
    pullback_cochain,
)
from secatbounds.cohomology.groups import (
    Cocycle,
    CohomologyGroup,
    cohomology,
    cohomology_range,
    ext_group,
    is_coboundary,
)
from secatbounds.cohomology.resolution import ExactnessReport, Resolution, build_resolution

__all__ = [
    "BocksteinReport",
    "Cocycle",
    "CohomologyGroup",
    "CrossedHom",
    "EssentialReport",
    "ExactnessReport",
    "ExtComplex",
    "HeightResult",
    "NormalCaseReport",
    "PsiReport",
    "RelativeClass",
    "Resolution",
    "bar_cohomology",
    "bockstein_check",
    "bockstein_cup",
    "bockstein_ev",
    "bockstein_unit",
    "bs_class",
    "build_resolution",
    "canonical_class",
    "cohomology",
    "cohomology_range",
    "crossed_hom_fr",
    "cup",
    "essential_certify",
    "ext_group",
    "height",
    "is_coboundary",
    "normal_case_check",
    "omega_power",
    "precompose",
    "psi_compare",
    "pullback_cochain",
    "push_forward",
    "push_values",
    "restrict_cocycle",
    "sample_cocycles",
    "tuple_action",
]
