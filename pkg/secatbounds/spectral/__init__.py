from secatbounds.spectral.checks import ComparisonReport, e0_decomposition_check, shapiro_check
from secatbounds.spectral.exact_couple import (
    CheckResult,
    DpReport,
    ExactCouple,
    ExactCouplePage,
    derived_pages,
    dp_lower_bound,
    exactness_checks,
    ext_page0,
    membership_chain_check,
    restriction_kernel_check,
    window_cells,
)
from secatbounds.spectral.kappa import KappaEntry, KappaReport, kappa_finite
from secatbounds.spectral.orbits import Orbit, OrbitDecomposition, orbit_decompose
from secatbounds.spectral.subquotients import ClassMap, ClassSpace, Lattice

__all__ = [
    "CheckResult",
    "ClassMap",
    "ClassSpace",
    "ComparisonReport",
    "DpReport",
    "ExactCouple",
    "ExactCouplePage",
    "KappaEntry",
    "KappaReport",
    "Lattice",
    "Orbit",
    "OrbitDecomposition",
    "derived_pages",
    "dp_lower_bound",
    "e0_decomposition_check",
    "exactness_checks",
    "ext_page0",
    "kappa_finite",
    "membership_chain_check",
    "orbit_decompose",
    "restriction_kernel_check",
    "shapiro_check",
    "window_cells",
]
