import pytest

from secatbounds.errors import InputError
from secatbounds.groups import by_name, subgroup_classes
from secatbounds.groups.finite_group import Subgroup
from secatbounds.modules import group_ring, trivial_module
from secatbounds.spectral import (
    ExactCouple,
    derived_pages,
    ext_page0,
    dp_lower_bound,
    e0_decomposition_check,
    exactness_checks,
    kappa_finite,
    membership_chain_check,
    orbit_decompose,
    restriction_kernel_check,
    shapiro_check,
    window_cells,
)

from tests.conftest import element


@pytest.fixture
def transposition(s3):
    return Subgroup.generated_by(s3, [element(s3, "(1 2)")])


@pytest.fixture
def z4_half(z4):
    return next(H for H in subgroup_classes(z4) if H.order == 2)


def test_window_cells():
    assert window_cells(1) == [(0, 0), (1, 0), (0, 1)]
    assert len(window_cells(2)) == 6


def test_couple_needs_module_over_the_group(z2, z3):
    with pytest.raises(InputError):
        ExactCouple(z2, Subgroup.trivial(z2), trivial_module(z3), 1)


@pytest.mark.parametrize("coefficients", ["trivial", "regular"])
def test_triangle_exactness(z2, coefficients):
    A = trivial_module(z2) if coefficients == "trivial" else group_ring(z2)
    couple = ExactCouple(z2, Subgroup.trivial(z2), A, 2)
    assert all(c.passed for c in exactness_checks(couple, 1))


def test_first_page_is_restriction_kernel(z4, z4_half):
    couple = ExactCouple(z4, z4_half, trivial_module(z4), 3)
    assert restriction_kernel_check(couple, 1).passed
    assert restriction_kernel_check(couple, 2).passed


def test_membership_chain(z2):
    couple = ExactCouple(z2, Subgroup.trivial(z2), trivial_module(z2), 3)
    assert all(c.passed for c in membership_chain_check(couple, 2))


def test_dp_stays_below_height(z2):
    report = dp_lower_bound(z2, Subgroup.trivial(z2), trivial_module(z2), 2)
    assert 0 <= report.page <= 2
    assert report.height_value >= report.page
    assert report.to_dict()["implied"] == f"secat(H -> G) >= {report.page}"
    assert [row["p"] for row in report.column] == [0, 1, 2]


def test_derived_pages(z2):
    pages = derived_pages(z2, Subgroup.trivial(z2), trivial_module(z2), 1, 1)
    assert [p.page for p in pages] == [0, 1]
    assert set(pages[0].maps) == {"i0", "j0", "k0"}
    assert set(pages[1].cells) == set(window_cells(1))


def test_derived_pages_reject_negative_window(z2):
    with pytest.raises(InputError):
        derived_pages(z2, Subgroup.trivial(z2), trivial_module(z2), 0, -1)


@pytest.mark.parametrize("r", [0, 1, 2])
def test_shapiro(s3, transposition, r):
    assert shapiro_check(s3, transposition, trivial_module(s3), trivial_module(s3), r).ok


def test_shapiro_hom_level_maps(z4, z4_half):
    report = shapiro_check(z4, z4_half, trivial_module(z4), group_ring(z4), 0)
    assert report.ok
    assert report.details["psi_phi_identity"] and report.details["phi_psi_identity"]


@pytest.mark.parametrize("r, s", [(0, 1), (1, 1), (1, 2)])
def test_e0_orbit_decomposition(z4, z4_half, r, s):
    assert e0_decomposition_check(z4, z4_half, trivial_module(z4), r, s).ok


def test_orbits_of_malnormal_subgroup(s3, transposition):
    decomposition = orbit_decompose(s3, transposition, 1)
    (orbit,) = decomposition.prime_orbits
    assert orbit.size == 2
    assert orbit.isotropy.is_trivial


def test_kappa_malnormal(s3, transposition):
    report = kappa_finite(s3, transposition)
    assert report.malnormal and report.kappa == 0
    assert not report.normal
    assert len(report.entries) == 1


def test_kappa_normal(s3):
    rotations = next(H for H in subgroup_classes(s3) if H.order == 3)
    report = kappa_finite(s3, rotations)
    assert report.normal and not report.malnormal
    assert report.kappa is None
    assert report.profile() == [(3, (1, 3, 3))]


def test_kappa_rejects_whole_group(s3):
    with pytest.raises(InputError):
        kappa_finite(s3, Subgroup.whole(s3))


def test_page_zero_bottom_row(z4, z4_half):
    cells = ext_page0(z4, z4_half, trivial_module(z4), 2, 0)
    assert cells["D"].torsion == (4,)
    assert cells["E"].torsion == (2,)


@pytest.mark.parametrize("name", ["S3", "D4", "A4"])
def test_kappa_is_conjugation_invariant(name):
    G = by_name(name)
    for H in subgroup_classes(G):
        if H.is_whole:
            continue
        expected = kappa_finite(G, H).profile()
        for g in G.elements:
            assert kappa_finite(G, H.conjugate(g)).profile() == expected
