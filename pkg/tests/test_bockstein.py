import pytest

from secatbounds.cohomology import bockstein_check, bs_class, Resolution
from secatbounds.errors import InputError
from secatbounds.groups import diagonal_subgroup, subgroup_classes
from secatbounds.groups.finite_group import Subgroup
from secatbounds.modules import group_ring

from tests.conftest import element


@pytest.fixture
def z4_half(z4):
    return next(H for H in subgroup_classes(z4) if H.order == 2)


def test_relative_class_checks(z4, z4_half):
    bs = bs_class(z4, z4_half, Resolution(z4, 2))
    assert bs.checks == {"cocycle": True, "restriction_vanishes": True}
    assert not bs.degenerate
    assert bs.module.rank == 1


def test_unit_gives_relative_class(z4, z4_half):
    (report,) = bockstein_check(z4, z4_half, kind="unit")
    assert report.ok
    assert report.details["equals_omega"]


def test_cup_identity(z4, z4_half):
    reports = bockstein_check(z4, z4_half, group_ring(z4), kind="cup", samples=5)
    assert 1 <= len(reports) <= 5
    assert all(r.ok for r in reports)


def test_evaluation_identity(s3):
    H = Subgroup.generated_by(s3, [element(s3, "(1 2)")])
    reports = bockstein_check(s3, H, kind="ev", s=0, samples=3)
    assert all(r.ok for r in reports)
    assert reports[0].to_dict()["s"] == 0


def test_diagonal_cup_identity(z2):
    diagonal = diagonal_subgroup(z2, 2)
    assert all(r.ok for r in bockstein_check(diagonal.parent, diagonal, kind="cup", samples=4))


def test_unknown_kind(z2):
    with pytest.raises(InputError):
        bockstein_check(z2, Subgroup.trivial(z2), kind="left")
