import pytest

from secatbounds.cohomology import Resolution, bs_class, essential_certify, normal_case_check
from secatbounds.cohomology.groups import Cocycle
from secatbounds.errors import InputError, NotNormalError
from secatbounds.groups import subgroup_classes
from secatbounds.groups.finite_group import Subgroup

from tests.conftest import element


def test_relative_class_is_essential(s3):
    H = Subgroup.generated_by(s3, [element(s3, "(1 2)")])
    bs = bs_class(s3, H, Resolution(s3, 2))
    report = essential_certify(s3, H, bs.cocycle, bs=bs)
    assert report.essential
    assert report.witness is not None and report.witness.is_equivariant()
    assert report.to_dict()["degree"] == 1


def test_zero_class_rejected(z2):
    bs = bs_class(z2, Subgroup.trivial(z2), Resolution(z2, 2))
    zero = Cocycle(1, bs.module, tuple(0 for _ in bs.cocycle.values))
    with pytest.raises(InputError):
        essential_certify(z2, Subgroup.trivial(z2), zero, bs=bs)


def test_normal_pullback_cyclic(z4):
    half = next(H for H in subgroup_classes(z4) if H.order == 2)
    report = normal_case_check(z4, half, max_degree=1)
    assert report.ok
    assert report.quotient_order == 2 and report.modules_agree


def test_normal_pullback_klein(klein):
    for N in subgroup_classes(klein):
        if N.order == 2:
            assert normal_case_check(klein, N, max_degree=1).ok


def test_non_normal_subgroup(s3):
    H = Subgroup.generated_by(s3, [element(s3, "(1 2)")])
    with pytest.raises(NotNormalError):
        normal_case_check(s3, H)
