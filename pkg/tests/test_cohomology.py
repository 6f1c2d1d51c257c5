import pytest

from secatbounds.cohomology import (
    Cocycle,
    Resolution,
    bar_cohomology,
    bs_class,
    build_resolution,
    cohomology,
    cohomology_range,
    cup,
    ext_group,
    height,
    omega_power,
    push_forward,
    restrict_cocycle,
)
from secatbounds.errors import DegreeError
from secatbounds.groups import subgroup_classes
from secatbounds.groups.finite_group import Subgroup
from secatbounds.modules import group_ring, ideal_I, sigma, trivial_module

from tests.conftest import element


@pytest.mark.parametrize("n, free_rank, torsion", [(0, 1, ()), (1, 0, ()), (2, 0, (4,)), (3, 0, ())])
def test_cyclic_integral_cohomology(z4, n, free_rank, torsion):
    H = cohomology(z4, trivial_module(z4), n)
    assert H.invariants.free_rank == free_rank
    assert H.invariants.torsion == torsion


def test_klein_and_s3_second_cohomology(klein, s3):
    assert cohomology(klein, trivial_module(klein), 2).invariants.torsion == (2, 2)
    assert cohomology(klein, trivial_module(klein), 1).is_zero
    assert str(cohomology(s3, trivial_module(s3), 2).invariants) == "Z/2"


def test_group_ring_coefficients_are_acyclic(z3):
    ZG = group_ring(z3)
    assert cohomology(z3, ZG, 0).invariants.free_rank == 1
    assert cohomology(z3, ZG, 1).is_zero
    assert cohomology(z3, ZG, 2).is_zero


def test_ideal_has_no_invariants(s3):
    H = Subgroup.generated_by(s3, [element(s3, "(1 2)")])
    assert cohomology(s3, ideal_I(s3, H).module, 0).is_zero


@pytest.mark.parametrize("name", ["z2", "z3", "klein"])
@pytest.mark.parametrize("n", [1, 2])
def test_bar_complex_agrees(request, name, n):
    G = request.getfixturevalue(name)
    Z = trivial_module(G)
    assert bar_cohomology(G, Z, n).invariants == cohomology(G, Z, n).invariants


def test_bar_complex_agrees_with_regular_coefficients(z3):
    ZG = group_ring(z3)
    assert bar_cohomology(z3, ZG, 1).invariants == cohomology(z3, ZG, 1).invariants


def test_representative_classes(z4):
    H2 = cohomology(z4, trivial_module(z4), 2)
    (rep,) = H2.representatives
    assert H2.class_of(rep.values) == [1]
    assert H2.is_zero_class([4 * v for v in rep.values])
    assert not H2.is_zero_class(rep.values)


def test_cohomology_range_keeps_order(z2):
    groups = cohomology_range(z2, trivial_module(z2), [2, 0, 1])
    assert [g.degree for g in groups] == [2, 0, 1]
    assert groups[0].invariants.torsion == (2,)
    assert groups[1].invariants.free_rank == 1
    assert groups[2].is_zero


def test_negative_degree(z2):
    with pytest.raises(DegreeError):
        cohomology(z2, trivial_module(z2), -1)


def test_resolution_is_exact(s3, klein):
    assert Resolution(s3, 3).validate().ok
    assert Resolution(klein, 4).validate().ok


def test_resolution_degree_cap(z2):
    with pytest.raises(DegreeError):
        Resolution(z2, 10)


def test_height_of_trivial_subgroup_reaches_the_limit(z2, z3):
    result = height(z2, Subgroup.trivial(z2), 3)
    assert result.value == 3 and result.at_least
    assert result.to_dict()["text"] == "≥ 3"
    assert height(z3, Subgroup.trivial(z3), 2).at_least


def test_build_resolution_ranks(z3):
    res = build_resolution(z3, 2, validate=True)
    assert [res.rank(s) for s in range(3)] == [3, 6, 12]


def test_ext_groups(z3):
    Z = trivial_module(z3)
    assert ext_group(z3, Z, Z, 2).invariants.torsion == (3,)
    ZG = group_ring(z3)
    assert ext_group(z3, ZG, Z, 0).invariants.free_rank == 1
    assert ext_group(z3, ZG, Z, 1).is_zero


def test_omega_power_is_iterated_cup(z2):
    bs = bs_class(z2, Subgroup.trivial(z2))
    assert omega_power(bs, 0).values == (1,)
    square = omega_power(bs, 2)
    assert square.degree == 2
    assert square.values == cup(bs.cocycle, bs.cocycle, module=bs.ideal_power(2)).values


def test_push_forward_to_a_point_vanishes(s3):
    H = Subgroup.generated_by(s3, [element(s3, "(1 2)")])
    bs = bs_class(s3, H)
    pushed = push_forward(bs.ideal.inclusion, bs.cocycle)
    assert pushed.rank == 3 and not pushed.is_zero
    assert push_forward(sigma(s3, H), pushed).is_zero


def test_restriction_to_half(z4):
    H = next(K for K in subgroup_classes(z4) if K.order == 2)
    res = Resolution(z4, 3)
    (rep,) = cohomology(z4, trivial_module(z4), 2, res).representatives
    restricted, res_H = restrict_cocycle(rep, res, H)
    H2 = cohomology(H.group, restricted.coefficients, 2, res_H)
    assert not H2.is_zero_class(restricted.values)
    doubled = Cocycle(2, rep.coefficients, tuple(2 * v for v in rep.values))
    restricted, res_H = restrict_cocycle(doubled, res, H, sub_resolution=res_H)
    assert H2.is_zero_class(restricted.values)
