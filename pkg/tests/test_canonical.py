import pytest

from secatbounds.cohomology import canonical_class, crossed_hom_fr, psi_compare, tuple_action
from secatbounds.errors import InputError


@pytest.mark.parametrize("name, r", [("z2", 2), ("z2", 3), ("z3", 2), ("s3", 2)])
def test_crossed_hom_laws(request, name, r):
    pi = request.getfixturevalue(name)
    f = crossed_hom_fr(pi, r)
    assert f.checks == {"identity_zero": True, "crossed_law": True, "generator_formula": True}
    assert f.module.rank == pi.order ** (r - 1) - 1


@pytest.mark.parametrize("name, r", [("z2", 2), ("z2", 3), ("z3", 2), ("s3", 2)])
def test_psi_carries_relative_class_to_canonical_class(request, name, r):
    report = psi_compare(request.getfixturevalue(name), r)
    assert report.ok
    assert report.to_dict()["r"] == r


def test_canonical_class_conventions(z3):
    cocycle, f = canonical_class(z3, 2)
    assert cocycle.degree == 1
    assert "conventions_agree" in f.checks


def test_tuple_action_boundary_is_quotients(z3):
    data = tuple_action(z3, 2)
    for g in data.power.elements:
        a, b = data.power.decode(g)
        assert data.boundary[g] == z3.mul(a, z3.inv(b))


def test_r_below_two(z2):
    with pytest.raises(InputError):
        tuple_action(z2, 1)
