from collections import Counter

import pytest

from secatbounds.config import Caps
from secatbounds.errors import CapExceededError, InvalidGroupError, NotNormalError, NotSurjectiveError
from secatbounds.groups import (
    all_subgroups,
    by_name,
    centralizer,
    conjugate_intersection,
    diagonal_conjugate_family,
    diagonal_normalizer,
    diagonal_subgroup,
    direct_power,
    metacyclic,
    normal_subgroups,
    pullback_group,
    small_groups,
    subgroup_classes,
)
from secatbounds.groups.constructions import center, is_malnormal, normalizer
from secatbounds.groups.finite_group import CosetSpace, GroupHom, Subgroup, make_group, quotient_group

from tests.conftest import element

# a Latin square with identity 0 whose elements are all involutions: no group of order 5 is like that
LOOP_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def test_make_group_trivial_table():
    G = make_group({"kind": "table", "table": [[0]]})
    assert G.order == 1 and G.identity == 0


def test_make_group_from_permutations():
    G = make_group({"kind": "perm", "degree": 3, "generators": [[[1, 2]], [[1, 2, 3]]]})
    assert G.order == 6
    assert not G.is_abelian


def test_make_group_nonabelian_table(s3):
    G = make_group({"kind": "table", "table": s3.table.tolist()})
    assert G.order == 6
    assert not G.is_abelian


def test_make_group_named():
    assert make_group({"kind": "named", "name": "D4"}).order == 8
    with pytest.raises(InvalidGroupError):
        make_group({"kind": "named", "name": "Monster"})


def test_non_associative_table_rejected():
    with pytest.raises(InvalidGroupError) as info:
        make_group({"kind": "table", "table": LOOP_5})
    assert info.value.field == "table"


def test_table_without_latin_rows_rejected():
    with pytest.raises(InvalidGroupError):
        make_group({"kind": "table", "table": [[0, 1], [1, 1]]})


def test_closure_respects_order_cap():
    with pytest.raises(CapExceededError) as info:
        make_group({"kind": "perm", "degree": 3, "generators": [[[1, 2]], [[1, 2, 3]]]}, Caps(max_order=5))
    assert info.value.cap == "max_order"


def test_direct_power(z2, z3, s3):
    K = direct_power(z2, 2)
    assert K.order == 4
    assert K.is_abelian and K.exponent == 2
    assert direct_power(s3, 1) is s3
    P = direct_power(z3, 3)
    assert P.order == 27 and P.exponent == 3


def test_direct_power_mixed_radix(z3):
    P = direct_power(z3, 2)
    for x in P.elements:
        assert P.encode(P.decode(x)) == x
    a, b = P.encode((1, 2)), P.encode((2, 2))
    assert P.decode(P.mul(a, b)) == (z3.mul(1, 2), z3.mul(2, 2))


def test_diagonal_subgroup(trivial, z2, s3):
    assert diagonal_subgroup(trivial, 2).is_trivial
    D = diagonal_subgroup(z2, 3)
    P = D.parent
    assert D.order == 2
    assert {P.decode(x) for x in D.elements} == {(g, g, g) for g in z2.elements}
    D = diagonal_subgroup(s3, 2)
    assert D.order == 6 and D.parent.order == 36


def test_centralizer(s3, z4):
    assert centralizer(s3, s3.identity).is_whole
    assert centralizer(s3, element(s3, "(1 2)")).order == 2
    assert all(centralizer(z4, g).is_whole for g in z4.elements)
    assert center(s3).is_trivial


def test_conjugate_intersection(s3):
    H = Subgroup.generated_by(s3, [element(s3, "(1 2)")])
    for h in H.elements:
        assert conjugate_intersection(s3, H, h).elements == H.elements
    assert conjugate_intersection(s3, H, element(s3, "(1 3)")).is_trivial
    assert is_malnormal(s3, H)


def test_conjugate_intersection_right_coset_independent(s3):
    for H in all_subgroups(s3):
        for x in s3.elements:
            first = conjugate_intersection(s3, H, x)
            for h in H.elements:
                assert conjugate_intersection(s3, H, s3.mul(x, h)).elements == first.elements


def test_coset_space(s3):
    H = Subgroup.generated_by(s3, [element(s3, "(1 2)")])
    space = CosetSpace(s3, H)
    assert space.index == 3
    assert sorted(g for c in space.cosets for g in c) == list(s3.elements)
    for c, rep in enumerate(space.representatives):
        assert rep == min(space.cosets[c])
    for g in s3.elements:
        for c, rep in enumerate(space.representatives):
            assert space.coset_of[s3.mul(g, rep)] == space.act(g, c)


def test_diagonal_family_identity(s3):
    family = diagonal_conjugate_family(s3, 2)
    assert family.identity_holds
    assert len(family.entries) == 36 - 6
    P = family.power
    x = P.encode((element(s3, "(1 2 3)"), s3.identity))
    intersection = dict(family.entries)[x]
    assert intersection.order == 3


def test_diagonal_family_two_transpositions(s3):
    family = diagonal_conjugate_family(s3, 2)
    P = family.power
    a, b = element(s3, "(1 2 3)"), element(s3, "(1 2)")
    x = P.encode((a, b))
    expected = {P.encode((h, h)) for h in centralizer(s3, s3.mul(a, s3.inv(b))).elements}
    assert set(dict(family.entries)[x].elements) == expected
    assert len(expected) == 2


@pytest.mark.parametrize("name", ["S3", "D4", "Q8", "D5", "A4", "D6"])
@pytest.mark.parametrize("r", [2, 3])
def test_diagonal_family_identity_nonabelian(name, r):
    assert diagonal_conjugate_family(by_name(name), r).identity_holds


def test_diagonal_family_single_coordinate(s3):
    family = diagonal_conjugate_family(s3, 3)
    P = family.power
    entries = dict(family.entries)
    for g in s3.non_identity:
        x = P.encode((g, s3.identity, s3.identity))
        constant = {P.encode((h,) * 3) for h in centralizer(s3, g).elements}
        assert set(entries[x].elements) == constant


def test_diagonal_family_abelian(z4):
    family = diagonal_conjugate_family(z4, 2)
    assert family.identity_holds
    assert all(sub.elements == family.diagonal.elements for _, sub in family.entries)


@pytest.mark.parametrize("name, self_normalizing", [("S3", True), ("Z4", False), ("Q8", False)])
def test_diagonal_normalizer(name, self_normalizing):
    report = diagonal_normalizer(by_name(name), 2)
    assert report.consistent
    assert report.self_normalizing is self_normalizing


def test_pullback_identity(s3):
    pb = pullback_group(GroupHom(s3, s3, list(s3.elements), name="id"))
    assert all(pb.checks.values())
    assert pb.group.order == 6
    assert pb.diagonal.is_whole


def test_pullback_onto_z2(z4):
    half = next(H for H in subgroup_classes(z4) if H.order == 2)
    _, rho = quotient_group(z4, half)
    pb = pullback_group(rho)
    assert all(pb.checks.values())
    assert pb.group.order == 8
    assert pb.diagonal.order == 4


def test_pullback_to_trivial(s3, trivial):
    pb = pullback_group(GroupHom(s3, trivial, [trivial.identity] * s3.order))
    assert pb.group.order == 36
    assert pb.kernel.is_whole
    assert all(pb.checks.values())


def test_pullback_needs_surjection(z2, z4):
    rho = GroupHom(z2, z4, [z4.identity, z4.identity])
    with pytest.raises(NotSurjectiveError):
        pullback_group(rho)


def test_pullback_logs_failed_phi_check(s3, monkeypatch, caplog):
    def reject(self, caps=None):
        raise InvalidGroupError("images do not respect products", field="rho")

    monkeypatch.setattr(GroupHom, "validate", reject)
    with caplog.at_level("ERROR", logger="secatbounds.groups.constructions"):
        pb = pullback_group(GroupHom(s3, s3, list(s3.elements), name="id"))
    assert pb.checks["phi_homomorphism"] is False
    assert any(r.levelname == "ERROR" and "phi failed" in r.getMessage() for r in caplog.records)


def test_quotient_needs_normal(s3):
    with pytest.raises(NotNormalError):
        quotient_group(s3, Subgroup.generated_by(s3, [element(s3, "(1 2)")]))


def test_subgroup_validation(s3):
    with pytest.raises(InvalidGroupError):
        Subgroup.from_elements(s3, [s3.identity, element(s3, "(1 2)"), element(s3, "(1 3)")])


def test_catalog_subgroups(s3):
    assert len(all_subgroups(s3)) == 6
    assert len(subgroup_classes(s3)) == 4
    assert [N.order for N in normal_subgroups(s3)] == [1, 3, 6]


def test_small_groups_complete_up_to_eight():
    groups = small_groups(8)
    assert len(groups) == 14
    assert all(G.order <= 8 for G in groups)
    assert by_name("Z2xZ2xZ2").order == 8
    with pytest.raises(KeyError):
        by_name("X5")


def _fingerprint(G):
    orders = Counter(G.element_order(g) for g in G.elements)
    squares = {G.mul(g, g) for g in G.elements}
    central_involutions = sum(1 for g in center(G).elements if G.element_order(g) == 2)
    return G.order, G.is_abelian, tuple(sorted(orders.items())), len(squares), central_involutions


def test_small_groups_complete_up_to_sixteen():
    groups = small_groups(16)
    per_order = Counter(G.order for G in groups)
    assert per_order == {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1,
                         12: 5, 13: 1, 14: 2, 15: 1, 16: 14}
    assert len({_fingerprint(G) for G in groups}) == len(groups)
    assert len(small_groups(12)) == 24


@pytest.mark.parametrize("name, order", [("Dic3", 12), ("Q16", 16), ("SD16", 16), ("M16", 16),
                                         ("Z4:Z4", 16), ("Z2^2:Z4", 16), ("Pauli", 16), ("Q8xZ2", 16)])
def test_named_nonabelian_groups(name, order):
    G = by_name(name)
    assert G.order == order
    assert not G.is_abelian


def test_metacyclic_needs_a_valid_twist():
    with pytest.raises(ValueError):
        metacyclic(8, 2, 2)


def test_normalizer(s3):
    H = Subgroup.generated_by(s3, [element(s3, "(1 2)")])
    assert normalizer(s3, H).order == 2
    A3 = Subgroup.generated_by(s3, [element(s3, "(1 2 3)")])
    assert normalizer(s3, A3).is_whole
