import numpy as np
import pytest

from secatbounds.config import Caps
from secatbounds.errors import CapExceededError, InvalidGroupError
from secatbounds.groups import subgroup_classes
from secatbounds.groups.finite_group import Subgroup, quotient_group
from secatbounds.modules import (
    GMap,
    GModule,
    augmentation_eps,
    augmentation_ideal_K,
    equivariant_maps,
    group_ring,
    hom_module,
    ideal_I,
    invariants,
    permutation_module,
    pullback_module,
    restrict,
    sigma,
    tensor_power,
    tensor_product,
    trivial_module,
)

from tests.conftest import element


def test_group_ring_and_augmentation(s3):
    ZG = group_ring(s3)
    ZG.validate()
    assert ZG.rank == 6
    K = augmentation_ideal_K(s3, ZG)
    K.module.validate()
    assert K.module.rank == 5
    assert K.inclusion.is_equivariant()
    assert augmentation_eps(s3, ZG).compose(K.inclusion).is_zero()


def test_ideal_i_is_kernel_of_sigma(s3):
    H = Subgroup.generated_by(s3, [element(s3, "(1 2)")])
    ideal = ideal_I(s3, H)
    ideal.module.validate()
    assert ideal.module.rank == 2
    assert ideal.inclusion.is_equivariant()
    assert sigma(s3, H, ideal.inclusion.target).compose(ideal.inclusion).is_zero()
    assert permutation_module(s3, H).rank == 3


def test_tensor_and_hom_are_modules(z4):
    ZG = group_ring(z4)
    K = augmentation_ideal_K(z4).module
    T = tensor_product(K, ZG)
    T.validate()
    assert T.rank == 12
    Hom = hom_module(K, ZG)
    Hom.validate()
    assert Hom.rank == 12
    assert tensor_power(K, 2).rank == 9
    assert tensor_power(K, 0).is_trivial_action


def test_tensor_rank_cap(s3):
    ZG = group_ring(s3)
    with pytest.raises(CapExceededError):
        tensor_product(ZG, ZG, Caps(max_rank=10))


def test_invariants_of_group_ring(s3):
    basis = invariants(group_ring(s3))
    assert len(basis) == 1
    assert len(set(basis[0])) == 1 and basis[0][0] != 0


def test_equivariant_maps(s3):
    Z, ZG = trivial_module(s3), group_ring(s3)
    into = equivariant_maps(Z, ZG)
    out = equivariant_maps(ZG, Z)
    assert len(into) == 1 and len(out) == 1
    assert all(f.is_equivariant() for f in into + out)


def test_restrict_and_pullback(z4):
    half = next(H for H in subgroup_classes(z4) if H.order == 2)
    ZG = group_ring(z4)
    res = restrict(ZG, half)
    res.validate()
    assert res.group.order == 2 and res.rank == 4
    Q, rho = quotient_group(z4, half)
    pulled = pullback_module(group_ring(Q), rho)
    pulled.validate()
    assert pulled.group is z4 and pulled.rank == 2


def test_non_multiplicative_action_rejected(z2):
    flip = np.array([[[1, 0], [0, 1]], [[0, 1], [1, 1]]])
    M = GModule(z2, 2, flip, name="bad")
    with pytest.raises(InvalidGroupError):
        M.validate()


def test_non_equivariant_map(z2):
    ZG = group_ring(z2)
    Z = trivial_module(z2)
    assert not GMap(ZG, Z, [[1, 0]]).is_equivariant()
