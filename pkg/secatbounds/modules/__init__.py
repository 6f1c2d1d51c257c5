from secatbounds.modules.gmodule import GMap, GModule
from secatbounds.modules.standard import (
    AugmentationIdeal,
    augmentation_eps,
    augmentation_ideal_K,
    augmentation_submodule,
    equivariant_maps,
    group_ring,
    hom_module,
    ideal_I,
    invariants,
    permutation_module,
    pullback_module,
    regular_action,
    restrict,
    set_permutation_module,
    sigma,
    tensor_power,
    tensor_product,
    trivial_module,
)

__all__ = [
    "AugmentationIdeal",
    "GMap",
    "GModule",
    "augmentation_eps",
    "augmentation_ideal_K",
    "augmentation_submodule",
    "equivariant_maps",
    "group_ring",
    "hom_module",
    "ideal_I",
    "invariants",
    "permutation_module",
    "pullback_module",
    "regular_action",
    "restrict",
    "set_permutation_module",
    "sigma",
    "tensor_power",
    "tensor_product",
    "trivial_module",
]
