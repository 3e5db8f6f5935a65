from koszulkit.spaces.catalogue import (
    cohomology_presentation,
    configuration_presentation,
    infinitesimal_braid_presentation,
    pbw_config_count,
)
from koszulkit.spaces.descriptors import (
    ConfigurationSpace,
    HighlyConnectedManifold,
    LoopSpaceOf,
    Presented,
    Product,
    SpaceDescriptor,
    Sphere,
    Suspension,
    Wedge,
    space_adapter,
)
from koszulkit.spaces.homotopy import (
    free_gerstenhaber_dims,
    homotopy_groups,
    homotopy_lie,
    is_rational_kpi1,
    loop_homology,
)

__all__ = [
    "ConfigurationSpace",
    "HighlyConnectedManifold",
    "LoopSpaceOf",
    "Presented",
    "Product",
    "SpaceDescriptor",
    "Sphere",
    "Suspension",
    "Wedge",
    "cohomology_presentation",
    "configuration_presentation",
    "free_gerstenhaber_dims",
    "homotopy_groups",
    "homotopy_lie",
    "infinitesimal_braid_presentation",
    "is_rational_kpi1",
    "loop_homology",
    "pbw_config_count",
    "space_adapter",
]
