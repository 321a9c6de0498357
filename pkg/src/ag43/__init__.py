"""Exact computation workbench for the affine geometry AG(4,3):
caps, anchor points, demicaps, maximal-cap partitions, and the
stabilizer action on the grid of 36.
"""

from . import geometry
from .caps import (
    MaximalCap,
    canonical_cap,
    completion_counts,
    enumerate_maximal_caps,
    find_anchor,
    hyperplane_profile,
    is_cap,
    is_complete_cap,
    max_cap_size,
)
from .demicaps import (
    Demicap,
    DemicapDecomposition,
    corresponding_cap,
    decompositions,
    demicaps_in_cap,
    enumerate_demicaps,
    recognize_demicap,
)
from .partitions import (
    CapPartition,
    GridOf36,
    classify_partners,
    completions,
    disjoint_maximal_caps,
    grid36,
    unique_partition,
)
from .symmetry import AffineMap, LinearMap, cap_stabilizer, demicap_stabilizer

__all__ = [
    "AffineMap",
    "CapPartition",
    "Demicap",
    "DemicapDecomposition",
    "GridOf36",
    "LinearMap",
    "MaximalCap",
    "canonical_cap",
    "cap_stabilizer",
    "classify_partners",
    "completion_counts",
    "completions",
    "corresponding_cap",
    "decompositions",
    "demicap_stabilizer",
    "demicaps_in_cap",
    "disjoint_maximal_caps",
    "enumerate_demicaps",
    "enumerate_maximal_caps",
    "find_anchor",
    "geometry",
    "grid36",
    "hyperplane_profile",
    "is_cap",
    "is_complete_cap",
    "max_cap_size",
    "recognize_demicap",
    "unique_partition",
]
