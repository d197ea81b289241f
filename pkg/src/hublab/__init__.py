"""Hub labelings and hierarchical hub labelings: constructions, verification,
and exact size bounds on hypercubes."""

from .graph import (
    Graph,
    SubcubeDescriptor,
    bfs_distances,
    hypercube,
    induced_subcube,
    random_automorphism,
)
from .labeling import (
    Labeling,
    NO_COMMON_HUB,
    is_hierarchical,
    load_labeling,
    query,
    save_labeling,
    total_size,
    verify_cover,
)
from .constructions import (
    VertexOrder,
    canonical_labeling,
    halfsplit_hl,
    subset_hhl,
)
from .greedy import coverage_progress, greedy_hl, greedy_run

__all__ = [
    "Graph",
    "SubcubeDescriptor",
    "bfs_distances",
    "hypercube",
    "induced_subcube",
    "random_automorphism",
    "Labeling",
    "NO_COMMON_HUB",
    "is_hierarchical",
    "load_labeling",
    "query",
    "save_labeling",
    "total_size",
    "verify_cover",
    "VertexOrder",
    "canonical_labeling",
    "halfsplit_hl",
    "subset_hhl",
    "coverage_progress",
    "greedy_hl",
    "greedy_run",
]

__version__ = "0.1.0"
