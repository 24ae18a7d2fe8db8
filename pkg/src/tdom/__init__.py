"""Repairing t-dominating graphs into threshold graphs, with the matrix
machinery, oracles and counterexamples that go with it."""

from .errors import InputError, InvariantError, ResourceError, TdomError
from .graph import (
    DominationCertificate,
    Graph,
    SplitPartition,
    dominates,
    domination_certificate,
    find_induced,
    has_induced,
    is_split,
    is_split_half_graph,
    is_t_dominating,
    is_threshold,
    local_difference,
    min_domination,
    threshold_build_sequence,
)
from .matrix import (
    BinaryMatrix,
    RegionDecomposition,
    breadth,
    is_inclusive,
    is_monotone,
    is_t_restricted,
    matrix_local_difference,
    min_restriction,
    region_decomposition,
    sort_to_monotone,
)
from .matrix_repair import PostBeamIndex, breadth_reduce, monotone_repair, post_beam_index, repair_matrix
from .pipeline import RepairReport, matrix_to_graph, reduce_to_split, repair_graph, split_to_matrix

__all__ = [
    "BinaryMatrix",
    "breadth",
    "breadth_reduce",
    "dominates",
    "domination_certificate",
    "DominationCertificate",
    "find_induced",
    "Graph",
    "has_induced",
    "InputError",
    "InvariantError",
    "is_inclusive",
    "is_monotone",
    "is_split",
    "is_split_half_graph",
    "is_t_dominating",
    "is_t_restricted",
    "is_threshold",
    "local_difference",
    "matrix_local_difference",
    "matrix_to_graph",
    "min_domination",
    "min_restriction",
    "monotone_repair",
    "post_beam_index",
    "PostBeamIndex",
    "reduce_to_split",
    "region_decomposition",
    "RegionDecomposition",
    "repair_graph",
    "repair_matrix",
    "RepairReport",
    "ResourceError",
    "sort_to_monotone",
    "split_to_matrix",
    "SplitPartition",
    "TdomError",
    "threshold_build_sequence",
]

__version__ = "0.1.0"
