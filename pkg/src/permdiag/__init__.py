"""Diagram combinatorics of 132-avoiding permutations.

Rothe diagrams with Fulton ranks, the corner bijection between 321- and
132-avoiders, the two Dyck-path correspondences, diagram criteria for
multi-pattern avoidance, and exact enumeration with an identity harness.
"""

from .bijection import fill_from_minima, permutation_from_partition, phi, phi_inverse
from .diagram import (
    Diagram,
    NotDominant,
    RankedDiagram,
    build_diagram,
    count_132_by_rank,
    dominant_partition,
    rank_diagram,
)
from .dyck import (
    DyckPath,
    HeightProfile,
    heights,
    make_path,
    partition_path,
    path_partition,
    psi_bjs,
    psi_bjs_inverse,
    psi_k,
    psi_k_inverse,
)
from .enumeration import (
    StatisticTable,
    ballot,
    catalan,
    closed_form,
    distribution,
    narayana,
    q_triangle,
    rank_count,
    verify_identities,
)
from .errors import PermdiagError
from .pattern import (
    ABHProfile,
    ShiftedProfile,
    abh_profile,
    avoids,
    diagram_avoidance_check,
    enumerate_avoiders,
    mu_map,
    mu_map_inverse,
    occurrences,
    shifted_profile,
    staircase_union_map,
    staircase_union_map_inverse,
)
from .perm import (
    Permutation,
    PermStats,
    code,
    inverse,
    make_permutation,
    parse_permutation,
    statistics,
)
from .young import (
    Partition,
    conjugate,
    corners,
    durfee_rank,
    fits_staircase,
    parse_partition,
    staircase_partitions,
)

__version__ = "0.1.0"

__all__ = [
    "ABHProfile",
    "Diagram",
    "DyckPath",
    "HeightProfile",
    "NotDominant",
    "Partition",
    "PermStats",
    "Permutation",
    "PermdiagError",
    "RankedDiagram",
    "ShiftedProfile",
    "StatisticTable",
    "abh_profile",
    "avoids",
    "ballot",
    "build_diagram",
    "catalan",
    "closed_form",
    "code",
    "conjugate",
    "corners",
    "count_132_by_rank",
    "diagram_avoidance_check",
    "distribution",
    "dominant_partition",
    "durfee_rank",
    "enumerate_avoiders",
    "fill_from_minima",
    "fits_staircase",
    "heights",
    "inverse",
    "make_path",
    "make_permutation",
    "mu_map",
    "mu_map_inverse",
    "narayana",
    "occurrences",
    "parse_partition",
    "parse_permutation",
    "partition_path",
    "path_partition",
    "permutation_from_partition",
    "phi",
    "phi_inverse",
    "psi_bjs",
    "psi_bjs_inverse",
    "psi_k",
    "psi_k_inverse",
    "q_triangle",
    "rank_count",
    "rank_diagram",
    "shifted_profile",
    "staircase_partitions",
    "staircase_union_map",
    "staircase_union_map_inverse",
    "statistics",
    "verify_identities",
]
