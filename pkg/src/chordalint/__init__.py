"""Bounded-size intervention design for learning causal orientations on chordal skeletons."""

from .graphs import (
    Coloring,
    Forest,
    GraphStats,
    NotChordalError,
    Ordering,
    Skeleton,
    greedy_color,
    is_chordal,
    max_clique,
    max_independent_set,
    mcs_peo,
    subtree_split,
    two_color_forest,
)
from .pdag import (
    Dag,
    NoExtensionError,
    OrientationConflictError,
    Pdag,
    brute_force_closure,
    chain_components,
    find_immoralities,
    meek_closure,
    merge_orientations,
    orient_from_ordering,
)
from .sepsys import (
    LabelMatrix,
    SeparatingSystem,
    build_separating_system,
    build_separating_system_capped,
    chromatic_lower_bound,
    info_lower_bound,
    katona_lower_bound,
    label_elements,
    verify_separating,
)
from .oracle import GroundTruth, InterventionSizeError, Responder, Transcript
from .strategies import (
    StrategyResult,
    centroid,
    hybrid_adaptive,
    naive_nonadaptive,
    randomized_block,
    score,
    tree_adaptive,
)
from .instances import (
    complete_dag,
    line_of_cliques,
    random_chordal,
    split_graph_instance,
)

__all__ = [name for name in dir() if not name.startswith("_")]
