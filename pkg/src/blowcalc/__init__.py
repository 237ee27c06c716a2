"""Exact blow-up calculus on weighted graphs, integer sequences and chains."""

from .classify import (
    ClassFingerprint,
    EdgeMapData,
    EtaVector,
    SharpGraph,
    branch_weight_vector,
    canonical_edge_map,
    canonical_eta,
    canonical_forest,
    delta_c,
    edge_map,
    eta_of,
    fingerprint,
    forests_equivalent,
    minimal_models,
    sharp_graph,
    transplant,
)
from .enumeration import (
    EnumBounds,
    EPair,
    Enumeration,
    ParamTriple,
    UnsupportedDepthError,
    e_pairs,
    is_geometric_chain,
    m_oplus,
    minimal_in_class,
)
from .graph import (
    BlowRecord,
    GraphError,
    NotAForestError,
    WeightedGraph,
    automorphisms,
    blow_down,
    blow_up_edge,
    blow_up_free,
    blow_up_vertex,
    canonical_code,
    chain,
    components,
    contractible_vertices,
    is_forest,
    is_strict,
    minimalize,
)
from .invariants import IntersectionMatrix, det_graph, hodge_graph, intersection_matrix
from .oracle import (
    SearchBounds,
    Verdict,
    bfs_forest_class,
    bfs_seq_class,
    oracle_forests_equivalent,
    oracle_min_elements,
    oracle_seq_equivalent,
)
from .sequences import (
    CanonicalSeq,
    PathType,
    SubPair,
    admissible_from_pair,
    canonical_form,
    chain_equivalent,
    class_is_prime,
    class_predecessor,
    class_successor,
    delta,
    is_minimal_seq,
    seq_blow_down,
    seq_blow_ups,
    seq_det,
    seq_det_i,
    seq_det_star,
    seq_equivalent,
    seq_hodge,
    sub,
    sub_bar,
    tau_equivalent,
    transpose,
)
from .skeleton import SkeletalMap, is_pseudo_minimal, path_type, paths, skeleton_of, w_gamma
from .textio import format_graph, format_seq, parse_chain, parse_graph, parse_input

__version__ = "0.1.0"
