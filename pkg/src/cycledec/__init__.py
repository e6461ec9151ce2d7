"""Cycle decompositions of Eulerian multigraphs.

Build graphs with three identification operators, undo them with
vertex-edge and edge separations, and recognize in polynomial time the
connected even graphs whose cycle-decomposition size is forced. Exhaustive
engines double as ground truth on small inputs, seeded generators produce
family instances, and the cycledec CLI fronts all of it.
"""

from .errors import (
    ComponentTooLargeError,
    DegreeNotTwoError,
    GraphError,
    GraphSyntaxError,
    InvalidParamError,
    InvalidVertexError,
    LoopEdgeError,
    NeighboursNotDistinctError,
    NotACutVertexError,
    NotAnEndpointError,
    NotASeparatorError,
    NotATwoCutError,
    NotBiconnectedError,
    NotClassHError,
    NotEulerianError,
    OddDegreeError,
    PreconditionViolatedError,
    SharedEndpointError,
    TooLargeError,
    VertexOutOfRangeError,
)
from .multigraph import (
    Cycle,
    CycleDecomposition,
    MultiGraph,
    degree,
    endpoint_multiset,
    induced_subgraph,
    is_eulerian,
    is_eulerian_multiedge,
    neighbours,
    parse_graph,
    resolve,
    validate_cycle_decomposition,
    write_graph,
)
from .connectivity import (
    Block,
    BlockForest,
    blocks,
    connected_components,
    cut_vertices,
    find_cut_edge,
    is_biconnected,
    is_two_edge_connected,
    split_at_cut_vertex,
)
from .operators import (
    EdgeSeparationRecord,
    OperatorApplication,
    VESeparator,
    VeSeparationRecord,
    edge_identification,
    edge_separation_step,
    find_cut_edge_avoiding,
    find_disjoint_two_cut,
    find_ve_separator,
    ve_separation_step,
    vertex_edge_identification,
    vertex_identification,
)
from .oracle import (
    DEFAULT_EDGE_LIMIT,
    NecklaceTree,
    OracleResult,
    decompose_class_H,
    enumerate_simple_cycles,
    has_triple_intersecting_cycle_pair,
    is_class_H,
    is_class_H_prime,
    is_closed_necklace,
    is_treewidth_at_most_2,
    oracle_cycle_numbers,
    verify_necklace_replay,
)
from .recognition import (
    DecompositionTrace,
    RecognitionVerdict,
    TraceComponent,
    VeStep,
    cycle_numbers_via_decomposition,
    fused_bridge_probe,
    is_cycle_number_unique,
    is_cycle_number_unique_biconnected,
    replay_trace,
    test_and_decompose,
    ve_components,
)
from .generators import (
    Rng,
    gen_class_G,
    gen_class_H,
    gen_class_H_prime,
    gen_closed_necklace,
    gen_cycle,
    gen_eulerian_multiedge,
    gen_random_eulerian,
    parse_script,
    replay_script,
    script_to_text,
    subdivide_edge,
)

__version__ = "0.1.0"

__all__ = [
    "Block",
    "BlockForest",
    "ComponentTooLargeError",
    "Cycle",
    "CycleDecomposition",
    "DEFAULT_EDGE_LIMIT",
    "DecompositionTrace",
    "DegreeNotTwoError",
    "EdgeSeparationRecord",
    "GraphError",
    "GraphSyntaxError",
    "InvalidParamError",
    "InvalidVertexError",
    "LoopEdgeError",
    "MultiGraph",
    "NecklaceTree",
    "NeighboursNotDistinctError",
    "NotACutVertexError",
    "NotAnEndpointError",
    "NotASeparatorError",
    "NotATwoCutError",
    "NotBiconnectedError",
    "NotClassHError",
    "NotEulerianError",
    "OddDegreeError",
    "OperatorApplication",
    "OracleResult",
    "PreconditionViolatedError",
    "RecognitionVerdict",
    "Rng",
    "SharedEndpointError",
    "TooLargeError",
    "TraceComponent",
    "VESeparator",
    "VeSeparationRecord",
    "VeStep",
    "VertexOutOfRangeError",
    "blocks",
    "connected_components",
    "cut_vertices",
    "cycle_numbers_via_decomposition",
    "decompose_class_H",
    "degree",
    "edge_identification",
    "edge_separation_step",
    "endpoint_multiset",
    "enumerate_simple_cycles",
    "find_cut_edge",
    "find_cut_edge_avoiding",
    "find_disjoint_two_cut",
    "find_ve_separator",
    "fused_bridge_probe",
    "gen_class_G",
    "gen_class_H",
    "gen_class_H_prime",
    "gen_closed_necklace",
    "gen_cycle",
    "gen_eulerian_multiedge",
    "gen_random_eulerian",
    "has_triple_intersecting_cycle_pair",
    "induced_subgraph",
    "is_biconnected",
    "is_class_H",
    "is_class_H_prime",
    "is_closed_necklace",
    "is_cycle_number_unique",
    "is_cycle_number_unique_biconnected",
    "is_eulerian",
    "is_eulerian_multiedge",
    "is_treewidth_at_most_2",
    "is_two_edge_connected",
    "neighbours",
    "oracle_cycle_numbers",
    "parse_graph",
    "parse_script",
    "replay_script",
    "replay_trace",
    "resolve",
    "script_to_text",
    "split_at_cut_vertex",
    "subdivide_edge",
    "test_and_decompose",
    "validate_cycle_decomposition",
    "ve_components",
    "ve_separation_step",
    "vertex_edge_identification",
    "vertex_identification",
    "write_graph",
]
