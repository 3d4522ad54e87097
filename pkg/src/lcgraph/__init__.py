"""Local Clifford equivalence of graph states, decided in polynomial time.

The package decides whether two graph states (equivalently, two simple
labeled graphs) are related by local Clifford operations, and produces an
explicit per-qubit witness operator when they are.  It also provides local
complementation, reduction of arbitrary stabilizer states to graph states,
and a brute-force orbit oracle for independent verification at small sizes.
"""

from .gf2 import (
    BitMatrix,
    BitVector,
    SingularMatrixError,
    StreamingEliminator,
    invert,
    mat_mul,
    null_space,
    rank,
    reduced_row_echelon,
)
from .graphs import (
    Graph,
    GraphFormatError,
    apply_lc_sequence,
    connected_components,
    induced_subgraph,
    iter_graphs,
    local_complement,
    parse_edge_list,
    parse_graph6,
    serialize_edge_list,
    serialize_graph6,
)
from .symplectic import (
    SINGLE_QUBIT_CLASSES,
    GeneratorMatrix,
    LocalCliffordOp,
    StabilizerFormatError,
    apply_local_clifford,
    classify_single_qubit,
    graph_generator,
    parse_pauli_stabilizer,
    stabilizer_to_graph,
    symplectic_form,
    symplectic_product,
)
from .equivalence import (
    ComponentReport,
    SolutionSpace,
    Verdict,
    Witness,
    assemble_witness,
    check_equivalence,
    find_admissible,
    is_admissible,
    solve_system,
    system_row,
    verify_witness,
    verify_witness_stages,
)
from .orbit import (
    DEFAULT_ORBIT_CAP,
    Orbit,
    oracle_equivalent,
    orbit_bfs,
    partition_connected_graphs,
)

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "BitVector",
    "ComponentReport",
    "DEFAULT_ORBIT_CAP",
    "GeneratorMatrix",
    "Graph",
    "GraphFormatError",
    "LocalCliffordOp",
    "Orbit",
    "SINGLE_QUBIT_CLASSES",
    "SingularMatrixError",
    "SolutionSpace",
    "StabilizerFormatError",
    "StreamingEliminator",
    "Verdict",
    "Witness",
    "apply_lc_sequence",
    "apply_local_clifford",
    "assemble_witness",
    "check_equivalence",
    "classify_single_qubit",
    "connected_components",
    "find_admissible",
    "graph_generator",
    "induced_subgraph",
    "invert",
    "is_admissible",
    "iter_graphs",
    "local_complement",
    "mat_mul",
    "null_space",
    "oracle_equivalent",
    "orbit_bfs",
    "parse_edge_list",
    "parse_graph6",
    "parse_pauli_stabilizer",
    "partition_connected_graphs",
    "rank",
    "reduced_row_echelon",
    "serialize_edge_list",
    "serialize_graph6",
    "solve_system",
    "stabilizer_to_graph",
    "symplectic_form",
    "symplectic_product",
    "system_row",
    "verify_witness",
    "verify_witness_stages",
]
