"""Subgraph complementation toolkit.

Decide whether flipping the edges inside some vertex set S turns a graph
into a member of a target class (K_t-free and friends), enumerate the
split-partition structures behind the polynomial solver, and generate the
SAT reduction instances showing where the problem turns hard.
"""

from .errors import (
    BadPair,
    CapMismatch,
    InvalidArgs,
    InvalidPattern,
    InvalidSeed,
    InvalidT,
    KindMismatch,
    LengthMismatch,
    MalformedG6,
    NonUniformClause,
    NotSatisfying,
    NullGraph,
    ParseError,
    PatternTooSmall,
    RecognizerMismatch,
    RepeatedVariable,
    SubcompError,
    TooManyVariables,
    WidthTooSmall,
    WrongWidth,
)
from .gadgets import (
    GadgetInstance,
    Role,
    assignment_from_solution,
    c8_gadget,
    certificate_json,
    cycle_inductive,
    expected_size,
    k15_gadget,
    p7_gadget,
    p8_gadget,
    path_inductive,
    solution_from_assignment,
    star_inductive,
)
from .graphs import (
    Graph,
    InducedCopy,
    PatternSpec,
    VertexSet,
    all_adjacent,
    complement,
    cross_product,
    degeneracy,
    disjoint_union,
    find_induced,
    g6_decode,
    g6_encode,
    graph_from_edges,
    graph_from_json,
    graph_to_json,
    induced,
    is_module,
    is_pattern_free,
    make_pattern,
    no_instance,
    subgraph_complement,
)
from .sat import (
    Assignment,
    CnfFormula,
    brute_sat,
    check_threshold,
    emit_dimacs,
    lift,
    parse_dimacs,
)
from .solvers import (
    EightRegions,
    SolveReport,
    brute_solve,
    kt_free_recognizer,
    pair_regions,
    solve_complement_class,
    solve_kt_free,
)
from .split import (
    RamseyBound,
    SplitPartition,
    enumerate_split_partitions,
    find_split_partition,
    has_clique,
    is_split_partition,
    ramsey_bound,
)

__all__ = [
    "Assignment",
    "BadPair",
    "CapMismatch",
    "CnfFormula",
    "EightRegions",
    "GadgetInstance",
    "Graph",
    "InducedCopy",
    "InvalidArgs",
    "InvalidPattern",
    "InvalidSeed",
    "InvalidT",
    "KindMismatch",
    "LengthMismatch",
    "MalformedG6",
    "NonUniformClause",
    "NotSatisfying",
    "NullGraph",
    "ParseError",
    "PatternSpec",
    "PatternTooSmall",
    "RamseyBound",
    "RecognizerMismatch",
    "RepeatedVariable",
    "Role",
    "SolveReport",
    "SplitPartition",
    "SubcompError",
    "TooManyVariables",
    "VertexSet",
    "WidthTooSmall",
    "WrongWidth",
    "all_adjacent",
    "assignment_from_solution",
    "brute_sat",
    "brute_solve",
    "c8_gadget",
    "certificate_json",
    "check_threshold",
    "complement",
    "cross_product",
    "cycle_inductive",
    "degeneracy",
    "disjoint_union",
    "emit_dimacs",
    "enumerate_split_partitions",
    "expected_size",
    "find_induced",
    "find_split_partition",
    "g6_decode",
    "g6_encode",
    "graph_from_edges",
    "graph_from_json",
    "graph_to_json",
    "has_clique",
    "induced",
    "is_module",
    "is_pattern_free",
    "is_split_partition",
    "k15_gadget",
    "kt_free_recognizer",
    "lift",
    "make_pattern",
    "no_instance",
    "p7_gadget",
    "p8_gadget",
    "pair_regions",
    "parse_dimacs",
    "path_inductive",
    "ramsey_bound",
    "solution_from_assignment",
    "solve_complement_class",
    "solve_kt_free",
    "star_inductive",
    "subgraph_complement",
]

__version__ = "0.1.0"
