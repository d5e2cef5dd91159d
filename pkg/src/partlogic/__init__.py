"""Boolean operations on set partitions: lattice operations, implication and
the graph and closure constructions for arbitrary truth tables."""

from .boolops import (
    AND,
    BINARY_TABLES,
    IMP,
    OR,
    XOR,
    TruthTable,
    closure_method,
    graph_method,
    implication_blocks,
    join_blocks,
    meet_blocks,
    resolve_table,
    table_from_string,
)
from .core import (
    BinaryRelation,
    Partition,
    Universe,
    components,
    dit,
    enumerate_partitions,
    indit,
    interior,
    partition_from_blocks,
    refines,
    rst_closure,
)
from .formula import Assignment, eval_partition, eval_truth, parse, to_text
from .tautology import TautologyVerdict, VerdictKind, check_partition_tautology, check_subset_tautology

__all__ = [
    "AND",
    "BINARY_TABLES",
    "IMP",
    "OR",
    "XOR",
    "Assignment",
    "BinaryRelation",
    "Partition",
    "TautologyVerdict",
    "TruthTable",
    "Universe",
    "VerdictKind",
    "check_partition_tautology",
    "check_subset_tautology",
    "closure_method",
    "components",
    "dit",
    "enumerate_partitions",
    "eval_partition",
    "eval_truth",
    "graph_method",
    "implication_blocks",
    "indit",
    "interior",
    "join_blocks",
    "meet_blocks",
    "parse",
    "partition_from_blocks",
    "refines",
    "resolve_table",
    "rst_closure",
    "table_from_string",
    "to_text",
]
