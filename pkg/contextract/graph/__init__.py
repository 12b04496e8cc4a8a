"""Term graphs and their parameterizable merge"""

from ._consolidated import ConsolidatedGraph
from ._dot import to_dot
from ._merge import (
    ACCUMULATE,
    CombineRule,
    DisjointRule,
    ExclusiveEdgeRule,
    MergePolicy,
    fold_merge,
    guarded,
    merge,
)
from ._nodes import (
    ConceptNode,
    Edge,
    LeafNode,
    NodeRef,
    WeightedEdge,
    is_leaf,
    node_sort_key,
)
from ._term_graph import (
    TermGraph,
    WeightDirection,
    WeightScheme,
    build_term_graph,
)

__all__ = [
    "ACCUMULATE",
    "CombineRule",
    "ConceptNode",
    "ConsolidatedGraph",
    "DisjointRule",
    "Edge",
    "ExclusiveEdgeRule",
    "LeafNode",
    "MergePolicy",
    "NodeRef",
    "TermGraph",
    "WeightDirection",
    "WeightScheme",
    "WeightedEdge",
    "build_term_graph",
    "fold_merge",
    "guarded",
    "is_leaf",
    "merge",
    "node_sort_key",
    "to_dot",
]
