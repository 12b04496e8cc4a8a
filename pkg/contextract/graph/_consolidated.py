from typing import (
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Set,
)

import networkx as nx

from contextract.core import Weight

from ._nodes import (
    ConceptNode,
    Edge,
    LeafNode,
    NodeRef,
    WeightedEdge,
    is_leaf,
    node_sort_key,
)
from ._term_graph import TermGraph


class ConsolidatedGraph:
    """Weighted directed graph accumulated from term graphs

    Wraps a ``networkx.DiGraph`` whose edges carry ``weight`` and ``count``
    (the number of merged graphs that contributed the edge). Instances are
    treated as values: merging and pruning return new graphs.

    Parameters
    ----------
    edges : mapping (source, target) -> weight, optional
        Initial edges, each counted once.

    nodes : iterable of NodeRef, optional
        Extra nodes, possibly isolated.
    """

    def __init__(
        self,
        edges: Optional[Mapping[Edge, Weight]] = None,
        nodes: Iterable[NodeRef] = (),
    ):
        self._graph = nx.DiGraph()
        self._graph.add_nodes_from(nodes)
        for (source, target), weight in (edges or {}).items():
            self._graph.add_edge(source, target, weight=weight, count=1)

    @classmethod
    def from_term_graph(cls, graph: TermGraph) -> "ConsolidatedGraph":
        return cls(graph.edges, graph.levels)

    @classmethod
    def _wrap(cls, graph: nx.DiGraph) -> "ConsolidatedGraph":
        wrapped = cls()
        wrapped._graph = graph
        return wrapped

    @property
    def graph(self) -> nx.DiGraph:
        """Read-only networkx view"""
        return self._graph.copy(as_view=True)

    @property
    def nodes(self) -> Set[NodeRef]:
        return set(self._graph.nodes)

    @property
    def edges(self) -> Dict[Edge, Weight]:
        return {
            (source, target): weight
            for source, target, weight in self._graph.edges(data="weight")
        }

    def weighted_edges(self) -> List[WeightedEdge]:
        return [
            WeightedEdge(source, target, weight)
            for source, target, weight in self._graph.edges(data="weight")
        ]

    def weight(self, source: NodeRef, target: NodeRef) -> Weight:
        return self._graph[source][target]["weight"]

    def count(self, source: NodeRef, target: NodeRef) -> int:
        return self._graph[source][target]["count"]

    def concept_nodes(self) -> List[ConceptNode]:
        return sorted(
            (node for node in self._graph if not is_leaf(node)), key=node_sort_key
        )

    def leaves(self) -> List[LeafNode]:
        return sorted((node for node in self._graph if is_leaf(node)), key=node_sort_key)

    def is_empty(self) -> bool:
        return self._graph.number_of_nodes() == 0

    def copy(self) -> "ConsolidatedGraph":
        return self._wrap(self._graph.copy())

    def subgraph(self, nodes: Iterable[NodeRef]) -> "ConsolidatedGraph":
        return self._wrap(self._graph.subgraph(nodes).copy())

    def __len__(self) -> int:
        return self._graph.number_of_nodes()

    def __contains__(self, node) -> bool:
        return node in self._graph

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConsolidatedGraph):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    def __repr__(self) -> str:
        return "ConsolidatedGraph(nodes={0}, edges={1})".format(
            self._graph.number_of_nodes(), self._graph.number_of_edges()
        )
