"""Parameterizable merge of weighted graphs

``merge(A, B, policy)`` combines an accumulator graph ``A`` with a graph
``B``. The policy decides:

- how the weights of an edge present in both graphs combine,
- what happens to edges that only ``B`` has,
- what happens when ``A`` and ``B`` have no node in common.

Edges that only ``A`` has are always kept unchanged.
"""
import logging
import math
from enum import Enum
from typing import (
    Callable,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Union,
)

import networkx as nx

from contextract.core import Weight, maybe_pool

from ._consolidated import ConsolidatedGraph
from ._nodes import Edge
from ._term_graph import TermGraph

Graph = Union[TermGraph, ConsolidatedGraph]
CombineFunction = Callable[[Weight, Weight, Edge, int], Weight]


def _check_finite(name: str, value: float, allow_negative: bool = True):
    if not math.isfinite(value) or (not allow_negative and value < 0):
        msg = "{0}({1}) must be finite{2}".format(
            name, value, "" if allow_negative else " and non-negative"
        )
        logging.error(msg)
        raise ValueError(msg)


class CombineRule(NamedTuple):
    """Combination of the weights of an edge present in both graphs

    ``alpha`` is the accumulator's weight, ``beta`` the incoming one. Plain
    addition is ``epsilon = 1``; ``function`` overrides the arithmetic with
    ``function(alpha, beta, edge, count)``, where ``count`` is the number of
    graphs that already contributed the edge to the accumulator.
    """

    epsilon: float = 1.0
    function: Optional[CombineFunction] = None

    @classmethod
    def add(cls) -> "CombineRule":
        return cls()

    @classmethod
    def add_scaled(cls, epsilon: float) -> "CombineRule":
        _check_finite("epsilon", epsilon)
        return cls(epsilon=float(epsilon))

    @classmethod
    def custom(cls, function: CombineFunction) -> "CombineRule":
        return cls(function=function)

    @property
    def is_addition(self) -> bool:
        return self.function is None and self.epsilon == 1

    def __call__(self, alpha: Weight, beta: Weight, edge: Edge, count: int) -> Weight:
        if self.function is not None:
            return self.function(alpha, beta, edge, count)
        if self.epsilon == 1:
            return alpha + beta
        return alpha + self.epsilon * beta


class ExclusiveEdgeRule(NamedTuple):
    """Treatment of edges only the incoming graph has

    ``factor`` scales their weight; ``None`` drops them.
    """

    factor: Optional[float] = 1.0

    @classmethod
    def keep(cls) -> "ExclusiveEdgeRule":
        return cls()

    @classmethod
    def keep_scaled(cls, factor: float) -> "ExclusiveEdgeRule":
        _check_finite("factor", factor, allow_negative=False)
        return cls(factor=float(factor))

    @classmethod
    def drop(cls) -> "ExclusiveEdgeRule":
        return cls(factor=None)

    def __call__(self, beta: Weight) -> Optional[Weight]:
        if self.factor is None:
            return None
        if self.factor == 1:
            return beta
        return self.factor * beta


class DisjointRule(str, Enum):
    """Treatment of an incoming graph sharing no node with the accumulator"""

    UNION = "union"
    DROP_B = "drop-b"


class MergePolicy(NamedTuple):
    combine: CombineRule = CombineRule.add()
    exclusive: ExclusiveEdgeRule = ExclusiveEdgeRule.keep()
    disjoint: DisjointRule = DisjointRule.UNION

    @property
    def is_order_invariant(self) -> bool:
        return (
            self.combine.is_addition
            and self.exclusive.factor == 1
            and self.disjoint == DisjointRule.UNION
        )


ACCUMULATE = MergePolicy()


def guarded(epsilon: float = 1.0) -> MergePolicy:
    """Policy that ignores incoming graphs unrelated to the accumulator"""
    return MergePolicy(
        combine=CombineRule.add_scaled(epsilon),
        exclusive=ExclusiveEdgeRule.keep(),
        disjoint=DisjointRule.DROP_B,
    )


def _edges_and_nodes(graph: Graph):
    if isinstance(graph, TermGraph):
        return graph.edges, graph.levels, lambda edge: 1
    return graph.edges, graph.nodes, lambda edge: graph.count(*edge)


def _merge_into(accumulator: nx.DiGraph, incoming: Graph, policy: MergePolicy):
    edges, nodes, contributions = _edges_and_nodes(incoming)
    if not any(node in accumulator for node in nodes):
        if policy.disjoint == DisjointRule.DROP_B:
            return
    for (source, target), beta in edges.items():
        if accumulator.has_edge(source, target):
            data = accumulator[source][target]
            data["weight"] = policy.combine(
                data["weight"], beta, (source, target), data["count"]
            )
            data["count"] += contributions((source, target))
            continue
        weight = policy.exclusive(beta)
        if weight is not None:
            accumulator.add_edge(
                source, target, weight=weight, count=contributions((source, target))
            )
    if policy.disjoint == DisjointRule.UNION:
        accumulator.add_nodes_from(nodes)


def merge(
    accumulator: ConsolidatedGraph, incoming: Graph, policy: MergePolicy = ACCUMULATE
) -> ConsolidatedGraph:
    """Merge ``incoming`` into a copy of ``accumulator``

    Examples
    --------
    >>> from contextract.graph import ConceptNode as C
    >>> a = ConsolidatedGraph({(C(0), C(1)): 2})
    >>> b = ConsolidatedGraph({(C(0), C(1)): 3})
    >>> merge(a, b).edges
    {(ConceptNode(concept=0), ConceptNode(concept=1)): 5}
    """
    result = accumulator.copy()
    _merge_into(result._graph, incoming, policy)
    return result


def _fold_chunk(args) -> ConsolidatedGraph:
    graphs, policy = args
    return fold_merge(graphs, policy)


def _chunks(items: Sequence, n: int) -> List[Sequence]:
    size = max(1, -(-len(items) // n))
    return [items[i : i + size] for i in range(0, len(items), size)]


def fold_merge(
    graphs: Iterable[Graph],
    policy: MergePolicy = ACCUMULATE,
    seed: Optional[ConsolidatedGraph] = None,
    n_jobs: int = 1,
) -> ConsolidatedGraph:
    """Left fold of ``merge`` over graphs in their given order

    The accumulator starts as ``seed``; without a seed, or with an empty one,
    the first graph takes that role. Each following graph is merged in as
    ``B``.

    Parameters
    ----------
    graphs : iterable of TermGraph or ConsolidatedGraph
        Graphs in document occurrence order.

    policy : MergePolicy
        Merge parameters, fixed for the whole fold.

    seed : ConsolidatedGraph, optional
        Initial accumulator. It is not modified.

    n_jobs : int, default 1
        Number of processes for a chunked reduction. Only order-invariant
        policies are reduced in parallel; any other policy is folded
        sequentially.
    """
    graphs = list(graphs)
    if seed is not None and not seed.is_empty():
        accumulator = seed._graph.copy()
    elif graphs:
        accumulator = ConsolidatedGraph()._graph
        _merge_into(accumulator, graphs[0], ACCUMULATE)
        graphs = graphs[1:]
    else:
        return ConsolidatedGraph()

    if n_jobs != 1 and len(graphs) > 1:
        if policy.is_order_invariant:
            with maybe_pool(n_jobs) as pool:
                n_chunks = getattr(pool, "_processes", 1)
                graphs = pool.map(
                    _fold_chunk, [(chunk, policy) for chunk in _chunks(graphs, n_chunks)]
                )
        else:
            logging.warning(
                "Order-dependent merge policy folded sequentially despite n_jobs={0}.".format(
                    n_jobs
                )
            )
    for graph in graphs:
        _merge_into(accumulator, graph, policy)
    return ConsolidatedGraph._wrap(accumulator)
