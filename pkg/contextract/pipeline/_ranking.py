import logging
from typing import (
    AbstractSet,
    Dict,
    List,
    Optional,
    Set,
)

import networkx as nx

from contextract.core import ConceptId
from contextract.graph import ConceptNode, ConsolidatedGraph, LeafNode, is_leaf
from contextract.tor import Taxonomy

from ._result import ScoredContext, ScoredKeyword


def _label(concept: ConceptId, taxonomy: Optional[Taxonomy]) -> str:
    return taxonomy.label(concept) if taxonomy is not None else str(concept)


def score_contexts(
    graph: ConsolidatedGraph, taxonomy: Optional[Taxonomy] = None
) -> List[ScoredContext]:
    """Rank concept nodes by the total weight of their incident edges

    Ties are broken by ascending concept id, which is the canonical label
    order of the taxonomy.
    """
    degrees = graph.graph.degree(weight="weight")
    scored = [
        ScoredContext(node.concept, _label(node.concept, taxonomy), degrees[node])
        for node in graph.concept_nodes()
    ]
    scored.sort(key=lambda context: (-context.score, context.concept))
    return scored


def _context_nodes(
    graph: ConsolidatedGraph, contexts: AbstractSet[ConceptId]
) -> List[ConceptNode]:
    nodes = [ConceptNode(concept) for concept in sorted(contexts)]
    missing = [node.concept for node in nodes if node not in graph]
    if missing:
        msg = "Contexts missing from the graph: {0}".format(missing)
        logging.error(msg)
        raise ValueError(msg)
    return nodes


def prune_to_contexts(
    graph: ConsolidatedGraph, contexts: AbstractSet[ConceptId]
) -> ConsolidatedGraph:
    """Keep the contexts with their ancestors and descendants

    Edges between kept nodes keep their weights.

    Raises
    ------
    ValueError
        When a context is not a node of the graph.
    """
    view = graph.graph
    kept: Set = set()
    for node in _context_nodes(graph, contexts):
        kept.add(node)
        kept.update(nx.ancestors(view, node))
        kept.update(nx.descendants(view, node))
    return graph.subgraph(kept)


def extract_keywords(
    graph: ConsolidatedGraph,
    contexts: AbstractSet[ConceptId],
    max_distance: int,
    taxonomy: Optional[Taxonomy] = None,
) -> List[ScoredKeyword]:
    """Leaves within ``max_distance`` directed edges of a context

    A keyword scores the total weight of the edges entering its leaf and is
    supported by every context it can be reached from within the distance.
    Keywords scoring 0 are not reported.

    Raises
    ------
    ValueError
        When ``max_distance`` is below 1 or a context is not in the graph.
    """
    if max_distance < 1:
        msg = "keyword_distance({0}) < 1".format(max_distance)
        logging.error(msg)
        raise ValueError(msg)
    view = graph.graph
    support: Dict[LeafNode, Set[ConceptId]] = {}
    for node in _context_nodes(graph, contexts):
        reached = nx.single_source_shortest_path_length(
            view, node, cutoff=max_distance
        )
        for target in reached:
            if is_leaf(target):
                support.setdefault(target, set()).add(node.concept)
    in_weights = view.in_degree(weight="weight")
    keywords = []
    for leaf, concepts in support.items():
        score = in_weights[leaf]
        if score <= 0:
            continue
        keywords.append(
            ScoredKeyword(
                surface=leaf.surface,
                arity=leaf.arity,
                score=score,
                supporting_contexts=frozenset(concepts),
                context_labels=tuple(
                    _label(concept, taxonomy) for concept in sorted(concepts)
                ),
            )
        )
    keywords.sort(key=lambda keyword: (-keyword.score, keyword.surface, keyword.arity))
    return keywords
