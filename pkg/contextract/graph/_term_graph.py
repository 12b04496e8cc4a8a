import logging
from enum import Enum
from typing import Dict, List, NamedTuple

from contextract.core import Weight
from contextract.matching import TermOccurrence
from contextract.tor import Taxonomy

from ._nodes import ConceptNode, Edge, LeafNode, NodeRef, WeightedEdge


class WeightDirection(str, Enum):
    """Where the heaviest edges of a term graph sit

    - ``leafward``: deep relations weigh most, decremented level by level
      towards the root
    - ``rootward``: higher-level relations are put forward
    """

    LEAFWARD = "leafward"
    ROOTWARD = "rootward"


class WeightScheme(NamedTuple):
    direction: WeightDirection = WeightDirection.LEAFWARD
    depth: int = 3

    def validate(self) -> "WeightScheme":
        if self.depth < 1:
            msg = "depth({0}) < 1".format(self.depth)
            logging.error(msg)
            raise ValueError(msg)
        return WeightScheme(WeightDirection(self.direction), int(self.depth))

    def weight(self, level: int) -> int:
        """Weight of an edge entering a node at given distance from the leaf"""
        if self.direction == WeightDirection.LEAFWARD:
            return self.depth - level
        return level + 1


class TermGraph(NamedTuple):
    """Weighted graph of a single term occurrence

    ``levels`` maps every node to its distance from the leaf; every edge
    joins a node at level ``l + 1`` to a node at level ``l``.
    """

    leaf: LeafNode
    edges: Dict[Edge, Weight]
    levels: Dict[NodeRef, int]

    @property
    def nodes(self) -> List[NodeRef]:
        return list(self.levels)

    def weighted_edges(self) -> List[WeightedEdge]:
        return [
            WeightedEdge(source, target, weight)
            for (source, target), weight in self.edges.items()
        ]


def build_term_graph(
    occurrence: TermOccurrence, taxonomy: Taxonomy, scheme: WeightScheme
) -> TermGraph:
    """Build the depth-capped weighted graph of one term occurrence

    The occurrence becomes a leaf hanging under each of its concepts. Above
    them, ancestors are collected breadth-first up to ``scheme.depth`` edges
    from the leaf, and an edge ``parent -> child`` is kept only when the
    parent lies exactly one level above the child. Edge weights follow
    ``scheme``: with leafward weighting and depth 3 the edge into the leaf
    weighs 3, the next one 2 and the topmost 1.

    Raises
    ------
    ValueError
        When the occurrence has no concept or the depth is below 1.

    UnknownConceptError
        When the occurrence refers to a concept missing from the taxonomy.
    """
    scheme = scheme.validate()
    if not occurrence.concepts:
        msg = "Occurrence '{0}' has no concept.".format(occurrence.surface)
        logging.error(msg)
        raise ValueError(msg)
    leaf = LeafNode(occurrence.surface, occurrence.arity)
    distances: Dict[int, int] = {}
    for concept in sorted(occurrence.concepts):
        reached = taxonomy.ancestors_within(concept, scheme.depth - 1)
        for ancestor, distance in reached.items():
            if distance + 1 < distances.get(ancestor, scheme.depth + 1):
                distances[ancestor] = distance + 1

    levels: Dict[NodeRef, int] = {leaf: 0}
    edges: Dict[Edge, Weight] = {}
    for concept in sorted(occurrence.concepts):
        if concept in distances:
            edges[ConceptNode(concept), leaf] = scheme.weight(0)
    for concept, level in sorted(distances.items(), key=lambda item: item[1]):
        levels[ConceptNode(concept)] = level
        for parent in taxonomy.parents_of(concept).tolist():
            if distances.get(parent) == level + 1:
                edges[ConceptNode(parent), ConceptNode(concept)] = scheme.weight(
                    level
                )
    return TermGraph(leaf=leaf, edges=edges, levels=levels)
