from typing import NamedTuple, Tuple, Union

from contextract.core import ConceptId, Surface, Weight


class ConceptNode(NamedTuple):
    concept: ConceptId


class LeafNode(NamedTuple):
    """Matched word or n-gram; the same surface is the same node everywhere"""

    surface: Surface
    arity: int


NodeRef = Union[ConceptNode, LeafNode]
Edge = Tuple[NodeRef, NodeRef]


class WeightedEdge(NamedTuple):
    """Edge from the more general node to the more specific one"""

    source: NodeRef
    target: NodeRef
    weight: Weight


def is_leaf(node: NodeRef) -> bool:
    return isinstance(node, LeafNode)


def node_sort_key(node: NodeRef):
    """Total order over mixed node kinds: concepts by id, then leaves"""
    if isinstance(node, LeafNode):
        return 1, node.arity, node.surface
    return 0, node.concept, ""
