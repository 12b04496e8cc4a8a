from typing import Optional, Union

from contextract.tor import Taxonomy

from ._consolidated import ConsolidatedGraph
from ._nodes import NodeRef, is_leaf, node_sort_key
from ._term_graph import TermGraph


def _name(node: NodeRef, taxonomy: Optional[Taxonomy]) -> str:
    if is_leaf(node):
        text = "[{0}]".format(node.surface)
    elif taxonomy is not None:
        text = taxonomy.label(node.concept)
    else:
        text = "#{0}".format(node.concept)
    return '"{0}"'.format(text.replace("\\", "\\\\").replace('"', '\\"'))


def to_dot(
    graph: Union[TermGraph, ConsolidatedGraph], taxonomy: Optional[Taxonomy] = None
) -> str:
    """Render a graph as DOT text

    Concepts are named by their canonical label when a taxonomy is given and
    by ``#id`` otherwise; leaves are shown as ``[surface]``. Edges are sorted
    and their weights printed with up to 6 significant digits.

    Examples
    --------
    >>> from contextract.graph import ConceptNode, LeafNode
    >>> g = ConsolidatedGraph({(ConceptNode(0), LeafNode("mouse", 1)): 3})
    >>> print(to_dot(g))
    digraph {
      "#0" -> "[mouse]" [label=3];
    }
    """
    nodes = graph.levels if isinstance(graph, TermGraph) else graph.nodes
    lines = ["digraph {"]
    connected = set()
    for edge in sorted(
        graph.weighted_edges(),
        key=lambda e: (node_sort_key(e.source), node_sort_key(e.target)),
    ):
        connected.update((edge.source, edge.target))
        lines.append(
            "  {0} -> {1} [label={2}];".format(
                _name(edge.source, taxonomy),
                _name(edge.target, taxonomy),
                "%.6g" % edge.weight,
            )
        )
    for node in sorted(set(nodes) - connected, key=node_sort_key):
        lines.append("  {0};".format(_name(node, taxonomy)))
    lines.append("}")
    return "\n".join(lines)
