"""inspect-term: show how a surface form matches and what graph it yields"""
import argparse

from contextract.graph import WeightDirection, WeightScheme, build_term_graph, to_dot
from contextract.matching import AmbiguityPolicy, TermOccurrence
from contextract.tor import normalize

from ._common import (
    add_common_arguments,
    add_scheme_arguments,
    load_taxonomy,
    positive_int,
    write,
)


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "inspect-term",
        help="Show the concepts and the term graph of a surface form.",
    )
    parser.add_argument("tor", help="Taxonomy snapshot.")
    parser.add_argument("surface", help="Word or n-gram.")
    parser.add_argument("--depth", type=positive_int, default=3)
    add_scheme_arguments(parser)
    add_common_arguments(parser)
    parser.set_defaults(run=run)
    return parser


def run(args: argparse.Namespace) -> int:
    taxonomy = load_taxonomy(args.tor)
    surface = normalize(args.surface)
    concepts = AmbiguityPolicy(args.ambiguity).filter(
        taxonomy.lookup_term(surface), taxonomy
    )
    lines = ["surface: " + surface]
    if not concepts:
        lines.append("no match")
        write("\n".join(lines))
        return 0
    lines.append(
        "concepts: " + ", ".join(taxonomy.label(idx) for idx in sorted(concepts))
    )
    arity = len(surface.split(" "))
    occurrence = TermOccurrence(
        surface=surface, token_span=(0, arity - 1), arity=arity, concepts=concepts
    )
    scheme = WeightScheme(WeightDirection(args.scheme), args.depth)
    lines.append(to_dot(build_term_graph(occurrence, taxonomy, scheme), taxonomy))
    write("\n".join(lines))
    return 0
