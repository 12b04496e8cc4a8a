"""extract: contexts and keywords of a single document"""
import argparse
import sys

from contextract.pipeline import extract, result_to_json, result_to_tsv

from ._common import (
    add_common_arguments,
    add_pipeline_arguments,
    load_taxonomy,
    pipeline_config,
    write,
)


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "extract",
        help="Extract contexts and keywords of a document.",
        description="Run the two-phase extraction on a document.",
    )
    parser.add_argument("tor", help="Taxonomy snapshot.")
    parser.add_argument("input", help="Document path, `-` for standard input.")
    parser.add_argument("--output", choices=["json", "tsv"], default="json")
    add_pipeline_arguments(parser)
    add_common_arguments(parser)
    parser.set_defaults(run=run)
    return parser


def _read_document(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as document:
        return document.read()


def run(args: argparse.Namespace) -> int:
    config = pipeline_config(args)
    taxonomy = load_taxonomy(args.tor)
    result = extract(_read_document(args.input), taxonomy, config)
    if args.output == "tsv":
        write(result_to_tsv(result))
    else:
        write(result_to_json(result))
    return 0
