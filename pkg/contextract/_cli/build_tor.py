"""build-tor: assemble a taxonomy snapshot from TOR sources"""
import argparse
import json
import logging

from contextract.core import progress
from contextract.tor import (
    IngestOptions,
    build_taxonomy,
    parse_page_titles,
    parse_sql_dump_subset,
    parse_tsv,
    save_snapshot,
)

from ._common import add_common_arguments, boolean, write


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "build-tor",
        help="Build a taxonomy snapshot.",
        description="Parse TOR sources, resolve redirects and write a snapshot. "
        "The ingest report is printed as JSON.",
    )
    parser.add_argument("inputs", nargs="+", help="TSV files or SQL dump subsets.")
    parser.add_argument("-o", "--output", required=True, help="Snapshot path.")
    parser.add_argument("--format", choices=["tsv", "wikisql"], default="tsv")
    parser.add_argument(
        "--pages", default=None, help="Page id table, required by wikisql."
    )
    parser.add_argument(
        "--extra",
        action="append",
        default=[],
        help="TSV records (redirects, terms, exclusions) added to wikisql input.",
    )
    parser.add_argument("--index-categories-as-terms", type=boolean, default=True)
    parser.add_argument(
        "--exclude-root",
        action="append",
        default=[],
        help="Label whose subtree is excluded. Repeatable.",
    )
    add_common_arguments(parser)
    parser.set_defaults(run=run)
    return parser


def _read_tsv(path: str):
    logging.info("Parsing TSV: " + path)
    with open(path, "rb") as stream:
        return parse_tsv(stream)


def run(args: argparse.Namespace) -> int:
    records = []
    warnings = []
    if args.format == "wikisql":
        if args.pages is None:
            msg = "--pages is required with --format wikisql"
            logging.error(msg)
            raise ValueError(msg)
        with open(args.pages, "rb") as stream:
            page_titles = parse_page_titles(stream)
        for path in progress(args.inputs, desc="dumps"):
            logging.info("Parsing SQL dump: " + path)
            with open(path, "rb") as stream:
                records.extend(parse_sql_dump_subset(stream, page_titles, warnings))
        for path in args.extra:
            records.extend(_read_tsv(path))
    else:
        for path in progress(args.inputs + args.extra, desc="sources"):
            records.extend(_read_tsv(path))

    options = IngestOptions(
        index_categories_as_terms=args.index_categories_as_terms,
        excluded_roots=tuple(args.exclude_root),
    )
    taxonomy, report = build_taxonomy(records, options, warnings)
    with open(args.output, "wb") as sink:
        save_snapshot(taxonomy, sink)
    logging.info("Saved {0} to {1}.".format(taxonomy, args.output))
    write(json.dumps(report.to_dict(), indent=2, ensure_ascii=False))
    return 0
