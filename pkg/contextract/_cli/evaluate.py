"""eval: score extraction over a corpus against gold annotations"""
import argparse
import logging
import os
from typing import List, Tuple

from contextract.core import MissingGoldError, maybe_pool, progress
from contextract.pipeline import ExtractionResult, PipelineConfig, extract
from contextract.score import evaluate_corpus, load_gold
from contextract.tor import Taxonomy

from ._common import (
    add_common_arguments,
    add_pipeline_arguments,
    load_taxonomy,
    pipeline_config,
    write,
)

_TAXONOMY: Taxonomy = None
_CONFIG: PipelineConfig = None


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "eval",
        help="Evaluate extraction against gold contexts and keywords.",
        description="Documents are the files of the corpus directory; their "
        "names without extension are the document ids of the gold file.",
    )
    parser.add_argument("tor", help="Taxonomy snapshot.")
    parser.add_argument("corpus", help="Directory of UTF-8 documents.")
    parser.add_argument("gold", help="Gold TSV file.")
    parser.add_argument("--output", choices=["json", "text"], default="json")
    parser.add_argument("--n-jobs", type=int, default=1)
    add_pipeline_arguments(parser)
    add_common_arguments(parser)
    parser.set_defaults(run=run)
    return parser


def _documents(corpus: str) -> List[Tuple[str, str]]:
    documents = []
    for name in sorted(os.listdir(corpus)):
        path = os.path.join(corpus, name)
        if name.startswith(".") or not os.path.isfile(path):
            continue
        documents.append((os.path.splitext(name)[0], path))
    return documents


def _init_worker(taxonomy: Taxonomy, config: PipelineConfig):
    global _TAXONOMY, _CONFIG
    _TAXONOMY = taxonomy
    _CONFIG = config


def _extract_document(document: Tuple[str, str]) -> Tuple[str, ExtractionResult]:
    document_id, path = document
    with open(path, encoding="utf-8") as text:
        return document_id, extract(text.read(), _TAXONOMY, _CONFIG)


def run(args: argparse.Namespace) -> int:
    config = pipeline_config(args)
    taxonomy = load_taxonomy(args.tor)
    gold = load_gold(args.gold)
    documents = _documents(args.corpus)
    known = {record.document_id for record in gold}
    for document_id, _ in documents:
        if document_id not in known:
            error = MissingGoldError(document_id)
            logging.error(str(error))
            raise error
    logging.info("Evaluating {0} documents.".format(len(documents)))
    with maybe_pool(
        args.n_jobs, initializer=_init_worker, initargs=(taxonomy, config)
    ) as pool:
        results = list(
            progress(
                pool.imap(_extract_document, documents),
                total=len(documents),
                desc="documents",
            )
        )
    report = evaluate_corpus(results, gold)
    write(report.to_text() if args.output == "text" else report.to_json())
    return 0
