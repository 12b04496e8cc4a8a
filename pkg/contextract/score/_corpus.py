import json
import logging
from typing import Dict, NamedTuple, Sequence, Tuple

import pandas as pd

from contextract.core import MissingGoldError
from contextract.pipeline import ExtractionResult

from ._gold import GoldRecord
from ._prf import PRFScore, score_sets

_TARGETS = ("contexts", "keywords")
_METRICS = ("precision", "recall", "f1")
_COUNTS = ("tp", "fp", "fn")


class EvaluationReport(NamedTuple):
    """Per-document and aggregated scores

    ``per_document`` is indexed by document id and has one column per
    target and field, e.g. ``contexts_f1`` or ``keywords_tp``.
    """

    per_document: pd.DataFrame
    macro: Dict[str, Dict[str, float]]
    micro: Dict[str, PRFScore]

    def to_dict(self) -> dict:
        documents = []
        for document_id, row in self.per_document.iterrows():
            entry = {"document_id": document_id}
            for target in _TARGETS:
                entry[target] = {
                    **{m: float(row[target + "_" + m]) for m in _METRICS},
                    **{c: int(row[target + "_" + c]) for c in _COUNTS},
                }
            documents.append(entry)
        return {
            "per_document": documents,
            "macro": self.macro,
            "micro": {target: score.to_dict() for target, score in self.micro.items()},
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def to_text(self) -> str:
        """Plain-text table of precision, recall and F-measure"""
        columns = [t + "_" + m for t in _TARGETS for m in _METRICS]
        table = self.per_document[columns].copy()
        table.loc["(macro)"] = [self.macro[t][m] for t in _TARGETS for m in _METRICS]
        table.loc["(micro)"] = [
            getattr(self.micro[t], m) for t in _TARGETS for m in _METRICS
        ]
        table.index.name = "document"
        return table.to_string(float_format=lambda v: "%.4f" % v) + "\n"


def evaluate_corpus(
    results: Sequence[Tuple[str, ExtractionResult]], gold: Sequence[GoldRecord]
) -> EvaluationReport:
    """Score extraction results against gold records

    Contexts are compared by canonical label and keywords by surface, both
    with exact matching. The macro average is the mean of the per-document
    scores; the micro average scores the pooled counts.

    Raises
    ------
    MissingGoldError
        When a result has no gold record.

    ValueError
        When a document id is repeated.
    """
    expected = {record.document_id: record for record in gold}
    rows = {}
    for document_id, result in results:
        if document_id in rows:
            msg = "Duplicate result for document: {0}".format(document_id)
            logging.error(msg)
            raise ValueError(msg)
        if document_id not in expected:
            error = MissingGoldError(document_id)
            logging.error(str(error))
            raise error
        record = expected[document_id]
        scores = {
            "contexts": score_sets(set(result.context_labels()), record.gold_contexts),
            "keywords": score_sets(set(result.keyword_surfaces()), record.gold_keywords),
        }
        rows[document_id] = {
            target + "_" + field: value
            for target, score in scores.items()
            for field, value in score.to_dict().items()
        }
    columns = [t + "_" + f for t in _TARGETS for f in _METRICS + _COUNTS]
    per_document = pd.DataFrame.from_dict(rows, orient="index", columns=columns)
    per_document = per_document.sort_index()
    per_document.index.name = "document_id"

    macro = {}
    micro = {}
    for target in _TARGETS:
        if per_document.empty:
            macro[target] = {m: 1.0 for m in _METRICS}
        else:
            macro[target] = {
                m: float(per_document[target + "_" + m].mean()) for m in _METRICS
            }
        counts = {c: int(per_document[target + "_" + c].sum()) for c in _COUNTS}
        micro[target] = PRFScore.from_counts(**counts)
    logging.info(
        "Evaluated {0} documents: macro context F1 {1:.4f}.".format(
            len(per_document), macro["contexts"]["f1"]
        )
    )
    return EvaluationReport(per_document=per_document, macro=macro, micro=micro)
