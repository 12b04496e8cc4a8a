import csv
import logging
from typing import (
    Dict,
    FrozenSet,
    List,
    NamedTuple,
    Set,
)

import pandas as pd

from contextract.tor import normalize

_KINDS = ("context", "keyword")


class GoldRecord(NamedTuple):
    document_id: str
    gold_contexts: FrozenSet[str]
    gold_keywords: FrozenSet[str]


def load_gold(path_or_buffer) -> List[GoldRecord]:
    """Load expected contexts and keywords

    The file holds tab-separated ``context DOC_ID LABEL`` and
    ``keyword DOC_ID SURFACE`` lines; ``#`` starts a comment line. Values are
    normalized like taxonomy labels. Records are sorted by document id.

    Raises
    ------
    ValueError
        On a line of an unknown kind or with missing fields.
    """
    try:
        frame = pd.read_csv(
            path_or_buffer,
            sep="\t",
            header=None,
            names=["kind", "document_id", "value"],
            dtype=str,
            quoting=csv.QUOTE_NONE,
            keep_default_na=False,
            skip_blank_lines=True,
            encoding="utf-8",
        ).fillna("")
    except pd.errors.EmptyDataError:
        return []
    frame = frame[~frame["kind"].str.startswith("#")]
    unknown = sorted(set(frame["kind"]) - set(_KINDS))
    if unknown:
        msg = "Unknown gold record kinds: {0}".format(unknown)
        logging.error(msg)
        raise ValueError(msg)
    if (frame["document_id"] == "").any() or (frame["value"] == "").any():
        msg = "Gold records need a document id and a value."
        logging.error(msg)
        raise ValueError(msg)
    collected: Dict[str, Dict[str, Set[str]]] = {}
    for kind, document_id, value in frame.itertuples(index=False):
        sets = collected.setdefault(document_id, {k: set() for k in _KINDS})
        sets[kind].add(normalize(value))
    logging.info("Loaded gold records of {0} documents.".format(len(collected)))
    return [
        GoldRecord(
            document_id=document_id,
            gold_contexts=frozenset(sets["context"]),
            gold_keywords=frozenset(sets["keyword"]),
        )
        for document_id, sets in sorted(collected.items())
    ]
