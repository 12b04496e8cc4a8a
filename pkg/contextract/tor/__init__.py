"""Termino-ontological resource: model, parsers and snapshots"""
from ._build import IngestOptions, IngestReport, build_taxonomy
from ._model import Concept, Taxonomy
from ._normalize import normalize
from ._records import RawRecord, RecordKind
from ._redirects import resolve_redirects
from ._snapshot import MAGIC, VERSION, load_snapshot, save_snapshot
from ._sql import parse_sql_dump_subset
from ._tsv import parse_page_titles, parse_tsv

__all__ = [
    "Concept",
    "IngestOptions",
    "IngestReport",
    "MAGIC",
    "RawRecord",
    "RecordKind",
    "Taxonomy",
    "VERSION",
    "build_taxonomy",
    "load_snapshot",
    "normalize",
    "parse_page_titles",
    "parse_sql_dump_subset",
    "parse_tsv",
    "resolve_redirects",
    "save_snapshot",
]
