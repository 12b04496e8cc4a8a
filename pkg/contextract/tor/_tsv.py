import logging
from typing import BinaryIO, Dict, Iterator, List, Tuple

from contextract.core import TorFormatError

from ._records import RawRecord, RecordKind


def _fail(message: str, line_number: int):
    error = TorFormatError(message, line_number=line_number)
    logging.error(str(error))
    raise error


def _iter_fields(stream: BinaryIO) -> Iterator[Tuple[int, List[str]]]:
    for line_number, raw in enumerate(stream, start=1):
        try:
            line = raw.decode("utf-8")
        except UnicodeDecodeError:
            _fail("invalid UTF-8", line_number)
        line = line.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        yield line_number, line.split("\t")


def parse_tsv(stream: BinaryIO) -> List[RawRecord]:
    """Parse the native TOR format

    Each line is ``kind<TAB>field1[<TAB>field2]`` with ``kind`` one of
    ``edge``, ``term``, ``redirect``, ``exclude``, ``disambig``. Blank lines
    and ``#`` comments are skipped; records keep file order.
    """
    records = []
    for line_number, fields in _iter_fields(stream):
        kind, payload = fields[0], fields[1:]
        try:
            kind = RecordKind(kind)
        except ValueError:
            _fail("unknown record kind '{0}'".format(kind), line_number)
        try:
            record = RawRecord.make(kind, *payload)
        except ValueError as ex:
            _fail(str(ex), line_number)
        if any(not field.strip() for field in record.fields):
            _fail("empty field in '{0}' record".format(kind.value), line_number)
        records.append(record)
    logging.debug("Parsed {0} TSV records.".format(len(records)))
    return records


def parse_page_titles(stream: BinaryIO) -> Dict[int, str]:
    """Parse the ``page<TAB>ID<TAB>TITLE`` table accompanying SQL dumps"""
    titles = {}
    for line_number, fields in _iter_fields(stream):
        if len(fields) != 3 or fields[0] != "page":
            _fail("expected 'page<TAB>ID<TAB>TITLE'", line_number)
        try:
            page_id = int(fields[1])
        except ValueError:
            _fail("page id is not an integer: '{0}'".format(fields[1]), line_number)
        if page_id in titles:
            logging.warning(
                "Page id {0} redefined at line {1}.".format(page_id, line_number)
            )
        titles[page_id] = fields[2]
    logging.debug("Parsed {0} page titles.".format(len(titles)))
    return titles
