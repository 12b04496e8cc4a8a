"""Reader for the ``categorylinks`` table of MediaWiki SQL dumps

Only the subset produced by ``mysqldump`` for that table is understood:

    INSERT INTO `categorylinks` VALUES (12,'Provinces_of_Indonesia',...),(...);

Values are integers or single-quoted strings with backslash escapes. Every
other statement is skipped.
"""
import logging
import re
from typing import BinaryIO, List, Mapping, Optional, Union

from contextract.core import TorFormatError

from ._records import RawRecord, RecordKind

_INSERT = re.compile(rb"INSERT INTO `categorylinks` VALUES\s*")
_SPACE = re.compile(rb"\s*")
_INTEGER = re.compile(rb"-?\d+")
_STRING = re.compile(rb"'((?:[^'\\]|\\.)*)'", re.DOTALL)
_ESCAPE = re.compile(rb"\\(.)", re.DOTALL)
_ESCAPED = {
    b"0": b"\0",
    b"n": b"\n",
    b"r": b"\r",
    b"t": b"\t",
    b"Z": b"\x1a",
}

Value = Union[int, str]


def _unescape(match) -> bytes:
    char = match.group(1)
    return _ESCAPED.get(char, char)


def _title(raw: str) -> str:
    return raw.replace("_", " ")


class _ValuesScanner:
    def __init__(self, data: bytes, pos: int, base_offset: int):
        self.data = data
        self.pos = pos
        self.base_offset = base_offset

    def fail(self, message: str, pos: Optional[int] = None):
        pos = self.pos if pos is None else pos
        error = TorFormatError(message, offset=self.base_offset + pos)
        logging.error(str(error))
        raise error

    def skip_space(self):
        self.pos = _SPACE.match(self.data, self.pos).end()

    def peek(self) -> bytes:
        self.skip_space()
        return self.data[self.pos : self.pos + 1]

    def expect(self, token: bytes):
        if self.peek() != token:
            self.fail("expected '{0}'".format(token.decode()))
        self.pos += 1

    def string(self) -> str:
        match = _STRING.match(self.data, self.pos)
        if match is None:
            self.fail("unterminated string literal")
        raw = _ESCAPE.sub(_unescape, match.group(1))
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError:
            self.fail("invalid UTF-8 in string literal")
        self.pos = match.end()
        return text

    def value(self) -> Value:
        if self.peek() == b"'":
            return self.string()
        match = _INTEGER.match(self.data, self.pos)
        if match is None:
            self.fail("expected an integer or a quoted string")
        self.pos = match.end()
        return int(match.group())

    def tuples(self):
        while True:
            self.expect(b"(")
            values = [self.value()]
            while self.peek() == b",":
                self.pos += 1
                values.append(self.value())
            self.expect(b")")
            yield values
            separator = self.peek()
            if separator == b";":
                self.pos += 1
                return
            if separator != b",":
                self.fail("expected ',' or ';' after a tuple")
            self.pos += 1


def parse_sql_dump_subset(
    stream: BinaryIO,
    page_titles: Mapping[int, str],
    warnings: Optional[List[str]] = None,
) -> List[RawRecord]:
    """Turn ``categorylinks`` tuples into ``edge`` records

    The first tuple value is the id of the member page, resolved to a title
    through ``page_titles``; the second one is the category title. Each tuple
    yields ``edge(category -> page)``. Tuples with page ids missing from
    ``page_titles`` are skipped with a warning appended to ``warnings``.
    """
    records = []
    offset = 0
    for line in stream:
        match = _INSERT.match(line)
        if match is not None:
            scanner = _ValuesScanner(line.rstrip(b"\r\n"), match.end(), offset)
            for values in scanner.tuples():
                if (
                    len(values) < 2
                    or not isinstance(values[0], int)
                    or not isinstance(values[1], str)
                ):
                    scanner.fail("tuple does not start with (page id, category)")
                page_id, category = values[0], values[1]
                if page_id not in page_titles:
                    message = "unknown page id {0} in category '{1}'".format(
                        page_id, category
                    )
                    logging.warning("Skipped tuple: " + message)
                    if warnings is not None:
                        warnings.append(message)
                    continue
                records.append(
                    RawRecord(
                        RecordKind.EDGE,
                        (_title(category), _title(page_titles[page_id])),
                    )
                )
        offset += len(line)
    logging.debug("Parsed {0} category links.".format(len(records)))
    return records
