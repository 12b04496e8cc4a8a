import io
import unittest

from contextract.core import TorFormatError
from contextract.tor import RawRecord, RecordKind, parse_page_titles, parse_tsv


def parse(text: bytes):
    return parse_tsv(io.BytesIO(text))


class ParseTsvTest(unittest.TestCase):
    def test_reads_every_record_kind_in_file_order(self):
        records = parse(
            b"# comment\n"
            b"edge\tRoot\tScience\n"
            b"\n"
            b"term\tmouse\tComputing\n"
            b"redirect\tPC\tPersonal computer\r\n"
            b"exclude\tHidden categories\n"
            b"disambig\tJava\n"
        )
        assert records == [
            RawRecord(RecordKind.EDGE, ("Root", "Science")),
            RawRecord(RecordKind.TERM, ("mouse", "Computing")),
            RawRecord(RecordKind.REDIRECT, ("PC", "Personal computer")),
            RawRecord(RecordKind.EXCLUDE, ("Hidden categories",)),
            RawRecord(RecordKind.DISAMBIG, ("Java",)),
        ]

    def test_keeps_labels_verbatim(self):
        records = parse("edge\tRock_'n'_roll\tÉire\n".encode("utf-8"))
        assert records[0].fields == ("Rock_'n'_roll", "Éire")

    def test_empty_source_gives_no_records(self):
        assert parse(b"") == []
        assert parse(b"# nothing here\n\n") == []

    def test_reports_unknown_kind_with_line_number(self):
        with self.assertRaises(TorFormatError) as raised:
            parse(b"edge\ta\tb\nlink\ta\tb\n")
        assert raised.exception.line_number == 2
        assert "line 2" in str(raised.exception)

    def test_rejects_wrong_field_count(self):
        with self.assertRaises(TorFormatError) as raised:
            parse(b"edge\tonly parent\n")
        assert raised.exception.line_number == 1
        with self.assertRaises(TorFormatError):
            parse(b"exclude\ta\tb\n")

    def test_rejects_empty_field(self):
        with self.assertRaises(TorFormatError):
            parse(b"term\t \tComputing\n")

    def test_rejects_invalid_utf8(self):
        with self.assertRaises(TorFormatError) as raised:
            parse(b"edge\ta\tb\nedge\t\xff\tb\n")
        assert raised.exception.line_number == 2

    def test_format_error_is_a_value_error(self):
        with self.assertRaises(ValueError):
            parse(b"nonsense\n")


class ParsePageTitlesTest(unittest.TestCase):
    def test_reads_page_table(self):
        titles = parse_page_titles(io.BytesIO(b"# ids\npage\t1\tArticle_1\npage\t7\tO'Brien\n"))
        assert titles == {1: "Article_1", 7: "O'Brien"}

    def test_later_definition_wins(self):
        titles = parse_page_titles(io.BytesIO(b"page\t1\tFirst\npage\t1\tSecond\n"))
        assert titles == {1: "Second"}

    def test_rejects_non_integer_id(self):
        with self.assertRaises(TorFormatError):
            parse_page_titles(io.BytesIO(b"page\tone\tArticle\n"))

    def test_rejects_other_records(self):
        with self.assertRaises(TorFormatError):
            parse_page_titles(io.BytesIO(b"edge\ta\tb\n"))
