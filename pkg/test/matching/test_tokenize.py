import unicodedata
import unittest

from contextract.matching import segments, tokenize


class TokenizeTest(unittest.TestCase):
    def test_normalizes_words(self):
        tokens = tokenize("The Mouse, and the KEYBOARD!")
        assert [token.surface for token in tokens] == [
            "the",
            "mouse",
            "and",
            "the",
            "keyboard",
        ]

    def test_keeps_interior_hyphens_and_apostrophes(self):
        surfaces = [t.surface for t in tokenize("Object-oriented code isn't rock’n’roll")]
        assert surfaces == ["object-oriented", "code", "isn't", "rock'n'roll"]

    def test_byte_spans_point_into_utf8_document(self):
        document = "Café au lait"
        encoded = document.encode("utf-8")
        for token in tokenize(document):
            start, stop = token.byte_span
            assert encoded[start:stop].decode("utf-8").lower() == token.surface
        assert tokenize(document)[1].byte_span == (6, 8)

    def test_splits_segments_on_sentence_ends_and_lines(self):
        tokens = tokenize("Hash table. Linked list? Array!\nTree 3.5 graph")
        assert [token.segment for token in tokens] == [0, 0, 1, 1, 2, 3, 3, 3, 3]
        assert segments(tokens) == [(0, 2), (2, 4), (4, 5), (5, 9)]

    def test_decimal_point_does_not_break_segment(self):
        tokens = tokenize("version 3.5 release")
        assert len({token.segment for token in tokens}) == 1

    def test_empty_document(self):
        assert tokenize("") == []
        assert tokenize("... !!") == []
        assert segments([]) == []

    def test_decomposed_accents_stay_in_the_word(self):
        document = unicodedata.normalize("NFD", "a café here")
        tokens = tokenize(document)
        assert [token.surface for token in tokens] == ["a", "café", "here"]
        assert tokens[1].byte_span == (2, 8)
        assert tokens[1].surface == unicodedata.normalize("NFC", "café")
