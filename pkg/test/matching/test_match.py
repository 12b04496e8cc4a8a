import io
import unittest

import numpy as np

from contextract.matching import (
    AmbiguityPolicy,
    consumed_mask,
    default_stopwords,
    match_ngrams,
    match_words,
    parse_stopwords,
    tokenize,
)
from test._data import load_fixture, taxonomy_of


class MatchNgramsTest(unittest.TestCase):
    def setUp(self):
        self.taxonomy = taxonomy_of(
            "term\thash table\tHash tables\n"
            "term\tdistributed hash table\tDistributed hash tables\n"
            "term\ttable tennis\tSports\n"
            "term\ttable\tFurniture\n"
        )

    def occurrences(self, document, n_max=3):
        return match_ngrams(tokenize(document), self.taxonomy, n_max)

    def test_prefers_the_longest_window(self):
        found = self.occurrences("a distributed hash table stores keys")
        assert [(o.surface, o.token_span, o.arity) for o in found] == [
            ("distributed hash table", (1, 3), 3)
        ]

    def test_consumes_matched_tokens(self):
        found = self.occurrences("hash table tennis")
        assert [o.surface for o in found] == ["hash table"]

    def test_respects_n_max(self):
        found = self.occurrences("a distributed hash table", n_max=2)
        assert [o.surface for o in found] == ["hash table"]

    def test_does_not_cross_segments(self):
        found = self.occurrences("we need a hash. Table tennis is fun")
        assert [(o.surface, o.token_span) for o in found] == [("table tennis", (4, 5))]
        assert self.occurrences("hash\ntable") == []

    def test_single_words_are_not_ngrams(self):
        assert self.occurrences("table") == []

    def test_rejects_small_n_max(self):
        with self.assertRaises(ValueError):
            self.occurrences("hash table", n_max=1)


class MatchWordsTest(unittest.TestCase):
    def setUp(self):
        self.taxonomy = load_fixture("shared_concept.tsv")
        self.computing = self.taxonomy.concept_id("computing")

    def test_skips_stopwords_and_keeps_repetitions(self):
        found = match_words(tokenize("the mouse and the mouse"), self.taxonomy)
        assert [(o.surface, o.token_span, o.arity) for o in found] == [
            ("mouse", (1, 1), 1),
            ("mouse", (4, 4), 1),
        ]
        assert found[0].concepts == {self.computing}

    def test_skips_consumed_tokens(self):
        tokens = tokenize("mouse keyboard")
        consumed = np.array([True, False])
        assert [o.surface for o in match_words(tokens, self.taxonomy, consumed)] == [
            "keyboard"
        ]

    def test_custom_stopwords(self):
        stopwords = parse_stopwords(io.BytesIO(b"# mine\nMouse\n\n"))
        assert stopwords == {"mouse"}
        found = match_words(tokenize("the mouse"), self.taxonomy, stopwords=stopwords)
        assert found == []

    def test_bundled_stopwords(self):
        stopwords = default_stopwords()
        assert "the" in stopwords
        assert "mouse" not in stopwords


class ConsumedMaskTest(unittest.TestCase):
    def test_marks_inclusive_spans(self):
        taxonomy = taxonomy_of("term\thash table\tHash tables\n")
        tokens = tokenize("a hash table b")
        mask = consumed_mask(len(tokens), match_ngrams(tokens, taxonomy))
        assert mask.tolist() == [False, True, True, False]


class AmbiguityTest(unittest.TestCase):
    def setUp(self):
        self.taxonomy = load_fixture("software_engineering.tsv")
        self.id = self.taxonomy.concept_id

    def concepts(self, word, policy):
        found = match_words(tokenize(word), self.taxonomy, ambiguity=policy)
        return found[0].concepts if found else None

    def test_all_keeps_every_concept(self):
        assert self.concepts("python", AmbiguityPolicy.ALL) == {
            self.id("python disambiguation"),
            self.id("python programming language"),
        }

    def test_skip_disambiguation_drops_flagged_concepts(self):
        assert self.concepts("python", AmbiguityPolicy.SKIP_DISAMBIGUATION) == {
            self.id("python programming language")
        }
        assert self.concepts("java", AmbiguityPolicy.SKIP_DISAMBIGUATION) == {
            self.id("java programming language"),
            self.id("java island"),
        }

    def test_unambiguous_only_drops_ambiguous_occurrences(self):
        assert self.concepts("java", AmbiguityPolicy.UNAMBIGUOUS_ONLY) is None
        assert self.concepts("compiler", AmbiguityPolicy.UNAMBIGUOUS_ONLY) == {
            self.id("compilers")
        }

    def test_policies_accept_plain_values(self):
        assert self.concepts("python", "skip-disambiguation") == {
            self.id("python programming language")
        }
