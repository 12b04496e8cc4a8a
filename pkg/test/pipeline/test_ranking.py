import unittest

import numpy as np

from contextract.graph import (
    ACCUMULATE,
    ConceptNode,
    ConsolidatedGraph,
    LeafNode,
    TermGraph,
    WeightScheme,
    build_term_graph,
    fold_merge,
)
from contextract.pipeline import extract_keywords, prune_to_contexts, score_contexts
from test._data import load_fixture, random_taxonomy
from test.graph._helpers import occurrence

C = ConceptNode


class SharedConceptRankingTest(unittest.TestCase):
    def setUp(self):
        self.taxonomy = load_fixture("shared_concept.tsv")
        self.id = self.taxonomy.concept_id
        computing = self.id("computing")
        scheme = WeightScheme(depth=3)
        self.graph = fold_merge(
            [
                build_term_graph(occurrence(word, computing), self.taxonomy, scheme)
                for word in ("mouse", "keyboard")
            ],
            ACCUMULATE,
        )

    def test_scores_sum_incident_weights(self):
        scored = score_contexts(self.graph, self.taxonomy)
        assert [(c.label, c.score) for c in scored] == [
            ("computing", 10),
            ("science", 6),
            ("root", 2),
        ]

    def test_keywords_near_the_context(self):
        for distance in (1, 2):
            keywords = extract_keywords(
                self.graph, {self.id("computing")}, distance, self.taxonomy
            )
            assert [(k.surface, k.score) for k in keywords] == [
                ("keyboard", 3),
                ("mouse", 3),
            ]
            assert keywords[0].supporting_contexts == {self.id("computing")}
            assert keywords[0].context_labels == ("computing",)

    def test_leaf_beyond_distance_is_not_a_keyword(self):
        root = {self.id("root")}
        assert extract_keywords(self.graph, root, 2) == []
        assert len(extract_keywords(self.graph, root, 3)) == 2

    def test_keyword_set_grows_with_distance(self):
        contexts = {self.id("science"), self.id("root")}
        previous = set()
        for distance in range(1, 5):
            found = {k.surface for k in extract_keywords(self.graph, contexts, distance)}
            assert previous <= found
            previous = found
        assert previous == {"mouse", "keyboard"}

    def test_supporting_contexts_list_every_context_in_reach(self):
        contexts = {self.id("computing"), self.id("science")}
        keywords = extract_keywords(self.graph, contexts, 2, self.taxonomy)
        assert keywords[0].supporting_contexts == contexts
        assert keywords[0].context_labels == ("computing", "science")

    def test_rejects_distance_zero(self):
        with self.assertRaises(ValueError):
            extract_keywords(self.graph, {self.id("computing")}, 0)

    def test_prune_keeps_ancestors_and_descendants(self):
        pruned = prune_to_contexts(self.graph, {self.id("science")})
        assert pruned == self.graph

    def test_prune_with_all_concepts_is_identity(self):
        concepts = {node.concept for node in self.graph.concept_nodes()}
        assert prune_to_contexts(self.graph, concepts) == self.graph

    def test_prune_rejects_unknown_context(self):
        with self.assertRaises(ValueError):
            prune_to_contexts(self.graph, {99})


class PruneTest(unittest.TestCase):
    def test_removes_unrelated_nodes(self):
        leaf = LeafNode("mouse", 1)
        graph = ConsolidatedGraph(
            {
                (C(0), C(1)): 1,
                (C(1), C(2)): 2,
                (C(2), leaf): 3,
                (C(5), C(6)): 4,
                (C(5), C(2)): 1,
            },
            [C(9)],
        )
        pruned = prune_to_contexts(graph, {1})
        assert pruned.nodes == {C(0), C(1), C(2), leaf}
        assert pruned.edges == {(C(0), C(1)): 1, (C(1), C(2)): 2, (C(2), leaf): 3}


class ScoreTieTest(unittest.TestCase):
    def test_equal_scores_follow_concept_order(self):
        graph = ConsolidatedGraph({(C(4), LeafNode("a", 1)): 1, (C(2), LeafNode("b", 1)): 1})
        assert [c.concept for c in score_contexts(graph)] == [2, 4]
        assert score_contexts(ConsolidatedGraph()) == []


def scaled(graph: TermGraph, factor) -> TermGraph:
    return TermGraph(
        graph.leaf, {edge: factor * w for edge, w in graph.edges.items()}, graph.levels
    )


def ranked(graphs, taxonomy):
    merged = fold_merge(graphs, ACCUMULATE)
    contexts = score_contexts(merged, taxonomy)[:5]
    keywords = extract_keywords(merged, {c.concept for c in contexts}, 2, taxonomy)
    return (
        [c.label for c in contexts],
        {(k.surface, k.supporting_contexts) for k in keywords},
    )


class ScaledWeightsRankingTest(unittest.TestCase):
    def test_uniform_scaling_keeps_contexts_and_keywords(self):
        np.random.seed(7)
        with_contexts = 0
        for _ in range(50):
            n_concepts = np.random.randint(5, 40)
            taxonomy = random_taxonomy(n_concepts, np.random.randint(4, 3 * n_concepts))
            scheme = WeightScheme(depth=int(np.random.randint(1, 5)))
            graphs = []
            for i in np.random.randint(0, n_concepts, size=np.random.randint(1, 8)):
                surface = "c{0:04d}".format(i)
                concepts = taxonomy.lookup_term(surface)
                if not concepts:
                    continue
                graphs.append(
                    build_term_graph(occurrence(surface, *concepts), taxonomy, scheme)
                )
            expected = ranked(graphs, taxonomy)
            with_contexts += bool(expected[0])
            for factor in (0.5, 3, 10):
                assert ranked([scaled(g, factor) for g in graphs], taxonomy) == expected
        assert with_contexts > 40
