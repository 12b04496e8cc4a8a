import unittest

from parameterized import parameterized

from contextract.score import PRFScore, score_sets


class ScoreSetsTest(unittest.TestCase):
    def test_two_of_three(self):
        score = score_sets({"a", "b", "c"}, {"a", "b", "d"})
        assert abs(score.precision - 2 / 3) < 1e-12
        assert abs(score.recall - 2 / 3) < 1e-12
        assert abs(score.f1 - 2 / 3) < 1e-12
        assert (score.tp, score.fp, score.fn) == (2, 1, 1)

    @parameterized.expand(
        [
            ("nothing_at_all", set(), set(), (1.0, 1.0, 1.0)),
            ("nothing_predicted", set(), {"a"}, (1.0, 0.0, 0.0)),
            ("nothing_expected", {"a"}, set(), (0.0, 1.0, 0.0)),
            ("disjoint", {"a"}, {"b"}, (0.0, 0.0, 0.0)),
            ("identical", {"a", "b"}, {"a", "b"}, (1.0, 1.0, 1.0)),
        ]
    )
    def test_conventions(self, _, predicted, gold, expected):
        score = score_sets(predicted, gold)
        assert (score.precision, score.recall, score.f1) == expected

    def test_f1_is_harmonic_mean(self):
        score = PRFScore.from_counts(tp=1, fp=3, fn=0)
        assert score.precision == 0.25
        assert score.recall == 1.0
        assert abs(score.f1 - 0.4) < 1e-12
        assert score.to_dict()["tp"] == 1
