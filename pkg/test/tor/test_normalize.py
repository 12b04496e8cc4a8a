import unittest

from parameterized import parameterized

from contextract.tor import normalize


class NormalizeTest(unittest.TestCase):
    @parameterized.expand(
        [
            ("underscores", "Provinces_of_Indonesia", "provinces of indonesia"),
            ("case", "MOUSE", "mouse"),
            ("whitespace", "  personal \t computer ", "personal computer"),
            ("boundary_punctuation", "(keyboard),", "keyboard"),
            ("parentheses", "Python (programming language)", "python programming language"),
            ("interior_hyphen", "Object-oriented programming", "object-oriented programming"),
            ("interior_apostrophe", "Dijkstra's  Algorithm", "dijkstra's algorithm"),
            ("curly_apostrophe", "Rock ’n’ roll", "rock 'n' roll"),
            ("only_punctuation", "--", ""),
            ("empty", "", ""),
        ]
    )
    def test_normalizes(self, _, surface, expected):
        assert normalize(surface) == expected

    def test_composes_unicode(self):
        assert normalize("Café") == normalize("Café") == "café"

    def test_is_idempotent(self):
        for surface in ["Rock_'n'_roll", "  A  B  ", "Éire (island)"]:
            once = normalize(surface)
            assert normalize(once) == once
