import unittest

from contextract.core import RedirectCycleError
from contextract.tor import RawRecord, RecordKind, parse_tsv, resolve_redirects
from test._data import fixture_path, records_of


def load(name):
    with open(fixture_path(name), "rb") as stream:
        return parse_tsv(stream)


class ResolveRedirectsTest(unittest.TestCase):
    def test_follows_chains_to_the_final_label(self):
        resolved = resolve_redirects(load("redirects.tsv"))
        assert resolved == {
            "pc": "personal computer",
            "personal computers": "personal computer",
            "personal computing device": "personal computer",
            "big iron": "mainframe",
        }

    def test_no_target_is_an_alias(self):
        resolved = resolve_redirects(load("redirects.tsv"))
        assert not set(resolved.values()) & set(resolved)

    def test_drops_identity_redirects_after_normalization(self):
        resolved = resolve_redirects(records_of("redirect\tMAINFRAME\tMainframe\n"))
        assert resolved == {}

    def test_ignores_other_records(self):
        assert resolve_redirects(records_of("edge\ta\tb\nterm\tc\td\n")) == {}

    def test_first_target_wins_on_conflict(self):
        resolved = resolve_redirects(records_of("redirect\ta\tb\nredirect\ta\tc\n"))
        assert resolved == {"a": "b"}

    def test_reports_cycle_members(self):
        with self.assertRaises(RedirectCycleError) as raised:
            resolve_redirects(load("redirect_cycle.tsv"))
        assert raised.exception.members == ("big iron", "big metal", "heavy iron")
        assert str(raised.exception) == (
            "redirect cycle: big iron -> big metal -> heavy iron -> big iron"
        )

    def test_reports_only_the_loop_of_a_lasso(self):
        records = [
            RawRecord(RecordKind.REDIRECT, ("a", "b")),
            RawRecord(RecordKind.REDIRECT, ("b", "c")),
            RawRecord(RecordKind.REDIRECT, ("c", "b")),
        ]
        with self.assertRaises(RedirectCycleError) as raised:
            resolve_redirects(records)
        assert raised.exception.members == ("b", "c")
