import io
import unittest

import numpy as np
from parameterized import parameterized

from contextract.core import SnapshotError, SnapshotVersionError
from contextract.tor import (
    MAGIC,
    IngestOptions,
    RawRecord,
    RecordKind,
    Taxonomy,
    build_taxonomy,
    load_snapshot,
    save_snapshot,
)
from test._data import load_fixture, random_edges


def dumped(taxonomy: Taxonomy) -> bytes:
    with io.BytesIO() as sink:
        save_snapshot(taxonomy, sink)
        return sink.getvalue()


def loaded(data: bytes) -> Taxonomy:
    return load_snapshot(io.BytesIO(data))


def assert_same(actual: Taxonomy, expected: Taxonomy):
    assert actual.labels == expected.labels
    for a, e in zip(actual.edges, expected.edges):
        np.testing.assert_array_equal(a, e)
    np.testing.assert_array_equal(actual.disambiguation_flags, expected.disambiguation_flags)
    np.testing.assert_array_equal(actual.excluded_flags, expected.excluded_flags)
    assert actual.term_entries() == expected.term_entries()


def random_records():
    n_concepts = np.random.randint(1, 40)
    records = [
        RawRecord(RecordKind.EDGE, edge)
        for edge in random_edges(n_concepts, np.random.randint(0, 80))
    ]
    for i in np.random.randint(0, n_concepts, size=np.random.randint(0, 10)):
        records.append(RawRecord(RecordKind.TERM, ("t{0}".format(i % 3), "c{0:04d}".format(i))))
    for i in np.random.randint(0, n_concepts, size=np.random.randint(0, 3)):
        records.append(RawRecord(RecordKind.DISAMBIG, ("c{0:04d}".format(i),)))
    for i in np.random.randint(0, n_concepts, size=np.random.randint(0, 2)):
        records.append(RawRecord(RecordKind.EXCLUDE, ("c{0:04d}".format(i),)))
    return records


class SnapshotTest(unittest.TestCase):
    def test_round_trips_fixture(self):
        taxonomy = load_fixture("software_engineering.tsv")
        assert_same(loaded(dumped(taxonomy)), taxonomy)

    def test_round_trips_random_resources(self):
        np.random.seed(0)
        for _ in range(100):
            options = IngestOptions(index_categories_as_terms=bool(np.random.randint(2)))
            taxonomy, _ = build_taxonomy(random_records(), options)
            assert_same(loaded(dumped(taxonomy)), taxonomy)

    def test_round_trips_empty_taxonomy(self):
        taxonomy, _ = build_taxonomy([])
        restored = loaded(dumped(taxonomy))
        assert len(restored) == 0
        assert restored.n_terms == 0

    def test_starts_with_magic(self):
        assert dumped(load_fixture("chain.tsv")).startswith(MAGIC)

    def test_rejects_bad_magic(self):
        with self.assertRaises(SnapshotError):
            loaded(b"NOPE" + dumped(load_fixture("chain.tsv"))[4:])

    def test_rejects_other_version(self):
        data = bytearray(dumped(load_fixture("chain.tsv")))
        data[4] = 2
        with self.assertRaises(SnapshotVersionError):
            loaded(bytes(data))

    def test_rejects_truncated_snapshot(self):
        data = dumped(load_fixture("chain.tsv"))
        for size in (0, 6, 12, 20, len(data) - 1):
            with self.assertRaises(SnapshotError):
                loaded(data[:size])

    def test_rejects_trailing_bytes(self):
        with self.assertRaises(SnapshotError):
            loaded(dumped(load_fixture("chain.tsv")) + b"\0")

    def test_rejects_inconsistent_payload(self):
        data = dumped(load_fixture("chain.tsv"))
        # last section is TIDS; point one term at a missing concept
        corrupt = data[:-4] + np.array([99], dtype="<i4").tobytes()
        with self.assertRaises(SnapshotError):
            loaded(corrupt)

    @parameterized.expand([("terabyte", 2 ** 40), ("huge", 2 ** 62), ("beyond_index", 2 ** 63 + 5)])
    def test_rejects_oversized_section_length(self, _, size):
        data = bytearray(dumped(load_fixture("chain.tsv")))
        # first section header follows the magic and the version header
        assert bytes(data[12:16]) == b"LABL"
        data[16:24] = size.to_bytes(8, "little")
        with self.assertRaises(SnapshotError) as raised:
            loaded(bytes(data))
        assert "Truncated snapshot" in str(raised.exception)
