"""Binary snapshot of a Taxonomy

Layout (all integers little-endian)::

    b"CTXA"  <u4 version  <u4 section count
    section*: 4-byte tag  <u8 payload length  payload

Sections of version 1:

- ``LABL`` canonical labels, UTF-8, joined with LF
- ``FLAG`` ``u1`` per concept: bit 0 disambiguation, bit 1 excluded
- ``EPAR``, ``ECHI`` ``<i4`` edge parents and children
- ``TERM`` indexed surfaces, UTF-8, joined with LF
- ``TPTR`` ``<i8`` CSR pointer into ``TIDS``
- ``TIDS`` ``<i4`` concept ids of each surface
"""
import logging
from typing import BinaryIO, Dict, List

import numpy as np

from contextract.core import SnapshotError, SnapshotVersionError

from ._model import Taxonomy

MAGIC = b"CTXA"
VERSION = 1

_HEADER = np.dtype([("version", "<u4"), ("sections", "<u4")])
_SECTION_SIZE = np.dtype("<u8")
_SECTIONS = ("LABL", "FLAG", "EPAR", "ECHI", "TERM", "TPTR", "TIDS")
_DTYPES = {
    "FLAG": np.dtype("u1"),
    "EPAR": np.dtype("<i4"),
    "ECHI": np.dtype("<i4"),
    "TPTR": np.dtype("<i8"),
    "TIDS": np.dtype("<i4"),
}
_DISAMBIGUATION = 1
_EXCLUDED = 2


def _join(texts) -> bytes:
    return "\n".join(texts).encode("utf-8")


def _split(payload: bytes) -> List[str]:
    if not payload:
        return []
    return payload.decode("utf-8").split("\n")


def save_snapshot(taxonomy: Taxonomy, sink: BinaryIO):
    """Write a versioned binary snapshot of the taxonomy"""
    entries = taxonomy.term_entries()
    parents, children = taxonomy.edges
    flags = taxonomy.disambiguation_flags * _DISAMBIGUATION + (
        taxonomy.excluded_flags * _EXCLUDED
    )
    counts = [len(ids) for _, ids in entries]
    sections = {
        "LABL": _join(taxonomy.labels),
        "FLAG": flags.astype(_DTYPES["FLAG"]).tobytes(),
        "EPAR": parents.astype(_DTYPES["EPAR"]).tobytes(),
        "ECHI": children.astype(_DTYPES["ECHI"]).tobytes(),
        "TERM": _join(surface for surface, _ in entries),
        "TPTR": np.concatenate([[0], np.cumsum(counts, dtype=np.int64)])
        .astype(_DTYPES["TPTR"])
        .tobytes(),
        "TIDS": np.array(
            [idx for _, ids in entries for idx in ids], dtype=_DTYPES["TIDS"]
        ).tobytes(),
    }
    sink.write(MAGIC)
    sink.write(np.array([(VERSION, len(sections))], dtype=_HEADER).tobytes())
    for tag in _SECTIONS:
        payload = sections[tag]
        sink.write(tag.encode("ascii"))
        sink.write(np.array(len(payload), dtype=_SECTION_SIZE).tobytes())
        sink.write(payload)
    logging.debug("Saved taxonomy snapshot: {0}.".format(taxonomy))


def _fail(message: str, error=SnapshotError):
    logging.error(message)
    raise error(message)


_CHUNK = 1 << 20


def _read_exactly(source: BinaryIO, size: int, what: str) -> bytes:
    # sizes come from the file, so never ask for more than a chunk at once
    chunks = []
    remaining = size
    while remaining > 0:
        chunk = source.read(min(remaining, _CHUNK))
        if not chunk:
            break
        chunks.append(chunk)
        remaining -= len(chunk)
    if remaining:
        _fail("Truncated snapshot: incomplete {0}.".format(what))
    return b"".join(chunks)



def _read_sections(source: BinaryIO, count: int) -> Dict[str, bytes]:
    sections = {}
    for _ in range(count):
        tag = _read_exactly(source, 4, "section tag").decode("ascii", "replace")
        size = np.frombuffer(
            _read_exactly(source, _SECTION_SIZE.itemsize, "section size"),
            dtype=_SECTION_SIZE,
        )[0]
        if tag not in _SECTIONS or tag in sections:
            _fail("Corrupt snapshot: unexpected section '{0}'.".format(tag))
        sections[tag] = _read_exactly(source, int(size), "section " + tag)
    if source.read(1):
        _fail("Corrupt snapshot: trailing bytes after the last section.")
    missing = [tag for tag in _SECTIONS if tag not in sections]
    if missing:
        _fail("Corrupt snapshot: missing sections {0}.".format(missing))
    return sections


def _array(sections: Dict[str, bytes], tag: str) -> np.ndarray:
    payload = sections[tag]
    dtype = _DTYPES[tag]
    if len(payload) % dtype.itemsize:
        _fail("Corrupt snapshot: section {0} has a partial item.".format(tag))
    return np.frombuffer(payload, dtype=dtype)


def load_snapshot(source: BinaryIO) -> Taxonomy:
    """Read a snapshot written by ``save_snapshot``

    Raises
    ------
    SnapshotVersionError
        When the snapshot was written by another format version.

    SnapshotError
        When the magic bytes are wrong or the snapshot is corrupt or truncated.
    """
    if source.read(len(MAGIC)) != MAGIC:
        _fail("Not a taxonomy snapshot: bad magic bytes.")
    header = np.frombuffer(
        _read_exactly(source, _HEADER.itemsize, "header"), dtype=_HEADER
    )[0]
    if int(header["version"]) != VERSION:
        _fail(
            "Snapshot version mismatch: got {0}, expected {1}.".format(
                int(header["version"]), VERSION
            ),
            error=SnapshotVersionError,
        )
    sections = _read_sections(source, int(header["sections"]))
    try:
        labels = _split(sections["LABL"])
        surfaces = _split(sections["TERM"])
        flags = _array(sections, "FLAG")
        taxonomy = Taxonomy(
            labels=labels,
            edge_parents=_array(sections, "EPAR"),
            edge_children=_array(sections, "ECHI"),
            term_surfaces=surfaces,
            term_indptr=_array(sections, "TPTR"),
            term_ids=_array(sections, "TIDS"),
            disambiguation=(flags & _DISAMBIGUATION).astype(bool),
            excluded=(flags & _EXCLUDED).astype(bool),
        )
    except UnicodeDecodeError as ex:
        raise SnapshotError("Corrupt snapshot: invalid UTF-8 text.") from ex
    except SnapshotError:
        raise
    except ValueError as ex:
        raise SnapshotError("Corrupt snapshot: " + str(ex)) from ex
    logging.debug("Loaded taxonomy snapshot: {0}.".format(taxonomy))
    return taxonomy
