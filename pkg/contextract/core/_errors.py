"""Exceptions raised by contextract"""
from typing import Optional, Sequence


class TorFormatError(ValueError):
    """Malformed TOR source (TSV line, SQL dump or page table)"""

    def __init__(
        self,
        message: str,
        line_number: Optional[int] = None,
        offset: Optional[int] = None,
    ):
        if line_number is not None:
            message = "line {0}: {1}".format(line_number, message)
        if offset is not None:
            message = "byte {0}: {1}".format(offset, message)
        super().__init__(message)
        self.line_number = line_number
        self.offset = offset


class RedirectCycleError(ValueError):
    """Redirect chain that loops back on itself"""

    def __init__(self, members: Sequence[str]):
        self.members = tuple(members)
        cycle = " -> ".join(self.members + self.members[:1])
        super().__init__("redirect cycle: " + cycle)


class SnapshotError(ValueError):
    """Corrupt or truncated taxonomy snapshot"""


class SnapshotVersionError(SnapshotError):
    """Snapshot written by an incompatible format version"""


class UnknownConceptError(KeyError):
    def __init__(self, concept):
        super().__init__("unknown concept: {0}".format(concept))
        self.concept = concept

    def __str__(self):
        return self.args[0]


class MissingGoldError(KeyError):
    def __init__(self, document_id: str):
        super().__init__("missing gold record for document: " + document_id)
        self.document_id = document_id

    def __str__(self):
        return self.args[0]
