from enum import Enum
from typing import NamedTuple, Tuple


class RecordKind(str, Enum):
    EDGE = "edge"
    TERM = "term"
    REDIRECT = "redirect"
    EXCLUDE = "exclude"
    DISAMBIG = "disambig"


ARITY = {
    RecordKind.EDGE: 2,
    RecordKind.TERM: 2,
    RecordKind.REDIRECT: 2,
    RecordKind.EXCLUDE: 1,
    RecordKind.DISAMBIG: 1,
}


class RawRecord(NamedTuple):
    """Single statement of a TOR source, before normalization

    ``edge``: (parent, child); ``term``: (surface, concept);
    ``redirect``: (alias, canonical); ``exclude`` and ``disambig``: (concept,).
    """

    kind: RecordKind
    fields: Tuple[str, ...]

    @classmethod
    def make(cls, kind, *fields: str) -> "RawRecord":
        kind = RecordKind(kind)
        if len(fields) != ARITY[kind]:
            raise ValueError(
                "'{0}' record expects {1} field(s), got {2}".format(
                    kind.value, ARITY[kind], len(fields)
                )
            )
        return cls(kind, tuple(fields))
