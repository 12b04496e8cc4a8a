import re
import unicodedata

from contextract.core import Surface

_BOUNDARY_PUNCTUATION = re.compile(r"^[\W_]+|[\W_]+$")
_APOSTROPHES = str.maketrans({"’": "'", "‘": "'", "ʼ": "'"})


def normalize(surface: str) -> Surface:
    """Normalize a TOR label or a document word for exact comparison

    Applies canonical Unicode composition and lowercasing, turns underscores
    into spaces, collapses whitespace runs and strips punctuation from both
    ends of every token. Interior hyphens and apostrophes are kept, so
    ``"Dijkstra's  Algorithm"`` becomes ``"dijkstra's algorithm"``.

    Examples
    --------
    >>> normalize("Provinces_of_Indonesia")
    'provinces of indonesia'
    >>> normalize("  MOUSE  ")
    'mouse'
    """
    text = unicodedata.normalize("NFC", surface).translate(_APOSTROPHES)
    text = unicodedata.normalize("NFC", text.lower()).replace("_", " ")
    tokens = (_BOUNDARY_PUNCTUATION.sub("", token) for token in text.split())
    return " ".join(token for token in tokens if token)
