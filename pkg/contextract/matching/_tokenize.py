from itertools import groupby
from typing import List, NamedTuple, Sequence, Tuple

import regex

from contextract.core import Span, Surface
from contextract.tor import normalize

# combining marks belong to the preceding letter (decomposed input)
_LETTERS = r"(?:[^\W_]\p{M}*)+"
_WORD = regex.compile(_LETTERS + r"(?:['’ʼ-]" + _LETTERS + r")*")
_SENTENCE_BREAK = regex.compile(r"[.?!]\s|\n")


class Token(NamedTuple):
    """Normalized word of a document

    ``byte_span`` holds UTF-8 byte offsets into the original document;
    ``segment`` numbers the sentence the word belongs to.
    """

    surface: Surface
    byte_span: Span
    segment: int


def tokenize(document: str) -> List[Token]:
    """Split a document into normalized words within sentence segments

    Words are maximal runs of letters and digits with their combining marks,
    possibly joined by interior apostrophes or hyphens. A new segment starts
    after ``.``, ``?`` or ``!`` followed by whitespace, and after every line
    break.

    Examples
    --------
    >>> [token.surface for token in tokenize("The mouse, and the keyboard.")]
    ['the', 'mouse', 'and', 'the', 'keyboard']
    """
    tokens = []
    segment = 0
    previous_end = 0
    byte_position = 0
    for match in _WORD.finditer(document):
        gap = document[previous_end : match.start()]
        if tokens and _SENTENCE_BREAK.search(gap):
            segment += 1
        text = match.group()
        start = byte_position + len(gap.encode("utf-8"))
        stop = start + len(text.encode("utf-8"))
        byte_position, previous_end = stop, match.end()
        surface = normalize(text)
        if surface:
            tokens.append(Token(surface, (start, stop), segment))
    return tokens


def segments(tokens: Sequence[Token]) -> List[Tuple[int, int]]:
    """Half-open token index ranges of consecutive sentence segments"""
    ranges = []
    start = 0
    for _, group in groupby(tokens, key=lambda token: token.segment):
        stop = start + sum(1 for _ in group)
        ranges.append((start, stop))
        start = stop
    return ranges
