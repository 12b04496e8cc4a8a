import logging
from enum import Enum
from typing import (
    AbstractSet,
    FrozenSet,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from contextract.core import ConceptId, Surface
from contextract.tor import Taxonomy

from ._stopwords import default_stopwords
from ._tokenize import Token, segments


class AmbiguityPolicy(str, Enum):
    """How occurrences matching several concepts are handled

    - ``all`` keeps every matched concept
    - ``skip-disambiguation`` drops concepts flagged as disambiguation entries
    - ``unambiguous-only`` drops occurrences matching more than one concept
    """

    ALL = "all"
    SKIP_DISAMBIGUATION = "skip-disambiguation"
    UNAMBIGUOUS_ONLY = "unambiguous-only"

    def filter(
        self, concepts: FrozenSet[ConceptId], taxonomy: Taxonomy
    ) -> FrozenSet[ConceptId]:
        if self is AmbiguityPolicy.SKIP_DISAMBIGUATION:
            return frozenset(c for c in concepts if not taxonomy.is_disambiguation(c))
        if self is AmbiguityPolicy.UNAMBIGUOUS_ONLY and len(concepts) > 1:
            return frozenset()
        return concepts


class TermOccurrence(NamedTuple):
    """Word or n-gram of a document matched against the term index

    ``token_span`` holds inclusive token indices.
    """

    surface: Surface
    token_span: Tuple[int, int]
    arity: int
    concepts: FrozenSet[ConceptId]


def _lookup(
    surface: Surface, taxonomy: Taxonomy, ambiguity: AmbiguityPolicy
) -> FrozenSet[ConceptId]:
    concepts = taxonomy.lookup_term(surface)
    if not concepts:
        return concepts
    return AmbiguityPolicy(ambiguity).filter(concepts, taxonomy)


def match_ngrams(
    tokens: Sequence[Token],
    taxonomy: Taxonomy,
    n_max: int = 3,
    ambiguity: AmbiguityPolicy = AmbiguityPolicy.SKIP_DISAMBIGUATION,
) -> List[TermOccurrence]:
    """Greedy longest match of multi-word terms within sentence segments

    At each position, windows of ``n_max`` down to 2 tokens are looked up;
    the first hit is emitted and its tokens are consumed. Windows never cross
    a segment boundary. An n-gram whose concepts are all rejected by the
    ambiguity policy is not a hit.
    """
    if n_max < 2:
        msg = "n_max({0}) < 2".format(n_max)
        logging.error(msg)
        raise ValueError(msg)
    occurrences = []
    for start, stop in segments(tokens):
        position = start
        while position < stop:
            for n in range(min(n_max, stop - position), 1, -1):
                window = tokens[position : position + n]
                surface = " ".join(token.surface for token in window)
                concepts = _lookup(surface, taxonomy, ambiguity)
                if concepts:
                    occurrences.append(
                        TermOccurrence(
                            surface=surface,
                            token_span=(position, position + n - 1),
                            arity=n,
                            concepts=concepts,
                        )
                    )
                    position += n
                    break
            else:
                position += 1
    return occurrences


def consumed_mask(
    n_tokens: int, occurrences: Sequence[TermOccurrence]
) -> np.ndarray:
    """Boolean mask of tokens claimed by given occurrences"""
    mask = np.zeros(n_tokens, dtype=bool)
    for occurrence in occurrences:
        first, last = occurrence.token_span
        mask[first : last + 1] = True
    return mask


def match_words(
    tokens: Sequence[Token],
    taxonomy: Taxonomy,
    consumed: Optional[np.ndarray] = None,
    ambiguity: AmbiguityPolicy = AmbiguityPolicy.SKIP_DISAMBIGUATION,
    stopwords: Optional[AbstractSet[str]] = None,
) -> List[TermOccurrence]:
    """Single-word matches over tokens not consumed by n-grams

    Stopwords are skipped before lookup; every remaining hit is emitted as an
    arity-1 occurrence, repeated words included.
    """
    if consumed is None:
        consumed = np.zeros(len(tokens), dtype=bool)
    if stopwords is None:
        stopwords = default_stopwords()
    occurrences = []
    for index, token in enumerate(tokens):
        if consumed[index] or token.surface in stopwords:
            continue
        concepts = _lookup(token.surface, taxonomy, ambiguity)
        if concepts:
            occurrences.append(
                TermOccurrence(
                    surface=token.surface,
                    token_span=(index, index),
                    arity=1,
                    concepts=concepts,
                )
            )
    return occurrences
