"""Tokenization and dictionary matching of documents"""
from ._match import (
    AmbiguityPolicy,
    TermOccurrence,
    consumed_mask,
    match_ngrams,
    match_words,
)
from ._stopwords import (
    DEFAULT_STOPWORDS_PATH,
    default_stopwords,
    load_stopwords,
    parse_stopwords,
)
from ._tokenize import Token, segments, tokenize

__all__ = [
    "AmbiguityPolicy",
    "DEFAULT_STOPWORDS_PATH",
    "TermOccurrence",
    "Token",
    "consumed_mask",
    "default_stopwords",
    "load_stopwords",
    "match_ngrams",
    "match_words",
    "parse_stopwords",
    "segments",
    "tokenize",
]
