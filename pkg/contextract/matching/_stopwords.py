import logging
import os
from functools import lru_cache
from typing import BinaryIO, FrozenSet

from contextract.tor import normalize

DEFAULT_STOPWORDS_PATH = os.path.join(os.path.dirname(__file__), "stopwords.txt")


def parse_stopwords(stream: BinaryIO) -> FrozenSet[str]:
    """Read a stopword list: UTF-8, one word per line, ``#`` comments"""
    words = set()
    for raw in stream:
        line = raw.decode("utf-8").strip()
        if line and not line.startswith("#"):
            words.add(normalize(line))
    words.discard("")
    return frozenset(words)


def load_stopwords(path: str) -> FrozenSet[str]:
    logging.debug("Loading stopwords: " + path)
    with open(path, "rb") as stream:
        return parse_stopwords(stream)


@lru_cache(maxsize=1)
def default_stopwords() -> FrozenSet[str]:
    """Stopword list shipped with the package"""
    return load_stopwords(DEFAULT_STOPWORDS_PATH)
