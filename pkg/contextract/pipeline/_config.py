import logging
import math
from typing import FrozenSet, List, NamedTuple, Optional

from contextract.graph import WeightDirection
from contextract.matching import AmbiguityPolicy

NGRAM_DEPTH_LIMIT = 10
WORD_DEPTH_LIMIT = 5


class PipelineConfig(NamedTuple):
    """Parameters of the two-phase extraction

    Parameters
    ----------
    ngram_depth : int, default 7
        Maximal depth (in edges) of the n-gram term graphs.

    word_depth : int, default 2
        Maximal depth (in edges) of the single-word term graphs.

    epsilon : float, default 1.0
        Scaling of incoming weights when single-word graphs are merged.

    phase1_contexts : int, default 10
        Number of context candidates kept after the n-gram phase.

    final_contexts : int, default 5
        Number of contexts reported.

    keyword_distance : int, default 2
        Maximal number of edges between a context and its keywords.

    n_max : int, default 3
        Longest n-gram looked up.

    scheme_direction : WeightDirection, default leafward
        Edge weighting direction of the term graphs.

    ambiguity : AmbiguityPolicy, default skip-disambiguation
        Handling of occurrences matching several concepts.

    min_keyword_score : float, optional
        Keywords scoring below are not reported.

    stopwords : frozenset of str, optional
        Words never looked up; the bundled English list when omitted.
    """

    ngram_depth: int = 7
    word_depth: int = 2
    epsilon: float = 1.0
    phase1_contexts: int = 10
    final_contexts: int = 5
    keyword_distance: int = 2
    n_max: int = 3
    scheme_direction: WeightDirection = WeightDirection.LEAFWARD
    ambiguity: AmbiguityPolicy = AmbiguityPolicy.SKIP_DISAMBIGUATION
    min_keyword_score: Optional[float] = None
    stopwords: Optional[FrozenSet[str]] = None

    def validate(self) -> "PipelineConfig":
        """Check the parameters and normalize enumerations

        Raises
        ------
        ValueError
            When a count or depth is below 1, ``n_max`` is below 2, a value
            is not finite or an enumeration value is unknown.
        """
        for name in (
            "ngram_depth",
            "word_depth",
            "phase1_contexts",
            "final_contexts",
            "keyword_distance",
        ):
            value = getattr(self, name)
            if value < 1:
                msg = "{0}({1}) < 1".format(name, value)
                logging.error(msg)
                raise ValueError(msg)
        if self.n_max < 2:
            msg = "n_max({0}) < 2".format(self.n_max)
            logging.error(msg)
            raise ValueError(msg)
        if not math.isfinite(self.epsilon):
            msg = "epsilon({0}) must be finite".format(self.epsilon)
            logging.error(msg)
            raise ValueError(msg)
        if self.min_keyword_score is not None and not math.isfinite(
            self.min_keyword_score
        ):
            msg = "min_keyword_score({0}) must be finite".format(
                self.min_keyword_score
            )
            logging.error(msg)
            raise ValueError(msg)
        return self._replace(
            scheme_direction=WeightDirection(self.scheme_direction),
            ambiguity=AmbiguityPolicy(self.ambiguity),
        )

    def out_of_regime(self) -> List[str]:
        """Notices for depths outside the evaluated regime"""
        notices = []
        if self.ngram_depth >= NGRAM_DEPTH_LIMIT:
            notices.append(
                "ngram_depth({0}) >= {1} is outside the evaluated regime".format(
                    self.ngram_depth, NGRAM_DEPTH_LIMIT
                )
            )
        if self.word_depth >= WORD_DEPTH_LIMIT:
            notices.append(
                "word_depth({0}) >= {1} is outside the evaluated regime".format(
                    self.word_depth, WORD_DEPTH_LIMIT
                )
            )
        return notices

    def to_dict(self) -> dict:
        """Plain-value echo, stopwords summarized by their count"""
        echo = self._asdict()
        echo["scheme_direction"] = WeightDirection(self.scheme_direction).value
        echo["ambiguity"] = AmbiguityPolicy(self.ambiguity).value
        echo["stopwords"] = None if self.stopwords is None else len(self.stopwords)
        return echo
