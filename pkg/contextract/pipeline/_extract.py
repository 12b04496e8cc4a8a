import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sklearn.base import BaseEstimator

from contextract.core import configurable
from contextract.graph import (
    ACCUMULATE,
    TermGraph,
    WeightDirection,
    WeightScheme,
    build_term_graph,
    fold_merge,
    guarded,
)
from contextract.matching import (
    AmbiguityPolicy,
    TermOccurrence,
    consumed_mask,
    match_ngrams,
    match_words,
    tokenize,
)
from contextract.tor import Taxonomy

from ._config import PipelineConfig
from ._ranking import extract_keywords, prune_to_contexts, score_contexts
from ._result import ExtractionResult


def _term_graphs(
    occurrences: Sequence[TermOccurrence], taxonomy: Taxonomy, scheme: WeightScheme
) -> List[TermGraph]:
    # repeated terms share their graph
    built: Dict[Tuple, TermGraph] = {}
    graphs = []
    for occurrence in occurrences:
        key = occurrence.surface, occurrence.arity, occurrence.concepts
        if key not in built:
            built[key] = build_term_graph(occurrence, taxonomy, scheme)
        graphs.append(built[key])
    return graphs


def _empty_result(metadata: dict) -> ExtractionResult:
    return ExtractionResult(contexts=[], keywords=[], metadata=metadata)


def extract(
    document: str, taxonomy: Taxonomy, config: PipelineConfig = PipelineConfig()
) -> ExtractionResult:
    """Extract contexts and contextualized keywords from a document

    Multi-word terms are matched first and their deep term graphs are summed
    into a consolidated graph, from which the best context candidates are
    selected; nodes unrelated to them are pruned. Remaining single words
    are then merged into that graph with shallow term graphs, ignoring words
    unrelated to it. The final contexts are the best-scored concepts of the
    result and the keywords are the terms close to them.

    Parameters
    ----------
    document : str
        Raw text.

    taxonomy : Taxonomy
        Resource the document is matched against.

    config : PipelineConfig
        Extraction parameters.

    Returns
    -------
    ExtractionResult
        Ranked contexts and keywords. ``metadata`` echoes the configuration
        and carries phase statistics and warnings.
    """
    config = config.validate()
    warnings = config.out_of_regime()
    for warning in warnings:
        logging.warning(warning)
    metadata = {
        "config": config.to_dict(),
        "tokens": 0,
        "phase1_occurrences": 0,
        "phase2_occurrences": 0,
        "phase1_contexts": [],
        "out_of_regime": bool(warnings),
        "warnings": warnings,
    }
    tokens = tokenize(document)
    metadata["tokens"] = len(tokens)
    if not tokens or not taxonomy.n_terms:
        logging.info("Nothing to match.")
        return _empty_result(metadata)

    ngrams = match_ngrams(tokens, taxonomy, config.n_max, config.ambiguity)
    ngram_scheme = WeightScheme(config.scheme_direction, config.ngram_depth)
    phase1 = fold_merge(_term_graphs(ngrams, taxonomy, ngram_scheme), ACCUMULATE)
    candidates = [
        context
        for context in score_contexts(phase1, taxonomy)[: config.phase1_contexts]
        if context.score > 0
    ]
    pruned = prune_to_contexts(phase1, {context.concept for context in candidates})
    metadata["phase1_occurrences"] = len(ngrams)
    metadata["phase1_contexts"] = [context.label for context in candidates]
    logging.info(
        "Phase 1: {0} n-grams, {1} context candidates.".format(
            len(ngrams), len(candidates)
        )
    )

    words = match_words(
        tokens,
        taxonomy,
        consumed_mask(len(tokens), ngrams),
        config.ambiguity,
        config.stopwords,
    )
    word_scheme = WeightScheme(config.scheme_direction, config.word_depth)
    phase2 = fold_merge(
        _term_graphs(words, taxonomy, word_scheme),
        guarded(config.epsilon),
        seed=pruned,
    )
    metadata["phase2_occurrences"] = len(words)
    logging.info("Phase 2: {0} words, {1}.".format(len(words), phase2))

    contexts = [
        context
        for context in score_contexts(phase2, taxonomy)[: config.final_contexts]
        if context.score > 0
    ]
    if not contexts:
        return _empty_result(metadata)
    keywords = extract_keywords(
        phase2,
        {context.concept for context in contexts},
        config.keyword_distance,
        taxonomy,
    )
    if config.min_keyword_score is not None:
        keywords = [k for k in keywords if k.score >= config.min_keyword_score]
    return ExtractionResult(contexts=contexts, keywords=keywords, metadata=metadata)


@configurable
class ContextExtractor(BaseEstimator):
    """Two-phase context and keyword extractor

    Estimator-style wrapper of ``extract``; the taxonomy plays the role of
    the training data. Parameters are those of ``PipelineConfig``.

    Examples
    --------
    >>> from contextract.pipeline import ContextExtractor
    >>> extractor = ContextExtractor(final_contexts=3)  # doctest: +SKIP
    >>> extractor.fit(taxonomy).extract("the mouse and the keyboard")  # doctest: +SKIP
    """

    def __init__(
        self,
        ngram_depth: int = 7,
        word_depth: int = 2,
        epsilon: float = 1.0,
        phase1_contexts: int = 10,
        final_contexts: int = 5,
        keyword_distance: int = 2,
        n_max: int = 3,
        scheme_direction: WeightDirection = WeightDirection.LEAFWARD,
        ambiguity: AmbiguityPolicy = AmbiguityPolicy.SKIP_DISAMBIGUATION,
        min_keyword_score: Optional[float] = None,
        stopwords=None,
    ):
        self.ngram_depth = ngram_depth
        self.word_depth = word_depth
        self.epsilon = epsilon
        self.phase1_contexts = phase1_contexts
        self.final_contexts = final_contexts
        self.keyword_distance = keyword_distance
        self.n_max = n_max
        self.scheme_direction = scheme_direction
        self.ambiguity = ambiguity
        self.min_keyword_score = min_keyword_score
        self.stopwords = stopwords

    @property
    def config(self) -> PipelineConfig:
        return PipelineConfig(
            **{name: getattr(self, name) for name in PipelineConfig._fields}
        )

    def fit(self, taxonomy: Taxonomy, y=None):
        self.config.validate()
        self.taxonomy_ = taxonomy
        return self

    def extract(self, document: str) -> ExtractionResult:
        return extract(document, self.taxonomy_, self.config)

    def transform(self, documents: Iterable[str]) -> List[ExtractionResult]:
        return [self.extract(document) for document in documents]
