"""Two-phase extraction of contexts and contextualized keywords"""
from ._config import NGRAM_DEPTH_LIMIT, WORD_DEPTH_LIMIT, PipelineConfig
from ._extract import ContextExtractor, extract
from ._ranking import extract_keywords, prune_to_contexts, score_contexts
from ._result import (
    ExtractionResult,
    ScoredContext,
    ScoredKeyword,
    result_to_json,
    result_to_tsv,
)

__all__ = [
    "ContextExtractor",
    "ExtractionResult",
    "NGRAM_DEPTH_LIMIT",
    "PipelineConfig",
    "ScoredContext",
    "ScoredKeyword",
    "WORD_DEPTH_LIMIT",
    "extract",
    "extract_keywords",
    "prune_to_contexts",
    "result_to_json",
    "result_to_tsv",
    "score_contexts",
]
