"""Precision, recall and F-measure of extraction results"""
from ._corpus import EvaluationReport, evaluate_corpus
from ._gold import GoldRecord, load_gold
from ._prf import PRFScore, score_sets

__all__ = [
    "EvaluationReport",
    "GoldRecord",
    "PRFScore",
    "evaluate_corpus",
    "load_gold",
    "score_sets",
]
