from typing import AbstractSet, NamedTuple


def _ratio(numerator: int, denominator: int) -> float:
    # 0/0 counts as perfect
    if denominator == 0:
        return 1.0
    return numerator / denominator


class PRFScore(NamedTuple):
    precision: float
    recall: float
    f1: float
    tp: int
    fp: int
    fn: int

    @classmethod
    def from_counts(cls, tp: int, fp: int, fn: int) -> "PRFScore":
        """Scores of exact-match counts

        Examples
        --------
        >>> PRFScore.from_counts(tp=0, fp=0, fn=0).f1
        1.0
        >>> PRFScore.from_counts(tp=0, fp=1, fn=0).f1
        0.0
        """
        precision = _ratio(tp, tp + fp)
        recall = _ratio(tp, tp + fn)
        if precision + recall > 0:
            f1 = 2 * precision * recall / (precision + recall)
        else:
            f1 = 0.0
        return cls(precision, recall, f1, int(tp), int(fp), int(fn))

    def to_dict(self) -> dict:
        return self._asdict()


def score_sets(predicted: AbstractSet, gold: AbstractSet) -> PRFScore:
    """Precision, recall and F-measure of an exact-match set comparison

    Examples
    --------
    >>> score = score_sets({"a", "b", "c"}, {"a", "b", "d"})
    >>> round(score.precision, 4), round(score.recall, 4), round(score.f1, 4)
    (0.6667, 0.6667, 0.6667)
    """
    tp = len(predicted & gold)
    return PRFScore.from_counts(tp=tp, fp=len(predicted) - tp, fn=len(gold) - tp)
