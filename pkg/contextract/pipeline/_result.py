import json
from typing import FrozenSet, List, NamedTuple, Tuple

from contextract.core import ConceptId, Label, Surface, Weight


class ScoredContext(NamedTuple):
    concept: ConceptId
    label: Label
    score: Weight


class ScoredKeyword(NamedTuple):
    """Matched term reachable from a selected context

    ``context_labels`` lists the canonical labels of ``supporting_contexts``
    in ascending order.
    """

    surface: Surface
    arity: int
    score: Weight
    supporting_contexts: FrozenSet[ConceptId]
    context_labels: Tuple[Label, ...] = ()


class ExtractionResult(NamedTuple):
    contexts: List[ScoredContext]
    keywords: List[ScoredKeyword]
    metadata: dict

    def context_labels(self) -> List[Label]:
        return [context.label for context in self.contexts]

    def keyword_surfaces(self) -> List[Surface]:
        return [keyword.surface for keyword in self.keywords]

    def to_dict(self) -> dict:
        return {
            "contexts": [
                {"label": context.label, "score": context.score}
                for context in self.contexts
            ],
            "keywords": [
                {
                    "surface": keyword.surface,
                    "arity": keyword.arity,
                    "score": keyword.score,
                    "contexts": list(keyword.context_labels),
                }
                for keyword in self.keywords
            ],
            "metadata": self.metadata,
        }


def result_to_json(result: ExtractionResult, indent: int = 2) -> str:
    """Serialize a result as a single JSON document"""
    return json.dumps(result.to_dict(), indent=indent, ensure_ascii=False)


def result_to_tsv(result: ExtractionResult) -> str:
    """Serialize a result as ``context`` and ``keyword`` TSV lines"""
    lines = ["context\t{0}\t{1}".format(c.label, c.score) for c in result.contexts]
    lines.extend(
        "keyword\t{0}\t{1}".format(k.surface, k.score) for k in result.keywords
    )
    return "".join(line + "\n" for line in lines)
