import logging
from collections import defaultdict, deque
from typing import (
    Dict,
    Iterable,
    List,
    NamedTuple,
    Sequence,
    Set,
    Tuple,
)

import numpy as np

from contextract.core import ConceptId, Label, Surface

from ._model import Taxonomy
from ._normalize import normalize
from ._records import RawRecord, RecordKind
from ._redirects import resolve_redirects


class IngestOptions(NamedTuple):
    """Options of taxonomy assembly

    index_categories_as_terms : bool, default True
        Whether labels of concepts that have children (categories) are
        matchable terms, next to labels of childless concepts (articles).

    excluded_roots : tuple of str, default ()
        Labels whose whole downward subtree is excluded, in addition to the
        ``exclude`` records of the source.
    """

    index_categories_as_terms: bool = True
    excluded_roots: Tuple[str, ...] = ()


class IngestReport(NamedTuple):
    concepts_loaded: int
    edges_loaded: int
    self_loops_dropped: int
    redirects_resolved: int
    excluded_flagged: int
    warnings: List[str]

    def to_dict(self) -> dict:
        return dict(self._asdict(), warnings=list(self.warnings))


class _Collector:
    def __init__(self, redirects: Dict[Label, Label]):
        self.redirects = redirects
        self.labels: Set[Label] = set(redirects.values())
        self.edges: Set[Tuple[Label, Label]] = set()
        self.terms: List[Tuple[Surface, Label]] = []
        self.excluded_roots: List[Label] = []
        self.disambiguation: Set[Label] = set()
        self.self_loops = 0
        self.warnings: List[str] = []

    def warn(self, message: str):
        logging.warning(message)
        self.warnings.append(message)

    def canonical(self, raw: str) -> Label:
        label = normalize(raw)
        return self.redirects.get(label, label)

    def add(self, record: RawRecord):
        if record.kind == RecordKind.REDIRECT:
            return
        labels = [self.canonical(field) for field in record.fields]
        if not all(labels):
            self.warn("Skipped record with an empty label: {0}".format(record))
            return
        if record.kind == RecordKind.EDGE:
            parent, child = labels
            self.labels.update(labels)
            if parent == child:
                logging.debug("Dropped self-loop on '{0}'.".format(parent))
                self.self_loops += 1
            else:
                self.edges.add((parent, child))
        elif record.kind == RecordKind.TERM:
            self.labels.add(labels[1])
            self.terms.append((normalize(record.fields[0]), labels[1]))
        elif record.kind == RecordKind.EXCLUDE:
            self.labels.add(labels[0])
            self.excluded_roots.append(labels[0])
        elif record.kind == RecordKind.DISAMBIG:
            self.labels.add(labels[0])
            self.disambiguation.add(labels[0])


def _propagate_exclusion(
    roots: Iterable[ConceptId], children: Dict[ConceptId, List[ConceptId]], n: int
) -> np.ndarray:
    excluded = np.zeros(n, dtype=bool)
    queue = deque()
    for root in roots:
        if not excluded[root]:
            excluded[root] = True
            queue.append(root)
    while queue:
        node = queue.popleft()
        for child in children.get(node, ()):
            if not excluded[child]:
                excluded[child] = True
                queue.append(child)
    return excluded


def _term_arrays(index: Dict[Surface, Set[ConceptId]]):
    surfaces = sorted(surface for surface, ids in index.items() if ids)
    counts = [len(index[surface]) for surface in surfaces]
    indptr = np.concatenate([[0], np.cumsum(counts, dtype=np.int64)])
    ids = [idx for surface in surfaces for idx in sorted(index[surface])]
    return surfaces, indptr, np.array(ids, dtype=np.int32)


def build_taxonomy(
    records: Iterable[RawRecord],
    options: IngestOptions = IngestOptions(),
    warnings: Sequence[str] = (),
) -> Tuple[Taxonomy, IngestReport]:
    """Assemble a Taxonomy from raw TOR records

    Redirects are resolved first, so edges and terms that mention an alias
    are rewritten onto the canonical concept. Self-loops are dropped and
    counted, exclusion roots are propagated to their whole downward subtree,
    disambiguation flags are applied and concept ids follow the
    lexicographic order of canonical labels.

    Parameters
    ----------
    records : iterable of RawRecord
        Output of ``parse_tsv`` and/or ``parse_sql_dump_subset``.

    options : IngestOptions
        Term indexing and exclusion options.

    warnings : sequence of str
        Warnings raised while parsing, carried into the report.

    Returns
    -------
    taxonomy : Taxonomy

    report : IngestReport

    Raises
    ------
    RedirectCycleError
        When redirects form a cycle.
    """
    records = list(records)
    redirects = resolve_redirects(records)
    collected = _Collector(redirects)
    collected.warnings.extend(warnings)
    for record in records:
        collected.add(record)
    for root in options.excluded_roots:
        label = collected.canonical(root)
        if label in collected.labels:
            collected.excluded_roots.append(label)
        else:
            collected.warn("Excluded root '{0}' is not a known concept.".format(root))

    labels = sorted(collected.labels)
    ids = {label: idx for idx, label in enumerate(labels)}
    edges = sorted((ids[parent], ids[child]) for parent, child in collected.edges)
    children = defaultdict(list)
    for parent, child in edges:
        children[parent].append(child)

    excluded = _propagate_exclusion(
        (ids[label] for label in collected.excluded_roots), children, len(labels)
    )
    disambiguation = np.zeros(len(labels), dtype=bool)
    disambiguation[
        np.array([ids[label] for label in collected.disambiguation], dtype=np.intp)
    ] = True

    index = defaultdict(set)
    for label, idx in ids.items():
        if options.index_categories_as_terms or idx not in children:
            index[label].add(idx)
    for alias, canonical in redirects.items():
        index[alias].add(ids[canonical])
    for surface, label in collected.terms:
        if surface:
            index[surface].add(ids[label])
    for surface in index:
        index[surface] = {idx for idx in index[surface] if not excluded[idx]}
    surfaces, indptr, term_ids = _term_arrays(index)

    taxonomy = Taxonomy(
        labels=labels,
        edge_parents=[parent for parent, _ in edges],
        edge_children=[child for _, child in edges],
        term_surfaces=surfaces,
        term_indptr=indptr,
        term_ids=term_ids,
        disambiguation=disambiguation,
        excluded=excluded,
    )
    report = IngestReport(
        concepts_loaded=len(labels),
        edges_loaded=len(edges),
        self_loops_dropped=collected.self_loops,
        redirects_resolved=len(redirects),
        excluded_flagged=int(excluded.sum()),
        warnings=collected.warnings,
    )
    logging.info(
        "Built taxonomy: {0} concepts, {1} edges, {2} terms.".format(
            report.concepts_loaded, report.edges_loaded, len(surfaces)
        )
    )
    return taxonomy, report
