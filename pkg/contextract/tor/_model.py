import logging
from collections import deque
from typing import (
    Dict,
    FrozenSet,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np
import scipy.sparse as sp

from contextract.core import (
    ConceptId,
    Label,
    Surface,
    UnknownConceptError,
)

_EMPTY = frozenset()


class Concept(NamedTuple):
    """Node of the TOR hierarchy"""

    id: ConceptId
    canonical_label: Label
    is_disambiguation: bool
    is_excluded: bool


def _frozen(array, dtype) -> np.ndarray:
    array = np.array(array, dtype=dtype).ravel()
    array.setflags(write=False)
    return array


def _adjacency(rows: np.ndarray, cols: np.ndarray, n: int) -> sp.csr_matrix:
    data = np.ones(rows.size, dtype=np.int8)
    matrix = sp.csr_matrix((data, (rows, cols)), shape=(n, n))
    matrix.sum_duplicates()
    matrix.sort_indices()
    return matrix


class Taxonomy:
    """Immutable termino-ontological resource

    Concepts are identified by dense integer ids assigned in lexicographic
    order of their canonical labels. Hierarchical edges point from the more
    general concept (parent) to the more specific one (child); the edge set
    may contain cycles. The term index maps normalized surface forms to
    canonical, non-excluded concepts.

    Parameters
    ----------
    labels : sequence of str
        Canonical labels, sorted, one per concept id.

    edge_parents, edge_children : array-like of int
        Parallel arrays with the endpoints of every hierarchical edge.

    term_surfaces : sequence of str
        Sorted indexed surface forms.

    term_indptr, term_ids : array-like of int
        CSR layout of the concepts indexed under each surface:
        ``term_ids[term_indptr[i]:term_indptr[i + 1]]`` for surface ``i``.

    disambiguation, excluded : array-like of bool
        Per-concept flags.
    """

    def __init__(
        self,
        labels: Sequence[Label],
        edge_parents,
        edge_children,
        term_surfaces: Sequence[Surface],
        term_indptr,
        term_ids,
        disambiguation,
        excluded,
    ):
        self._labels = tuple(labels)
        n = len(self._labels)
        self._parents = _frozen(edge_parents, np.int32)
        self._children = _frozen(edge_children, np.int32)
        self._disambiguation = _frozen(disambiguation, bool)
        self._excluded = _frozen(excluded, bool)
        term_indptr = _frozen(term_indptr, np.int64)
        term_ids = _frozen(term_ids, np.int32)
        self._validate(term_surfaces, term_indptr, term_ids)
        self._ids = {label: idx for idx, label in enumerate(self._labels)}
        self._upward = _adjacency(self._children, self._parents, n)
        self._downward = _adjacency(self._parents, self._children, n)
        self._term_index: Dict[Surface, FrozenSet[ConceptId]] = {
            surface: frozenset(term_ids[start:stop].tolist())
            for surface, start, stop in zip(
                term_surfaces, term_indptr[:-1], term_indptr[1:]
            )
        }

    def _validate(self, term_surfaces, term_indptr, term_ids):
        n = len(self._labels)
        problems = []
        if list(self._labels) != sorted(set(self._labels)):
            problems.append("labels must be unique and sorted")
        if self._parents.size != self._children.size:
            problems.append("edge endpoint arrays differ in length")
        elif self._parents.size:
            if min(self._parents.min(), self._children.min()) < 0:
                problems.append("negative concept id in edges")
            if max(self._parents.max(), self._children.max()) >= n:
                problems.append("edge refers to a missing concept")
            if np.any(self._parents == self._children):
                problems.append("self-loop edge")
        if self._disambiguation.size != n or self._excluded.size != n:
            problems.append("flag arrays do not match the number of concepts")
        if term_indptr.size != len(term_surfaces) + 1:
            problems.append("term pointer array does not match the term count")
        elif term_indptr[0] != 0 or term_indptr[-1] != term_ids.size:
            problems.append("term pointer array does not span the id array")
        elif np.any(np.diff(term_indptr) < 0):
            problems.append("term pointer array is not monotonic")
        if term_ids.size and (term_ids.min() < 0 or term_ids.max() >= n):
            problems.append("term refers to a missing concept")
        elif term_ids.size and np.any(self._excluded[term_ids]):
            problems.append("term refers to an excluded concept")
        if problems:
            msg = "Inconsistent taxonomy: " + "; ".join(problems)
            logging.error(msg)
            raise ValueError(msg)

    def __len__(self) -> int:
        return len(self._labels)

    def __repr__(self) -> str:
        return "Taxonomy(concepts={0}, edges={1}, terms={2})".format(
            len(self), self.n_edges, len(self._term_index)
        )

    @property
    def labels(self) -> Tuple[Label, ...]:
        return self._labels

    @property
    def n_edges(self) -> int:
        return int(self._parents.size)

    @property
    def edges(self) -> Tuple[np.ndarray, np.ndarray]:
        """Parallel (parents, children) id arrays"""
        return self._parents, self._children

    @property
    def disambiguation_flags(self) -> np.ndarray:
        return self._disambiguation

    @property
    def excluded_flags(self) -> np.ndarray:
        return self._excluded

    @property
    def n_terms(self) -> int:
        return len(self._term_index)

    @property
    def terms(self) -> List[Surface]:
        return sorted(self._term_index)

    def _check(self, concept: ConceptId):
        if not 0 <= concept < len(self._labels):
            error = UnknownConceptError(concept)
            logging.error(str(error))
            raise error

    def concept(self, concept: ConceptId) -> Concept:
        self._check(concept)
        return Concept(
            id=concept,
            canonical_label=self._labels[concept],
            is_disambiguation=bool(self._disambiguation[concept]),
            is_excluded=bool(self._excluded[concept]),
        )

    def concepts(self) -> List[Concept]:
        return [self.concept(idx) for idx in range(len(self))]

    def label(self, concept: ConceptId) -> Label:
        self._check(concept)
        return self._labels[concept]

    def concept_id(self, label: Label) -> Optional[ConceptId]:
        """Id of the concept with given canonical label, if any"""
        return self._ids.get(label)

    def is_disambiguation(self, concept: ConceptId) -> bool:
        self._check(concept)
        return bool(self._disambiguation[concept])

    def is_excluded(self, concept: ConceptId) -> bool:
        self._check(concept)
        return bool(self._excluded[concept])

    def parents_of(self, concept: ConceptId) -> np.ndarray:
        self._check(concept)
        start, stop = self._upward.indptr[concept : concept + 2]
        return self._upward.indices[start:stop]

    def children_of(self, concept: ConceptId) -> np.ndarray:
        self._check(concept)
        start, stop = self._downward.indptr[concept : concept + 2]
        return self._downward.indices[start:stop]

    def term_entries(self) -> List[Tuple[Surface, Tuple[ConceptId, ...]]]:
        """Sorted (surface, sorted concept ids) pairs of the term index"""
        return [
            (surface, tuple(sorted(self._term_index[surface])))
            for surface in sorted(self._term_index)
        ]

    def lookup_term(self, surface: Surface) -> FrozenSet[ConceptId]:
        """Concepts indexed under a normalized surface form

        Missing surfaces, the empty one included, give an empty set.
        Disambiguation concepts are returned; the matcher applies the
        ambiguity policy.
        """
        return self._term_index.get(surface, _EMPTY)

    def ancestors_within(
        self, start: ConceptId, max_depth: int
    ) -> Dict[ConceptId, int]:
        """Concepts reachable upward from ``start`` within ``max_depth`` edges

        Breadth-first search along child -> parent edges. Each concept is
        reported with its minimum upward distance; ``start`` is at distance 0.
        Excluded concepts are neither entered nor returned.

        Examples
        --------
        On the chain Root -> Science -> Computing -> Mouse,
        ``ancestors_within(mouse, 2)`` gives
        ``{mouse: 0, computing: 1, science: 2}``.
        """
        self._check(start)
        if max_depth < 0:
            msg = "max_depth({0}) < 0".format(max_depth)
            logging.error(msg)
            raise ValueError(msg)
        if self._excluded[start]:
            return {}
        indptr, indices = self._upward.indptr, self._upward.indices
        distances = {start: 0}
        frontier = deque([start])
        while frontier:
            node = frontier.popleft()
            distance = distances[node]
            if distance == max_depth:
                continue
            for parent in indices[indptr[node] : indptr[node + 1]].tolist():
                if parent in distances or self._excluded[parent]:
                    continue
                distances[parent] = distance + 1
                frontier.append(parent)
        return distances
