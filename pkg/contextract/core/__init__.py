"""Reusable utilities used for building contextract library"""

from ._errors import (
    MissingGoldError,
    RedirectCycleError,
    SnapshotError,
    SnapshotVersionError,
    TorFormatError,
    UnknownConceptError,
)
from ._gin_compat import configurable
from ._parallel import get_n_jobs, maybe_pool
from ._types import (
    ConceptId,
    Label,
    Span,
    Surface,
    Weight,
)
from ._utils import progress, setup_logger

__all__ = [
    "ConceptId",
    "Label",
    "Span",
    "Surface",
    "Weight",
    "MissingGoldError",
    "RedirectCycleError",
    "SnapshotError",
    "SnapshotVersionError",
    "TorFormatError",
    "UnknownConceptError",
    "configurable",
    "get_n_jobs",
    "maybe_pool",
    "progress",
    "setup_logger",
]
