import logging
from typing import Dict, Iterable

from contextract.core import Label, RedirectCycleError

from ._normalize import normalize
from ._records import RawRecord, RecordKind


def _direct_redirects(records: Iterable[RawRecord]) -> Dict[Label, Label]:
    direct = {}
    for record in records:
        if record.kind != RecordKind.REDIRECT:
            continue
        alias, target = (normalize(field) for field in record.fields)
        if not alias or not target:
            logging.warning("Skipped redirect with empty label: {0}".format(record))
            continue
        if alias == target:
            logging.debug("Skipped identity redirect '{0}'.".format(alias))
            continue
        known = direct.setdefault(alias, target)
        if known != target:
            logging.warning(
                "Redirect '{0}' points to both '{1}' and '{2}', kept the first.".format(
                    alias, known, target
                )
            )
    return direct


def resolve_redirects(records: Iterable[RawRecord]) -> Dict[Label, Label]:
    """Map every redirect alias to its final canonical label

    Chains are followed transitively (``a -> b -> c`` gives ``a -> c`` and
    ``b -> c``); no value of the result is itself an alias. Labels are
    normalized first, so aliases differing only by case or underscores from
    their target vanish.

    Raises
    ------
    RedirectCycleError
        When a chain loops back, naming the members of the loop.
    """
    direct = _direct_redirects(records)
    resolved = {}
    for alias in sorted(direct):
        if alias in resolved:
            continue
        chain = [alias]
        position = {alias: 0}
        node = direct[alias]
        while node in direct and node not in resolved:
            if node in position:
                error = RedirectCycleError(chain[position[node] :])
                logging.error(str(error))
                raise error
            position[node] = len(chain)
            chain.append(node)
            node = direct[node]
        canonical = resolved.get(node, node)
        for member in chain:
            resolved[member] = canonical
    return resolved
