import logging
import sys
from typing import Optional

import tqdm

from .. import __version__

_PRECISE_FORMAT = (
    "%(asctime)s [%(levelname)s] %(filename)30s:%(lineno)3s"
    + " - %(funcName)30s\t%(message)s"
)
_INFO_FORMAT = "%(asctime)s [%(levelname)s]\t%(message)s"


class _TqdmStderr:
    """File-like sink that keeps log lines clear of progress bars"""

    @staticmethod
    def write(message: str):
        message = message.rstrip("\n")
        if message:
            tqdm.tqdm.write(message, file=sys.stderr)

    @staticmethod
    def flush():
        sys.stderr.flush()


def _file_handler(log_file: str):
    handler = logging.FileHandler(filename=log_file, mode="a")
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(_PRECISE_FORMAT))
    return handler


def _stream_handler(verbose: bool):
    handler = logging.StreamHandler(_TqdmStderr())
    handler.setLevel(logging.INFO if verbose else logging.WARNING)
    handler.setFormatter(logging.Formatter(_INFO_FORMAT))
    return handler


def setup_logger(verbose: bool = False, log_file: Optional[str] = None):
    """Route log records to standard error and, optionally, a file"""
    handlers = [_stream_handler(verbose)]
    if log_file is not None:
        handlers.append(_file_handler(log_file))
    del logging.root.handlers[:]
    logging.basicConfig(level=logging.DEBUG, handlers=handlers)
    version_notice = (
        "Using " + sys.argv[0] + " (contextract, version " + __version__ + ")"
    )
    logging.info(version_notice)


def progress(iterable, **kwargs):
    """Progress bar on standard error, silent when it is not a terminal"""
    kwargs.setdefault("disable", not sys.stderr.isatty())
    return tqdm.tqdm(iterable, file=sys.stderr, **kwargs)
