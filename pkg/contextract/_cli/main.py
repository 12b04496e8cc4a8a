"""contextract command-line entry point"""
import argparse
import logging
import sys
from typing import Optional, Sequence

from contextract import __version__

from . import build_tor, evaluate, extract, inspect_term
from ._common import parse_args, prepare

_COMMANDS = (build_tor, extract, inspect_term, evaluate)


def make_parser():
    parser = argparse.ArgumentParser(
        prog="contextract",
        description="Context and keyword extraction driven by a "
        "termino-ontological resource.",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + __version__
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    commands = {}
    for command in _COMMANDS:
        sub = command.add_parser(subparsers)
        commands[sub.prog.split()[-1]] = sub
    return parser, commands


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser, commands = make_parser()
    try:
        args = parse_args(parser, commands, argv)
        prepare(args)
        return args.run(args)
    except (ValueError, KeyError, OSError) as ex:
        logging.critical(str(ex))
        return 1


if __name__ == "__main__":
    sys.exit(main())
