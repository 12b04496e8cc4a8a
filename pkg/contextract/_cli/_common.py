"""Shared pieces of the command-line tools"""
import argparse
import logging
import sys
from typing import Dict, List, Optional, Sequence

from contextract.core import setup_logger
from contextract.graph import WeightDirection
from contextract.matching import AmbiguityPolicy, load_stopwords
from contextract.pipeline import PipelineConfig
from contextract.tor import load_snapshot

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def boolean(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise argparse.ArgumentTypeError("not a boolean: {0}".format(value))


def positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError("must be at least 1: {0}".format(value))
    return number


def add_common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--config", default=None, help="File with `key = value` option lines."
    )
    parser.add_argument(
        "--verbose", action="store_true", help="Report progress on standard error."
    )
    parser.add_argument("--log-file", default=None, help="Append debug log here.")


def add_pipeline_arguments(parser: argparse.ArgumentParser):
    defaults = PipelineConfig()
    group = parser.add_argument_group("extraction")
    group.add_argument("--ngram-depth", type=positive_int, default=defaults.ngram_depth)
    group.add_argument("--word-depth", type=positive_int, default=defaults.word_depth)
    group.add_argument("--epsilon", type=float, default=defaults.epsilon)
    group.add_argument(
        "--phase1-contexts", type=positive_int, default=defaults.phase1_contexts
    )
    group.add_argument(
        "--final-contexts", type=positive_int, default=defaults.final_contexts
    )
    group.add_argument(
        "--keyword-distance", type=positive_int, default=defaults.keyword_distance
    )
    group.add_argument("--n-max", type=int, default=defaults.n_max)
    add_scheme_arguments(group)
    group.add_argument("--min-keyword-score", type=float, default=None)
    group.add_argument(
        "--stopwords", default=None, help="Stopword file replacing the bundled list."
    )


def add_scheme_arguments(parser):
    parser.add_argument(
        "--scheme",
        choices=[direction.value for direction in WeightDirection],
        default=WeightDirection.LEAFWARD.value,
    )
    parser.add_argument(
        "--ambiguity",
        choices=[policy.value for policy in AmbiguityPolicy],
        default=AmbiguityPolicy.SKIP_DISAMBIGUATION.value,
    )


def pipeline_config(args: argparse.Namespace) -> PipelineConfig:
    stopwords = None if args.stopwords is None else load_stopwords(args.stopwords)
    return PipelineConfig(
        ngram_depth=args.ngram_depth,
        word_depth=args.word_depth,
        epsilon=args.epsilon,
        phase1_contexts=args.phase1_contexts,
        final_contexts=args.final_contexts,
        keyword_distance=args.keyword_distance,
        n_max=args.n_max,
        scheme_direction=WeightDirection(args.scheme),
        ambiguity=AmbiguityPolicy(args.ambiguity),
        min_keyword_score=args.min_keyword_score,
        stopwords=stopwords,
    ).validate()


def _options(parser: argparse.ArgumentParser) -> Dict[str, argparse.Action]:
    options = {}
    for action in parser._actions:
        for option in action.option_strings:
            if option.startswith("--"):
                options[option[2:]] = action
    return options


def read_config_file(path: str) -> List[tuple]:
    """``key = value`` lines of a configuration file, ``#`` comments allowed"""
    entries = []
    with open(path, encoding="utf-8") as lines:
        for line_number, line in enumerate(lines, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                msg = "{0}: line {1}: expected `key = value`".format(path, line_number)
                logging.error(msg)
                raise ValueError(msg)
            entries.append((key.strip(), value.strip()))
    return entries


def apply_config_file(parser: argparse.ArgumentParser, path: str):
    """Turn configuration file entries into parser defaults

    Keys are long option names without dashes. Options given on the command
    line still override them.
    """
    options = _options(parser)
    defaults = {}
    for key, value in read_config_file(path):
        action = options.get(key)
        if action is None or key in ("config", "help"):
            parser.error("unknown configuration key: {0}".format(key))
        if isinstance(action, argparse._StoreTrueAction):
            converted = boolean(value)
        elif isinstance(action, argparse._AppendAction):
            converted = [item.strip() for item in value.split(",") if item.strip()]
        else:
            try:
                converted = action.type(value) if action.type else value
            except (argparse.ArgumentTypeError, ValueError) as ex:
                parser.error("configuration key {0}: {1}".format(key, ex))
            if action.choices is not None and converted not in action.choices:
                parser.error(
                    "configuration key {0}: invalid choice: {1}".format(key, value)
                )
        defaults[action.dest] = converted
    parser.set_defaults(**defaults)


def parse_args(
    parser: argparse.ArgumentParser,
    commands: Dict[str, argparse.ArgumentParser],
    argv: Optional[Sequence[str]] = None,
) -> argparse.Namespace:
    """Parse the command line, reading the configuration file first if given"""
    args = parser.parse_args(argv)
    if getattr(args, "config", None) is not None:
        apply_config_file(commands[args.command], args.config)
        args = parser.parse_args(argv)
    return args


def prepare(args: argparse.Namespace):
    setup_logger(verbose=args.verbose, log_file=args.log_file)


def load_taxonomy(path: str):
    logging.info("Loading taxonomy snapshot: " + path)
    with open(path, "rb") as source:
        return load_snapshot(source)


def write(text: str):
    sys.stdout.write(text)
    if text and not text.endswith("\n"):
        sys.stdout.write("\n")
    sys.stdout.flush()
