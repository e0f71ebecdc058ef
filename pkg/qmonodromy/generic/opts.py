#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import argparse
import copy
from typing import Any, Dict, Optional

from qmonodromy.checks import SUITES
from qmonodromy.generic.util import is_pos_int


# negative controls, each breaks one normalization on purpose
CORRUPTIONS = (
    "rhat-prefactor",
    "r-convention",
    "eps-normalization",
    "m-prefactor",
    "mp-prefactor",
    "mrn-prefactor",
)

MAX_N = 4


def add_generic_args(parser):
    """
    Adds generic command-line arguments for verification runs to parser.
    """
    parser.add_argument(
        "--config_file",
        default=None,
        type=str,
        help="path to a JSON task config; command-line flags override it",
    )
    parser.add_argument("--n", default=None, type=int, help="rank n of SU(n)")
    parser.add_argument(
        "--level", default=None, type=int, help="level k, h = k + n (default 2)"
    )
    parser.add_argument(
        "--mode",
        default=None,
        choices=["cyclotomic", "generic"],
        help="q a root of unity or a formal indeterminate (default generic)",
    )
    parser.add_argument(
        "--suite",
        action="append",
        default=None,
        choices=list(SUITES) + ["all"],
        help="suite to run, repeatable; all runs every suite (default)",
    )
    parser.add_argument(
        "--max-word-len",
        dest="max_word_len",
        default=None,
        type=int,
        help="length of the longest zero-mode monomial tested (default n + 1)",
    )
    parser.add_argument(
        "--emit",
        default=None,
        type=str,
        help="write one JSON report per check to this path",
    )
    parser.add_argument(
        "--jobs",
        default=1,
        type=int,
        help="number of worker processes (default 1, in-process)",
    )
    parser.add_argument(
        "--allow-large-n",
        dest="allow_large_n",
        default=False,
        action="store_true",
        help="allow n = 4, which is slow",
    )
    parser.add_argument(
        "--corrupt",
        default=None,
        choices=CORRUPTIONS,
        help="break one convention on purpose; checks are expected to fail",
    )
    parser.add_argument(
        "--show-progress",
        dest="show_progress",
        default=False,
        action="store_true",
        help="shows a progress bar for every suite",
    )
    parser.add_argument(
        "--log-level",
        dest="log_level",
        default="INFO",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="logging level (default INFO)",
    )

    return parser


def check_generic_args(args):
    """
    Perform assertions on generic command-line arguments.
    """

    # check types and values:
    if args.n is not None:
        assert is_pos_int(args.n) and args.n >= 2, "n must be an integer >= 2"
        assert args.n <= MAX_N, f"n = {args.n} is not supported, use n <= {MAX_N}"
        assert (
            args.n < MAX_N or args.allow_large_n
        ), f"n = {MAX_N} is slow and needs --allow-large-n"
    if args.level is not None:
        assert is_pos_int(args.level) and args.level >= 1, "level must be >= 1"
    if args.max_word_len is not None:
        assert is_pos_int(args.max_word_len), "max word length must be >= 0"
    assert is_pos_int(args.jobs) and args.jobs >= 1, "jobs must be >= 1"

    # return input arguments:
    return args


def config_from_args(args, config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """
    Builds a task config from the command-line arguments on top of config.
    """
    config = copy.deepcopy(config) if config is not None else {}
    config.setdefault("name", "verification")
    field_config = config.setdefault("field", {})
    if args.n is not None:
        field_config["n"] = args.n
    field_config.setdefault("n", 2)
    if args.level is not None:
        field_config["k"] = args.level
    field_config.setdefault("k", 2)
    if args.mode is not None:
        field_config["name"] = args.mode
    field_config.setdefault("name", "generic")
    if args.suite is not None:
        suites = (
            list(SUITES)
            if "all" in args.suite
            else [suite for suite in SUITES if suite in args.suite]
        )
        config["suites"] = suites
    if args.max_word_len is not None:
        config["max_word_len"] = args.max_word_len
    if args.corrupt is not None:
        config["corrupt"] = args.corrupt

    n = field_config["n"]
    assert is_pos_int(n) and 2 <= n <= MAX_N, f"n = {n} is not supported"
    assert n < MAX_N or args.allow_large_n, f"n = {MAX_N} needs --allow-large-n"
    return config


def get_parser():
    """
    Return a standard command-line parser.
    """
    parser = argparse.ArgumentParser(
        description="""Verify the identities of the SU(n) quantum group objects.

    Builds the R-matrices, epsilon tensors, the zero-mode module and the
    monodromy matrices in exact arithmetic and checks every identity, suite
    by suite. Exits with 0 if all checks pass, 1 if one fails and 2 on
    invalid arguments."""
    )

    parser = add_generic_args(parser)
    return parser


def parse_verify_arguments(parser=None, argv=None):
    """
    Assert and parse the command-line arguments of a given (or default) parser.
    """

    # set input arguments:
    if parser is None:
        parser = get_parser()

    # parse input arguments:
    args = parser.parse_args(argv)

    # assertions:
    args = check_generic_args(args)
    return args
