#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""
This is the main script used for verification runs.

It builds the objects of the SU(n) quantum group in exact arithmetic and
checks every identity, suite by suite, printing a summary table.

Example:
    Verify everything for n = 2 with a formal q:

        $ ./qmonodromy_verify.py --n 2

    Verify the monodromy suite at a root of unity, level k = 1, and keep a
    JSON lines report:

        $ ./qmonodromy_verify.py --n 3 --mode cyclotomic --level 1 \
                 --suite monodromy --emit reports/n3k1.jsonl

    Start from a config file and spread the checks over four processes:

        $ ./qmonodromy_verify.py \
                 --config_file qmonodromy/configs/su3_generic.json --jobs 4

    For other use cases, try

        $ ./qmonodromy_verify.py --help

Exit status is 0 if every check passed or was skipped, 1 if a check failed
and 2 if the arguments are invalid.
"""

import logging
import sys
from pathlib import Path

from qmonodromy.generic.opts import (
    check_generic_args,
    config_from_args,
    get_parser,
)
from qmonodromy.generic.registry_utils import import_all_packages_from_directory
from qmonodromy.generic.util import load_json
from qmonodromy.hooks import (
    JsonlReportHook,
    ProgressBarHook,
    ReportLoggingHook,
    SummaryTableHook,
)
from qmonodromy.runner import LocalRunner, ParallelRunner
from qmonodromy.tasks import build_task


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def main(args, config):
    task = build_task(config)

    # Configure hooks to log, print and store the reports
    task.set_hooks(configure_hooks(args, config))

    # LocalRunner computes every check here. ParallelRunner rebuilds the task
    # in worker processes and merges the reports back in check order.
    runner = LocalRunner() if args.jobs == 1 else ParallelRunner(args.jobs)

    # That's it! When this call returns, every check has a report.
    runner.run(task)

    if args.emit:
        logging.info(f'Reports of this run are available at: "{args.emit}"')
    return EXIT_FAILED if task.failed else EXIT_OK


def configure_hooks(args, config):
    hooks = [ReportLoggingHook(log_timings=args.log_level == "DEBUG")]
    if args.show_progress:
        hooks.append(ProgressBarHook())
    if args.emit:
        hooks.append(JsonlReportHook(args.emit))
    hooks.append(SummaryTableHook())
    return hooks


def run(argv=None) -> int:
    parser = get_parser()
    args = parser.parse_args(argv)
    logging.getLogger().setLevel(args.log_level)
    try:
        args = check_generic_args(args)
        config = load_json(args.config_file) if args.config_file else None
        config = config_from_args(args, config)
    except AssertionError as err:
        logging.error(f"Invalid arguments: {err}")
        return EXIT_USAGE
    return main(args, config)


# run all the things:
if __name__ == "__main__":
    logging.basicConfig(format="%(asctime)s %(levelname)s %(message)s")
    logger = logging.getLogger()
    logger.setLevel(logging.INFO)

    logging.info("qmonodromy verification script.")

    # This imports all packages in the same directory as qmonodromy_verify.py,
    # so that their registration decorators make extra checks, fields and
    # hooks available to configs.
    file_root = Path(__file__).parent
    import_all_packages_from_directory(file_root)

    sys.exit(run())
