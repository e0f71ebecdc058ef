#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import logging
from collections import Counter

from qmonodromy.checks import FAIL, SKIPPED
from qmonodromy.hooks import register_hook
from qmonodromy.hooks.verification_hook import VerificationHook


@register_hook("report_logging")
class ReportLoggingHook(VerificationHook):
    """
    Logs every check outcome as it is produced and the totals of each suite.
    """

    on_phase_start = VerificationHook._noop

    def __init__(self, log_timings: bool = False) -> None:
        """The constructor method of ReportLoggingHook.

        Args:
            log_timings: if True, also logs the per-check timers at the end.

        """
        super().__init__()
        self.log_timings = log_timings

    def on_start(self, task) -> None:
        logging.info(f"Starting verification. Task: {task}")

    def on_step(self, task) -> None:
        for report in task.last_reports:
            params = ", ".join(f"{k}={v}" for k, v in sorted(report.params.items()))
            message = f"[{report.suite}] {report.check_id} ({params}): {report.status}"
            if report.status == FAIL:
                logging.error(f"{message}, witness {report.witness}")
            elif report.status == SKIPPED:
                logging.info(f"{message} ({report.reason})")
            else:
                logging.info(f"{message} in {report.elapsed_ms} ms")

    def on_phase_end(self, task) -> None:
        counts = Counter(
            report.status for report in task.reports if report.suite == task.phase
        )
        logging.info(
            f"Suite {task.phase} done: "
            + ", ".join(f"{counts[status]} {status}" for status in sorted(counts))
        )

    def on_end(self, task) -> None:
        counts = Counter(report.status for report in task.reports)
        logging.info(
            f"Verification done, {len(task.reports)} checks: "
            + ", ".join(f"{counts[status]} {status}" for status in sorted(counts))
        )
        if self.log_timings:
            logging.info(f"Timers:\n{task.perf_stats.report_str()}")
