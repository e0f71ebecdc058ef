#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from qmonodromy.checks import format_table
from qmonodromy.hooks import register_hook
from qmonodromy.hooks.verification_hook import VerificationHook


@register_hook("summary_table")
class SummaryTableHook(VerificationHook):
    """
    Prints the table of all reports to stdout at the end of the run.
    """

    on_start = VerificationHook._noop
    on_phase_start = VerificationHook._noop
    on_step = VerificationHook._noop
    on_phase_end = VerificationHook._noop

    def on_end(self, task) -> None:
        print(format_table(task.reports))
