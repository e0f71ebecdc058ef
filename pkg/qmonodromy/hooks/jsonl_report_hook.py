#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from qmonodromy.generic.util import save_json_lines
from qmonodromy.hooks import register_hook
from qmonodromy.hooks.verification_hook import VerificationHook


@register_hook("jsonl_report")
class JsonlReportHook(VerificationHook):
    """
    Writes the reports of the run, one JSON object per check, at the end.
    """

    on_start = VerificationHook._noop
    on_phase_start = VerificationHook._noop
    on_step = VerificationHook._noop
    on_phase_end = VerificationHook._noop

    def __init__(self, path: str) -> None:
        """The constructor method of JsonlReportHook.

        Args:
            path: output file, any path fvcore's PathManager can open.

        """
        super().__init__()
        assert isinstance(path, str) and path, "path must be a non empty string"
        self.path = path

    def on_end(self, task) -> None:
        save_json_lines([report.to_dict() for report in task.reports], self.path)
