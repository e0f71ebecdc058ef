#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import unittest
from test.generic.config_utils import get_test_rmatrix_task_config

from qmonodromy.hooks import VerificationHook
from qmonodromy.runner import LocalRunner, ParallelRunner
from qmonodromy.tasks import VerificationTask, build_task


class RecordingHook(VerificationHook):
    def __init__(self):
        super().__init__()
        self.events = []

    def on_start(self, task):
        self.events.append("start")

    def on_phase_start(self, task):
        self.events.append(f"phase_start:{task.phase}")

    def on_step(self, task):
        self.events.append(f"step:{len(task.last_reports)}")

    def on_phase_end(self, task):
        self.events.append(f"phase_end:{task.phase}")

    def on_end(self, task):
        self.events.append("end")


class TestRunners(unittest.TestCase):
    def test_hook_order(self):
        """Checks hooks see one phase per suite and one step per check."""
        config = get_test_rmatrix_task_config()
        config["suites"] = ["rmatrix", "epsilon"]
        config["checks"] = ["braid", "eps_normalization"]
        hook = RecordingHook()
        task = build_task(config).set_hooks([hook])
        LocalRunner().run(task)
        self.assertEqual(
            hook.events,
            [
                "start",
                "phase_start:rmatrix",
                "step:2",
                "phase_end:rmatrix",
                "phase_start:epsilon",
                "step:2",
                "phase_end:epsilon",
                "end",
            ],
        )

    def test_parallel_matches_local(self):
        local_task = build_task(get_test_rmatrix_task_config())
        LocalRunner().run(local_task)
        parallel_task = build_task(get_test_rmatrix_task_config())
        ParallelRunner(2).run(parallel_task)

        def summary(task):
            return [(r.check_id, r.status, r.params) for r in task.reports]

        self.assertEqual(summary(parallel_task), summary(local_task))

    def test_parallel_needs_config(self):
        task = VerificationTask()
        with self.assertRaises(AssertionError):
            ParallelRunner(2).run(task)
        with self.assertRaises(AssertionError):
            ParallelRunner(0)
