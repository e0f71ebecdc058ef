#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from qmonodromy.tasks import QMonodromyTask


class VerificationRunner:
    """Base class for shared running code.

    A runner decides where the checks are computed, for instance in the
    current process or in a pool of worker processes. Runners control the
    outer portion of the loop (phases and steps) and delegate to the task
    what a step does.
    """

    def run(self, task: QMonodromyTask):
        """Runs all phases of the task.

        Args:
            task: Task to be run. It should contain everything that is needed
                for the verification
        """

        task.prepare()
        assert isinstance(task, QMonodromyTask)

        task.on_start()
        while not task.done():
            task.on_phase_start()
            while True:
                try:
                    task.step()
                except StopIteration:
                    break
            task.on_phase_end()
        task.on_end()
