#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import copy
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List

from qmonodromy.checks import CheckReport

from .verification_runner import VerificationRunner


def _run_check(config: Dict[str, Any], name: str) -> List[Dict[str, Any]]:
    """Runs one check on a task rebuilt from its config in a worker."""
    from qmonodromy.tasks import build_task

    config = copy.deepcopy(config)
    config.pop("hooks", None)
    task = build_task(config)
    return [report.to_dict() for report in task.run_check(name)]


class ParallelRunner(VerificationRunner):
    """Runner distributing the checks over a pool of worker processes.

    Every worker rebuilds the task from its config, so the task must have
    been created with :func:`qmonodromy.tasks.build_task`. The results are
    merged back in check order, hence hooks see the same sequence of steps
    as with :class:`LocalRunner`.
    """

    def __init__(self, num_workers: int) -> None:
        assert num_workers >= 1, "need at least one worker"
        self.num_workers = num_workers

    def run(self, task):
        assert hasattr(
            task, "_config"
        ), "ParallelRunner needs a task built from a config"
        task.prepare()
        names = [name for suite in task.phases for name, _ in task.checks[suite]]
        logging.info(f"Running {len(names)} checks on {self.num_workers} workers")
        with ProcessPoolExecutor(max_workers=self.num_workers) as executor:
            futures = {
                name: executor.submit(_run_check, task._config, name) for name in names
            }
            precomputed = {
                name: [CheckReport.from_dict(record) for record in future.result()]
                for name, future in futures.items()
            }
        task.set_precomputed(precomputed)
        super().run(task)
