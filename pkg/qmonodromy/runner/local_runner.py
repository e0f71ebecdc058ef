#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import logging

from .verification_runner import VerificationRunner


class LocalRunner(VerificationRunner):
    """Runner computing every check in the current process.
    """

    def run(self, task):
        logging.info(f"Running checks in-process over {task.field!r}")
        super().run(task)
