#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from .local_runner import LocalRunner
from .parallel_runner import ParallelRunner
from .verification_runner import VerificationRunner


__all__ = ["VerificationRunner", "LocalRunner", "ParallelRunner"]
