#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import unittest

from qmonodromy.hooks import build_hook
from qmonodromy.tasks import build_task


class HookTestBase(unittest.TestCase):
    def assert_hook_constructors(self, hook_type, name, config, invalid_configs=()):
        """The hook builds from keyword arguments, from its config and through
        the registry, and rejects the invalid configs."""
        self.assertIsInstance(hook_type(**config), hook_type)
        self.assertIsInstance(hook_type.from_config(config), hook_type)
        self.assertIsInstance(build_hook({"name": name, **config}), hook_type)
        for invalid in invalid_configs:
            with self.assertRaises((AssertionError, TypeError)):
                hook_type.from_config(invalid)

    def started_task(self, config):
        """A task inside its first suite, as hooks see it in on_phase_start."""
        task = build_task(config)
        task.prepare()
        task.advance_phase()
        return task
