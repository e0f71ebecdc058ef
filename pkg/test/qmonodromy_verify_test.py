#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import contextlib
import io
import os
import shutil
import tempfile
import unittest

from qmonodromy.generic.util import load_json_lines
from qmonodromy_verify import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run


class TestVerifyScript(unittest.TestCase):
    def setUp(self):
        self.base_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.base_dir)

    def _run(self, argv):
        output = io.StringIO()
        with contextlib.redirect_stdout(output):
            status = run(argv + ["--log-level", "WARNING"])
        return status, output.getvalue()

    def test_passing_run(self):
        path = os.path.join(self.base_dir, "reports.jsonl")
        status, output = self._run(["--n", "2", "--suite", "rmatrix", "--emit", path])
        self.assertEqual(status, EXIT_OK)
        self.assertIn("hecke_constant", output)
        self.assertIn("0 failed", output)

        records = load_json_lines(path)
        self.assertGreater(len(records), 0)
        self.assertTrue(all(record["status"] != "fail" for record in records))
        self.assertTrue(all(record["suite"] == "rmatrix" for record in records))

    def test_corrupted_run(self):
        status, output = self._run(
            ["--suite", "rmatrix", "--corrupt", "rhat-prefactor"]
        )
        self.assertEqual(status, EXIT_FAILED)
        self.assertIn("fail", output)

    def test_invalid_arguments(self):
        self.assertEqual(self._run(["--n", "5"])[0], EXIT_USAGE)
        self.assertEqual(self._run(["--n", "4"])[0], EXIT_USAGE)
        missing = os.path.join(self.base_dir, "missing.json")
        self.assertEqual(self._run(["--config_file", missing])[0], EXIT_USAGE)

    def test_parallel_run(self):
        status, output = self._run(["--suite", "rmatrix", "--jobs", "2"])
        self.assertEqual(status, EXIT_OK)
        self.assertIn("0 failed", output)
