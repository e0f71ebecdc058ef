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
from test.generic.config_utils import get_test_rmatrix_task_config
from test.generic.hook_test_utils import HookTestBase

from qmonodromy.checks import CheckReport, format_table
from qmonodromy.generic.util import load_json_lines
from qmonodromy.hooks import (
    JsonlReportHook,
    ProgressBarHook,
    ReportLoggingHook,
    SummaryTableHook,
    build_hooks,
)
from qmonodromy.runner import LocalRunner
from qmonodromy.tasks import build_task


class TestReportHooks(HookTestBase):
    def setUp(self):
        self.base_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.base_dir)

    def test_constructors(self):
        path = os.path.join(self.base_dir, "reports.jsonl")
        self.assert_hook_constructors(
            JsonlReportHook,
            "jsonl_report",
            {"path": path},
            invalid_configs=[{"path": ""}, {"path": 3}, {}],
        )
        self.assert_hook_constructors(
            ReportLoggingHook, "report_logging", {"log_timings": True}
        )
        self.assert_hook_constructors(SummaryTableHook, "summary_table", {})
        self.assert_hook_constructors(ProgressBarHook, "progress_bar", {})

    def test_reports_file(self):
        path = os.path.join(self.base_dir, "reports.jsonl")
        config = get_test_rmatrix_task_config()
        config["hooks"] = [{"name": "jsonl_report", "path": path}]
        task = build_task(config)
        LocalRunner().run(task)

        records = load_json_lines(path)
        self.assertEqual(len(records), len(task.reports))
        for record in records:
            self.assertEqual(record["params"]["n"], 2)
            self.assertEqual(record["params"]["mode"], "generic")
            self.assertIn(record["status"], ("pass", "fail", "skipped"))
        parsed = [CheckReport.from_dict(record) for record in records]
        self.assertEqual(format_table(parsed), format_table(task.reports))

    def test_logging_and_table(self):
        config = get_test_rmatrix_task_config()
        config["corrupt"] = "rhat-prefactor"
        task = build_task(config).set_hooks(
            build_hooks([{"name": "report_logging"}, {"name": "summary_table"}])
        )
        output = io.StringIO()
        with self.assertLogs(level="INFO") as logs, contextlib.redirect_stdout(output):
            LocalRunner().run(task)
        errors = [line for line in logs.output if line.startswith("ERROR")]
        self.assertTrue(any("hecke_constant" in line for line in errors))
        self.assertTrue(any("Suite rmatrix done" in line for line in logs.output))
        self.assertIn("hecke_constant", output.getvalue())
        self.assertNotIn(", 0 failed", output.getvalue().split("\n")[-2])
