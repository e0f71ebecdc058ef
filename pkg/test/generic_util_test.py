#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import json
import os
import shutil
import tempfile
import unittest

import numpy as np
import qmonodromy.generic.util as util
from qmonodromy.generic.perf_stats import PerfStats, PerfTimer


class TestUtilMethods(unittest.TestCase):
    def setUp(self):
        self.base_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.base_dir)

    def test_is_pos_int(self):
        self.assertTrue(util.is_pos_int(0))
        self.assertTrue(util.is_pos_int(3))
        self.assertFalse(util.is_pos_int(-1))
        self.assertFalse(util.is_pos_int(2.0))
        self.assertFalse(util.is_pos_int(True))

    def test_numpy_seed(self):
        # the seeded draws are reproducible and the global state is restored
        np.random.seed(0)
        np.random.rand(10)
        expected = np.random.rand(10)
        np.random.seed(0)
        np.random.rand(10)
        with util.numpy_seed(1):
            seeded = np.random.rand(10)
        self.assertTrue(np.array_equal(np.random.rand(10), expected))
        np.random.seed(1)
        self.assertTrue(np.array_equal(np.random.rand(10), seeded))

    def test_load_json(self):
        config = {"name": "verification", "field": {"name": "generic", "n": 2}}
        path = os.path.join(self.base_dir, "config.json")
        with open(path, "w") as f:
            json.dump(config, f)
        self.assertEqual(util.load_json(path), config)
        with self.assertRaises(AssertionError):
            util.load_json(os.path.join(self.base_dir, "missing.json"))

    def test_json_lines(self):
        records = [{"check_id": "hecke_constant", "params": {"n": 2}}, {"q": "q^(1/8)"}]
        path = os.path.join(self.base_dir, "reports.jsonl")
        util.save_json_lines(records, path)
        with open(path) as f:
            self.assertEqual(len(f.read().splitlines()), 2)
        self.assertEqual(util.load_json_lines(path), records)

        util.save_json_lines([], path)
        self.assertEqual(util.load_json_lines(path), [])

    def test_perf_timer(self):
        perf_stats = PerfStats()
        with PerfTimer("braid", perf_stats) as timer:
            pass
        self.assertGreaterEqual(timer.elapsed_ms, 0)
        with self.assertRaises(ValueError):
            with PerfTimer("hecke", perf_stats):
                raise ValueError()
        report = perf_stats.report_str()
        self.assertIn("braid", report)
        # timers of failed blocks are not recorded
        self.assertNotIn("hecke", report)
        self.assertEqual(PerfStats().report_str(), "")
