#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import copy
import unittest
from test.generic.config_utils import get_test_rmatrix_task_config, get_test_task_config
from test.generic.utils import generic_field

from qmonodromy.checks import FAIL, PASS, SUITES
from qmonodromy.field import CyclotomicField
from qmonodromy.generic.errors import NoValidVariant
from qmonodromy.runner import LocalRunner
from qmonodromy.tasks import VerificationTask, build_task
from qmonodromy.weight import Weight


class TestVerificationTask(unittest.TestCase):
    def test_build_task(self):
        config = get_test_task_config()
        task = build_task(config)
        self.assertIsInstance(task, VerificationTask)
        self.assertEqual(task.n, 2)
        self.assertEqual(task.suites, ["rmatrix", "epsilon"])
        self.assertEqual(task.max_word_len, 2)
        self.assertIn('"name": "verification"', repr(task))

        config = get_test_task_config(mode="cyclotomic", k=1)
        del config["max_word_len"]
        task = build_task(config)
        self.assertIsInstance(task.field, CyclotomicField)
        self.assertEqual(task.level, 1)
        self.assertEqual(task.max_word_len, 3)
        self.assertEqual(task.base_params(), {"n": 2, "mode": "cyclotomic", "k": 1})

        with self.assertRaises(AssertionError):
            build_task({"name": "classification_task"})

    def test_setters(self):
        task = VerificationTask().set_field(generic_field(2))
        self.assertEqual(task.suites, list(SUITES))
        task.set_suites(["frt", "rmatrix"])
        self.assertEqual(task.suites, ["rmatrix", "frt"])
        with self.assertRaises(AssertionError):
            task.set_suites(["optics"])
        with self.assertRaises(AssertionError):
            task.set_frt_sites([0])
        with self.assertRaises(AssertionError):
            task.set_hooks(["report_logging"])

    def test_test_weights(self):
        config = get_test_task_config()
        config["test_weights"] = 4
        weights = build_task(config).test_weights
        self.assertEqual(len(weights), 4)
        self.assertEqual(weights[0], Weight.vacuum(2))
        self.assertTrue(all(sum(weight.p) == 0 for weight in weights))
        # seeded
        self.assertEqual(build_task(copy.deepcopy(config)).test_weights, weights)

    def test_test_weights_distinct_and_nonsingular(self):
        for mode, k in (("generic", 1), ("cyclotomic", 1), ("cyclotomic", 2)):
            config = get_test_task_config(mode=mode, k=k)
            config["test_weights"] = 5
            task = build_task(config)
            weights = task.test_weights
            self.assertEqual(len(weights), 5)
            self.assertEqual(len(set(weights)), 5)
            for weight in weights:
                for i in range(1, 3):
                    for j in range(i + 1, 3):
                        self.assertFalse(
                            weight.bracket(task.field, i, j).is_zero(), (mode, weight)
                        )

    def test_checked_weights_are_reported(self):
        config = get_test_rmatrix_task_config()
        config["test_weights"] = 5
        task = build_task(config)
        LocalRunner().run(task)
        [hecke] = [r for r in task.reports if r.check_id == "hecke_dynamical"]
        self.assertEqual(hecke.status, PASS)
        self.assertGreaterEqual(hecke.params["weights"], 5)
        self.assertEqual(hecke.params["weights"], len(task.test_weights))

    def test_shared_objects(self):
        task = build_task(get_test_task_config())
        self.assertIs(task.rmatrices, task.rmatrices)
        self.assertIs(task.fock.module, task.module)
        self.assertEqual(task.fock.max_word_len, 1)
        self.assertEqual(task.zero_mode_words[0], ())
        self.assertIs(task.frt(1), task.frt(1))
        labels = [label for label, _ in task.monodromy_realizations()]
        self.assertEqual(labels, ["fock", "frt1"])

    def test_frt_failure_is_cached(self):
        task = build_task(get_test_task_config())
        error = NoValidVariant("no FRT construction passes")
        task._frt[3] = error
        with self.assertRaises(NoValidVariant):
            task.frt(3)
        task.set_frt_sites([3])
        labels = [label for label, _ in task.monodromy_realizations()]
        self.assertEqual(labels, ["fock"])

    def test_prepare(self):
        task = build_task(get_test_rmatrix_task_config())
        task.prepare()
        self.assertEqual(task.phases, ["rmatrix"])
        names = [name for name, _ in task.checks["rmatrix"]]
        self.assertEqual(names, ["braid", "hecke"])
        self.assertEqual(task.num_checks, 2)
        self.assertEqual(task.where, 0.0)
        self.assertFalse(task.done())

    def test_run(self):
        task = build_task(get_test_task_config())
        LocalRunner().run(task)
        self.assertTrue(task.done())
        self.assertFalse(task.failed, [r.check_id for r in task.reports if r.failed])
        self.assertEqual(
            {report.suite for report in task.reports}, {"rmatrix", "epsilon"}
        )
        check_ids = [report.check_id for report in task.reports]
        self.assertEqual(len(check_ids), len(set(check_ids)))
        self.assertIn("hecke_constant", check_ids)
        self.assertIn("antisym_eps_factorization", check_ids)

    def test_corrupted_run(self):
        config = get_test_rmatrix_task_config()
        config["corrupt"] = "rhat-prefactor"
        task = build_task(config)
        LocalRunner().run(task)
        self.assertTrue(task.failed)
        [hecke] = [r for r in task.reports if r.check_id == "hecke_constant"]
        self.assertEqual(hecke.status, FAIL)
        self.assertIn("lhs", hecke.witness)
        self.assertIn("index", hecke.witness)

    def test_precomputed(self):
        task = build_task(get_test_rmatrix_task_config())
        reports = task.run_check("braid")
        self.assertEqual([r.check_id for r in reports], ["braid", "braid_far_commute"])
        task.set_precomputed({"braid": reports[:1]})
        LocalRunner().run(task)
        self.assertEqual(
            [r.check_id for r in task.reports],
            ["braid", "hecke_constant", "hecke_dynamical"],
        )
