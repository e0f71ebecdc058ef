#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import unittest
from test.generic.utils import generic_field

from qmonodromy.checks import (
    FAIL,
    PASS,
    SKIPPED,
    Outcome,
    VerificationCheck,
    build_check,
    checks_for_suite,
    register_check,
)
from qmonodromy.checks.rmatrix_checks import HeckeCheck
from qmonodromy.checks.verification_check import first_failure, over_states
from qmonodromy.generic.errors import SingularWeight
from qmonodromy.tasks import VerificationTask


class TestVerificationCheck(unittest.TestCase):
    def test_registry(self):
        self.assertIsInstance(build_check({"name": "hecke"}), HeckeCheck)
        self.assertEqual(
            checks_for_suite("rmatrix"),
            ["braid", "hecke", "ice_rule", "rmatrix_conventions", "spectrum"],
        )
        self.assertEqual(
            checks_for_suite("frt"), ["frt_variants", "frt_defining_relations"]
        )
        for suite in ("epsilon", "zeromodes", "monodromy"):
            self.assertGreater(len(checks_for_suite(suite)), 0)
        with self.assertRaises(AssertionError):
            build_check({"name": "nonexistent"})

    def test_register_invalid(self):
        with self.assertRaises(ValueError):

            @register_check("hecke")
            class AnotherHeckeCheck(VerificationCheck):
                suite = "rmatrix"

        with self.assertRaises(ValueError):

            @register_check("unknown_suite_check")
            class UnknownSuiteCheck(VerificationCheck):
                suite = "optics"

    def test_over_states(self):
        def compare(state):
            if state < 0:
                raise SingularWeight("vanishing bracket")
            return None if state < 10 else {"index": str(state)}

        outcome = over_states([-1, 1, 2], compare)
        self.assertIsNone(outcome.witness)
        self.assertEqual(outcome.checked, 2)

        outcome = over_states([1, 11, 12], compare)
        self.assertEqual(outcome.witness, {"index": "11"})

        outcome = over_states([-1, -2], compare)
        self.assertEqual(outcome.checked, 0)
        self.assertIn("SingularWeight", outcome.skip_reason)

    def test_first_failure(self):
        outcome = first_failure([Outcome(), Outcome(checked=2)])
        self.assertIsNone(outcome.witness)
        self.assertEqual(outcome.checked, 3)

        failing = Outcome(witness={"index": "x"})
        self.assertIs(first_failure(iter([Outcome(), failing, Outcome()])), failing)
        self.assertEqual(first_failure([]).checked, 0)

    def test_verify(self):
        task = VerificationTask().set_field(generic_field(2))
        check = build_check({"name": "hecke"})

        report = check.verify(task, "passing", lambda: Outcome(), params={"extra": 1})
        self.assertEqual(report.status, PASS)
        self.assertEqual(report.params, {"n": 2, "mode": "generic", "extra": 1})
        self.assertEqual(report.suite, "rmatrix")

        report = check.verify(
            task,
            "failing",
            lambda: Outcome(witness={"index": "(1, 1)", "lhs": "1", "rhs": "0"}),
        )
        self.assertEqual(report.status, FAIL)

        report = check.verify(
            task, "skipped", lambda: Outcome(checked=0, skip_reason="no states")
        )
        self.assertEqual(report.status, SKIPPED)
        self.assertEqual(report.reason, "no states")

        report = check.verify(
            task, "valued", lambda: Outcome(value=generic_field(2).qint(2))
        )
        self.assertEqual(report.value["mode"], "generic")

        selection = {"selected": "a", "passing": ["a", "b"], "unique": False}
        report = check.verify(task, "record", lambda: Outcome(value=selection))
        self.assertEqual(report.value, selection)

    def test_verify_counts_checked_instances(self):
        task = VerificationTask().set_field(generic_field(2))
        check = build_check({"name": "hecke"})

        def compare(state):
            if state == 0:
                raise SingularWeight("vanishing bracket")
            return None

        report = check.verify(
            task,
            "counted",
            lambda: over_states([0, 1, 2, 3], compare),
            count_as="weights",
        )
        self.assertEqual(report.status, PASS)
        self.assertEqual(report.params["weights"], 3)
