#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import unittest

from qmonodromy.checks import SUITES
from qmonodromy.generic.opts import config_from_args, parse_verify_arguments


class TestOpts(unittest.TestCase):
    def test_defaults(self):
        args = parse_verify_arguments(argv=[])
        config = config_from_args(args)
        self.assertEqual(config["field"], {"n": 2, "k": 2, "name": "generic"})
        self.assertNotIn("suites", config)
        self.assertNotIn("corrupt", config)
        self.assertEqual(args.jobs, 1)

    def test_flags(self):
        args = parse_verify_arguments(
            argv=[
                "--n",
                "3",
                "--mode",
                "cyclotomic",
                "--level",
                "1",
                "--suite",
                "monodromy",
                "--suite",
                "rmatrix",
                "--max-word-len",
                "2",
                "--corrupt",
                "eps-normalization",
            ]
        )
        config = config_from_args(args)
        self.assertEqual(config["field"], {"n": 3, "k": 1, "name": "cyclotomic"})
        # suites run in their fixed order
        self.assertEqual(config["suites"], ["rmatrix", "monodromy"])
        self.assertEqual(config["max_word_len"], 2)
        self.assertEqual(config["corrupt"], "eps-normalization")

        args = parse_verify_arguments(argv=["--suite", "all"])
        self.assertEqual(config_from_args(args)["suites"], list(SUITES))

    def test_flags_override_config(self):
        base = {"name": "verification", "field": {"name": "generic", "n": 3, "k": 4}}
        args = parse_verify_arguments(argv=["--n", "2"])
        config = config_from_args(args, base)
        self.assertEqual(config["field"], {"name": "generic", "n": 2, "k": 4})
        # the input config is left alone
        self.assertEqual(base["field"]["n"], 3)

    def test_invalid_n(self):
        with self.assertRaises(AssertionError):
            parse_verify_arguments(argv=["--n", "5"])
        with self.assertRaises(AssertionError):
            parse_verify_arguments(argv=["--n", "1"])
        with self.assertRaises(AssertionError):
            parse_verify_arguments(argv=["--n", "4"])
        args = parse_verify_arguments(argv=["--n", "4", "--allow-large-n"])
        self.assertEqual(config_from_args(args)["field"]["n"], 4)

        # n = 4 coming from a config file needs the flag too
        args = parse_verify_arguments(argv=[])
        with self.assertRaises(AssertionError):
            config_from_args(args, {"field": {"name": "generic", "n": 4}})

    def test_invalid_values(self):
        with self.assertRaises(AssertionError):
            parse_verify_arguments(argv=["--jobs", "0"])
        with self.assertRaises(AssertionError):
            parse_verify_arguments(argv=["--level", "0"])
        with self.assertRaises(SystemExit):
            parse_verify_arguments(argv=["--corrupt", "nothing"])
