#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import unittest
from test.generic.utils import generic_field

from qmonodromy.frt import FRT_VARIANTS, build_frt, variant_failures
from qmonodromy.monodromy import A, M, M_MINUS, M_MINUS_INV, M_PLUS, M_PLUS_INV
from qmonodromy.realizations import FrtRealization, build_realization


class TestFrt(unittest.TestCase):
    def setUp(self):
        self.field = generic_field(2)

    def test_variants(self):
        self.assertEqual(len(FRT_VARIANTS), 8)
        self.assertEqual(len({variant.name for variant in FRT_VARIANTS}), 8)

    def test_build(self):
        construction = build_frt(self.field, 1)
        self.assertIn(construction.variant, construction.passing_variants)
        self.assertEqual(construction.variant, construction.passing_variants[0])
        families = construction.families
        self.assertEqual(
            set(families), {M, M_PLUS, M_MINUS, M_PLUS_INV, M_MINUS_INV}
        )
        self.assertEqual(variant_failures(self.field, families, 1), [])
        self.assertTrue(families[M_PLUS][2, 1].is_zero())
        self.assertTrue(families[M_MINUS][1, 2].is_zero())

    def test_coproduct(self):
        construction = build_frt(self.field, 2)
        self.assertEqual(construction.num_sites, 2)
        self.assertEqual(construction.families[M_PLUS][1, 1].num_sites, 2)
        self.assertEqual(variant_failures(self.field, construction.families, 2), [])

    def test_realization(self):
        realization = build_realization({"name": "frt", "num_sites": 1}, self.field)
        self.assertIsInstance(realization, FrtRealization)
        self.assertTrue(realization.supports(M, M_PLUS, M_MINUS_INV))
        self.assertFalse(realization.supports(A))
        self.assertEqual(len(realization.test_states()), 2)
        self.assertEqual(realization.format_key(1), "e2")
        self.assertGreaterEqual(len(realization.variant_names), 1)
