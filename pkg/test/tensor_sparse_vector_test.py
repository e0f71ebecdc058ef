#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import unittest
from test.generic.utils import generic_field

from qmonodromy.tensor import SparseVector


class TestSparseVector(unittest.TestCase):
    def setUp(self):
        self.field = generic_field(2)

    def test_from_terms(self):
        q = self.field.q(1)
        vector = SparseVector.from_terms(
            self.field, [("a", q), ("b", self.field.one), ("a", -q)]
        )
        self.assertEqual(list(vector.keys()), ["b"])
        self.assertEqual(vector.coefficient("a"), 0)
        self.assertEqual(len(vector), 1)

    def test_arithmetic(self):
        q = self.field.q(1)
        x = SparseVector(self.field, {"a": q, "b": self.field.one})
        y = SparseVector.basis(self.field, "b")
        self.assertEqual(x - y, SparseVector(self.field, {"a": q}))
        self.assertTrue((x - x).is_zero())
        self.assertEqual(x.scale(2), x + x)
        self.assertEqual(2 * x, x + x)
        self.assertIs(x.scale(1), x)
        self.assertTrue(SparseVector.zero(self.field).is_zero())

    def test_first_difference(self):
        q = self.field.q(1)
        x = SparseVector(self.field, {(1,): q, (2,): self.field.one})
        y = SparseVector(self.field, {(1,): q, (2,): q})
        self.assertIsNone(x.first_difference(x))
        key, lhs, rhs = x.first_difference(y)
        self.assertEqual(key, (2,))
        self.assertEqual(lhs, 1)
        self.assertEqual(rhs, q)
