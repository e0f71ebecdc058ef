#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import unittest
from test.generic.utils import assert_operators_equal, cyclotomic_field, generic_field

from qmonodromy.rmatrix import (
    braid_sides,
    build_rhat,
    build_rhat_dyn,
    build_rmatrix_pair,
    far_commutator,
    hecke_residual,
    ice_rule_violations,
    relabel_reversed,
    sign,
    spectrum_multiplicities,
)
from qmonodromy.tensor import SiteOperator
from qmonodromy.weight import Weight


class TestRMatrix(unittest.TestCase):
    def test_sign(self):
        self.assertEqual(sign(1, 2), -1)
        self.assertEqual(sign(2, 1), 1)
        self.assertEqual(sign(3, 3), 0)

    def test_entries(self):
        field = generic_field(2)
        q = field.q(1)
        g = build_rhat(field).scale(field.qpow(-4))
        self.assertEqual(g.entry_at((1, 1), (1, 1)), 1 / q)
        self.assertEqual(g.entry_at((2, 2), (2, 2)), 1 / q)
        self.assertEqual(g.entry_at((1, 2), (2, 1)), 1)
        self.assertEqual(g.entry_at((2, 1), (1, 2)), 1)
        self.assertEqual(g.entry_at((1, 2), (1, 2)), 1 / q - q)
        self.assertEqual(g.entry_at((2, 1), (2, 1)), 0)
        self.assertEqual(g.entry_at((1, 1), (2, 2)), 0)

    def test_hecke_and_braid(self):
        for field in (generic_field(2), generic_field(3), cyclotomic_field(2, 1)):
            rhat = build_rhat(field)
            self.assertTrue(hecke_residual(field, rhat).is_zero())
            lhs, rhs = braid_sides(rhat)
            assert_operators_equal(self, lhs, rhs)
            self.assertEqual(list(ice_rule_violations(rhat)), [])

    def test_far_commutator(self):
        self.assertTrue(far_commutator(build_rhat(generic_field(2))).is_zero())

    def test_pair(self):
        field = generic_field(2)
        pair = build_rmatrix_pair(field)
        perm = SiteOperator.permutation(field, 2)
        identity = SiteOperator.identity(field, 2, 2)
        assert_operators_equal(self, pair.rhat, perm @ pair.r)
        assert_operators_equal(self, pair.rminus, pair.r)
        assert_operators_equal(self, pair.rplus @ perm @ pair.r @ perm, identity)
        assert_operators_equal(
            self, perm @ pair.rhat @ perm, relabel_reversed(pair.rhat)
        )

    def test_spectrum(self):
        field = generic_field(2)
        q = field.q(1)
        trace, m_plus, m_minus = spectrum_multiplicities(field, build_rhat(field))
        self.assertEqual((m_plus, m_minus), (3, 1))
        self.assertEqual(trace, 3 / q - q)

        _, m_plus, m_minus = spectrum_multiplicities(
            generic_field(3), build_rhat(generic_field(3))
        )
        self.assertEqual((m_plus, m_minus), (6, 3))

    def test_dynamical(self):
        field = generic_field(2)
        q = field.q(1)
        g = build_rhat_dyn(field, Weight.vacuum(2)).scale(field.qpow(-4))
        # p_12 = 1
        self.assertEqual(g.entry_at((1, 1), (1, 1)), 1 / q)
        self.assertEqual(g.entry_at((1, 2), (2, 1)), 0)
        self.assertEqual(g.entry_at((1, 2), (1, 2)), 1 / q)
        self.assertEqual(g.entry_at((2, 1), (1, 2)), field.qint(2))
        self.assertEqual(g.entry_at((2, 1), (2, 1)), -q)

        for weight in (Weight.from_shifts([2, -1]), Weight.from_counts((3, 1))):
            rhat = build_rhat_dyn(field, weight)
            self.assertTrue(hecke_residual(field, rhat).is_zero())
            self.assertEqual(list(ice_rule_violations(rhat)), [])

    def test_corruptions(self):
        field = generic_field(2)
        corrupted = build_rhat(field, corrupt="rhat-prefactor")
        self.assertFalse(hecke_residual(field, corrupted).is_zero())

        g = build_rhat(field, corrupt="r-convention").scale(field.qpow(-4))
        self.assertEqual(g.entry_at((1, 2), (1, 2)), 0)
