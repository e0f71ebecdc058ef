#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import unittest
from test.generic.utils import (
    assert_operators_equal,
    cyclotomic_field,
    generic_field,
)

from qmonodromy.epsilon import (
    EpsVariant,
    act_on_lower,
    act_on_upper,
    adjacent_product,
    build_antisym,
    build_eps,
    classical_sign,
    outer_product,
    permutation_length,
)
from qmonodromy.generic.errors import SingularWeight
from qmonodromy.rmatrix import build_rhat
from qmonodromy.tensor import SiteOperator
from qmonodromy.weight import Weight


class TestEpsilon(unittest.TestCase):
    def test_permutation_length(self):
        self.assertEqual(permutation_length((3, 2, 1)), 0)
        self.assertEqual(permutation_length((1, 2, 3)), 3)
        self.assertEqual(permutation_length((2, 3, 1)), 1)
        self.assertEqual(classical_sign((2, 1)), 1)
        self.assertEqual(classical_sign((1, 2)), -1)
        self.assertEqual(classical_sign((1, 3, 2)), 1)

    def test_constant_components(self):
        field = generic_field(2)
        eps = build_eps(field, EpsVariant.CONSTANT_UPPER)
        self.assertEqual(eps.component((2, 1)), field.qpow(-4))
        self.assertEqual(eps.component((1, 2)), -field.qpow(4))
        self.assertEqual(eps.component((1, 1)), 0)
        lower = build_eps(field, EpsVariant.CONSTANT_LOWER)
        self.assertEqual(eps.contract(lower), field.qint(2))

        corrupted = build_eps(
            field, EpsVariant.CONSTANT_UPPER, corrupt="eps-normalization"
        )
        self.assertEqual(corrupted.component((2, 1)), 1)

    def test_dynamical_components(self):
        field = generic_field(2)
        lower = build_eps(field, EpsVariant.DYNAMICAL_LOWER)
        self.assertEqual(lower.component((2, 1)), 1)
        self.assertEqual(lower.component((1, 2)), -1)

        upper = build_eps(field, EpsVariant.DYNAMICAL_UPPER, Weight.vacuum(2))
        self.assertEqual(upper.component((2, 1)), field.qint(2))
        self.assertEqual(upper.component((1, 2)), 0)
        self.assertEqual(upper.contract(lower), field.qfact(2))

        weight = Weight.from_shifts([3, -1])
        upper = build_eps(field, EpsVariant.DYNAMICAL_UPPER, weight)
        self.assertEqual(upper.contract(lower), field.qfact(2))

        with self.assertRaises(AssertionError):
            build_eps(field, EpsVariant.DYNAMICAL_UPPER)
        with self.assertRaises(SingularWeight):
            build_eps(
                cyclotomic_field(2, 1),
                EpsVariant.DYNAMICAL_UPPER,
                Weight.from_counts((2, 0)),
            )

    def test_eigenvector_of_rhat(self):
        field = generic_field(2)
        rhat = build_rhat(field)
        eigenvalue = -field.qpow(12)
        upper = build_eps(field, EpsVariant.CONSTANT_UPPER)
        lower = build_eps(field, EpsVariant.CONSTANT_LOWER)
        self.assertEqual(act_on_upper(rhat, upper), upper.vector.scale(eigenvalue))
        self.assertEqual(act_on_lower(lower, rhat), lower.vector.scale(eigenvalue))

    def test_antisymmetrizer(self):
        field = generic_field(2)
        g = build_rhat(field).scale(field.qpow(-4))
        identity = SiteOperator.identity(field, 2, 2)
        a12 = build_antisym(field, 2).op
        assert_operators_equal(self, a12, identity.scale(field.q(-1)) - g)
        assert_operators_equal(self, a12 @ a12, a12.scale(field.qint(2)))
        self.assertEqual(a12.rank(), 1)
        assert_operators_equal(
            self,
            a12,
            outer_product(
                build_eps(field, EpsVariant.CONSTANT_UPPER),
                build_eps(field, EpsVariant.CONSTANT_LOWER),
            ),
        )
        self.assertTrue(build_antisym(field, 3).op.is_zero())
        assert_operators_equal(
            self, build_antisym(field, 1).op, SiteOperator.identity(field, 2, 1)
        )

    def test_antisymmetrizer_ranks(self):
        field = generic_field(3)
        for k, rank in ((2, 3), (3, 1)):
            a = build_antisym(field, k).op
            self.assertEqual(a.rank(), rank)
            assert_operators_equal(self, a @ a, a.scale(field.qfact(k)))

    def test_adjacent_product(self):
        field = generic_field(2)
        rhat = build_rhat(field)
        assert_operators_equal(self, adjacent_product(rhat, 2), rhat)
        assert_operators_equal(
            self, adjacent_product(rhat, 1), SiteOperator.identity(field, 2, 1)
        )
        assert_operators_equal(
            self,
            adjacent_product(rhat, 3),
            rhat.embed([1, 2], 3) @ rhat.embed([2, 3], 3),
        )
