#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import unittest
from test.generic.utils import assert_states_equal, generic_field

from qmonodromy.epsilon import adjacent_product
from qmonodromy.monodromy import (
    M,
    M_PLUS,
    Chain,
    OperatorMatrixRealization,
    column_difference,
    compare_on_columns,
    exchange_relations,
    family_product,
    initial_column,
    lower_contracted,
    reflection_relation,
    rhat_product,
    upper_contracted,
)
from qmonodromy.rmatrix import build_rhat
from qmonodromy.tensor import SiteOperator, SparseVector


def matrix_units(field):
    """M^a_b = E_ab acting on a single auxiliary site."""
    return {
        (a, b): SiteOperator.from_index_function(
            field,
            2,
            1,
            lambda upper, lower, a=a, b=b: 1 if (upper[0], lower[0]) == (a, b) else 0,
        )
        for a in (1, 2)
        for b in (1, 2)
    }


class TestChain(unittest.TestCase):
    def setUp(self):
        self.field = generic_field(2)
        self.realization = OperatorMatrixRealization(
            self.field, 1, {M: matrix_units(self.field)}
        )
        self.state = SparseVector.basis(self.field, 0)

    def test_numeric_factors(self):
        x = SiteOperator.random(self.field, 2, 2, seed=0)
        y = SiteOperator.random(self.field, 2, 2, seed=1)
        column = Chain.numeric(2, x, [1, 2]).evaluate(
            self.realization, initial_column(1, self.state)
        )
        for target in range(4):
            assert_states_equal(
                self,
                column.get(target, SparseVector.zero(self.field)),
                self.state.scale(x.entry(target, 1)),
            )

        # the rightmost factor acts first
        lhs = Chain.numeric(2, x, [1, 2]) @ Chain.numeric(2, y, [1, 2])
        rhs = Chain.numeric(2, x @ y, [1, 2])
        self.assertIsNone(compare_on_columns(self.realization, lhs, rhs, self.state))
        reversed_order = Chain.numeric(2, y @ x, [1, 2])
        witness = compare_on_columns(self.realization, lhs, reversed_order, self.state)
        self.assertIsNotNone(witness)
        self.assertIn("column", witness)

    def test_scalar_and_power(self):
        two = Chain.scalar(2, self.field.scalar(2))
        four = Chain.scalar(2, self.field.scalar(4))
        self.assertIsNone(
            compare_on_columns(self.realization, two ** 2, four, self.state)
        )
        self.assertIsNone(
            compare_on_columns(
                self.realization, two ** 0, Chain.identity(2), self.state
            )
        )

    def test_family_factor(self):
        chain = Chain.family(1, M, 1)
        self.assertEqual(chain.families(), (M,))
        column = chain.evaluate(self.realization, initial_column(0, self.state))
        # E_a1 e_1 = e_a
        self.assertEqual(sorted(column), [0, 1])
        assert_states_equal(self, column[1], SparseVector.basis(self.field, 1))
        self.assertEqual(
            chain.evaluate(self.realization, initial_column(1, self.state)), {}
        )

    def test_contractions(self):
        tensor = SparseVector(
            self.field, {0: self.field.one, 3: self.field.scalar(2)}
        )
        column = upper_contracted(tensor, self.state)
        assert_states_equal(self, column[3], self.state.scale(2))
        assert_states_equal(
            self,
            lower_contracted(self.realization, tensor, column),
            self.state.scale(5),
        )

    def test_column_difference(self):
        lhs = {0: self.state}
        rhs = {0: self.state.scale(2)}
        self.assertIsNone(column_difference(self.realization, 1, lhs, lhs))
        witness = column_difference(self.realization, 1, lhs, rhs)
        self.assertEqual(witness["index"], "(1,)")
        self.assertEqual(witness["state"], "e1")

    def test_frequent_chains(self):
        field = self.field
        rhat = build_rhat(field)
        lhs = rhat_product(3, rhat, 1, 2)
        rhs = Chain.numeric(3, adjacent_product(rhat, 3), [1, 2, 3])
        realization = OperatorMatrixRealization(field, 1, {})
        self.assertIsNone(compare_on_columns(realization, lhs, rhs, self.state))
        self.assertEqual(len(rhat_product(3, rhat, 2, 1).factors), 0)

        chain = family_product(3, M_PLUS, (1, 2, 3))
        self.assertEqual(len(chain.factors), 3)
        self.assertEqual(chain.families(), (M_PLUS,))

        names = [name for name, _, _ in exchange_relations(rhat)]
        self.assertEqual(names, ["exchange_plus", "exchange_minus", "exchange_mixed"])
        lhs, rhs = reflection_relation(rhat)
        self.assertEqual(lhs.families(), (M,))
        self.assertEqual(len(lhs.factors), len(rhs.factors))
