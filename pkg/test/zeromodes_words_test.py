#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import unittest
from test.generic.utils import cyclotomic_field, generic_field

from qmonodromy.generic.errors import NonGenericWeight
from qmonodromy.zeromodes import (
    ExchangeRules,
    canonical_words,
    format_word,
    is_canonical,
    is_ordered,
    weight_spectrum,
    word_counts,
    word_weight,
)


class TestWords(unittest.TestCase):
    def test_order(self):
        self.assertTrue(is_ordered((2, 1), (1, 2)))
        self.assertFalse(is_ordered((1, 1), (2, 1)))
        self.assertTrue(is_ordered((1, 1), (1, 2)))
        self.assertTrue(is_ordered((1, 2), (1, 2)))
        self.assertFalse(is_ordered((1, 2), (1, 1)))
        self.assertTrue(is_canonical(((2, 2), (1, 1), (1, 2))))
        self.assertFalse(is_canonical(((1, 1), (2, 2))))
        self.assertTrue(is_canonical(()))

    def test_counts_and_weight(self):
        word = ((2, 1), (1, 1), (1, 2))
        self.assertEqual(word_counts(word, 2), (2, 1))
        self.assertEqual(word_weight(word, 2).diff(1, 2), 2)
        self.assertEqual(format_word(()), "|0>")
        self.assertEqual(format_word(((1, 2),)), "a1_2 |0>")

    def test_canonical_words(self):
        words = list(canonical_words((2, 0)))
        self.assertEqual(words, [((1, 1), (1, 1)), ((1, 1), (1, 2)), ((1, 2), (1, 2))])
        words = list(canonical_words((1, 1)))
        self.assertEqual(len(words), 4)
        self.assertTrue(all(is_canonical(word) for word in words))
        self.assertEqual(list(canonical_words((0, 0))), [()])

    def test_rewrite(self):
        field = generic_field(2)
        q = field.q(1)
        rules = ExchangeRules(field)

        # equal rows
        [(coefficient, left, right)] = rules.rewrite((1, 2), (1, 1), (0, 0))
        self.assertEqual(coefficient, q)
        self.assertEqual((left, right), ((1, 1), (1, 2)))

        # equal alpha
        [(coefficient, left, right)] = rules.rewrite((1, 1), (2, 1), (0, 0))
        self.assertEqual(coefficient, 1)
        self.assertEqual((left, right), ((2, 1), (1, 1)))

        # p_21 = -1 on the vacuum
        self.assertEqual(rules.suffix_diff((0, 0), 2, 1), -1)
        first, second = rules.rewrite((1, 1), (2, 2), (0, 0))
        self.assertEqual(first[0], 1 / field.qint(2))
        self.assertEqual(first[1:], ((2, 2), (1, 1)))
        self.assertEqual(second[0], 1 / (q * field.qint(2)))
        self.assertEqual(second[1:], ((2, 1), (1, 2)))

        with self.assertRaises(AssertionError):
            rules.rewrite((2, 1), (1, 1), (0, 0))

    def test_non_generic(self):
        # [p_21 - 1] = [-3] vanishes for h = 3
        rules = ExchangeRules(cyclotomic_field(2, 1))
        with self.assertRaises(NonGenericWeight):
            rules.rewrite((1, 1), (2, 2), (1, 0))

    def test_weight_spectrum(self):
        spectrum = weight_spectrum(((1, 1),), 2, 1)
        self.assertEqual(spectrum.dynkin_labels, (1,))
        self.assertTrue(spectrum.integrable)
        spectrum = weight_spectrum(((1, 1), (1, 2)), 2, 1)
        self.assertEqual(spectrum.dynkin_labels, (2,))
        self.assertFalse(spectrum.integrable)
        self.assertTrue(weight_spectrum(((1, 1), (1, 2)), 2, 2).integrable)
