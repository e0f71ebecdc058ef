#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import itertools
from typing import Iterator, List, Sequence, Tuple

from qmonodromy.field import ExactField, Scalar
from qmonodromy.generic.errors import NonGenericWeight
from qmonodromy.rmatrix import sign
from qmonodromy.weight import Weight


# (row i, quantum group index alpha) of a zero mode a^i_alpha
Letter = Tuple[int, int]
# letters of a monomial, leftmost first; the empty word is the vacuum
Word = Tuple[Letter, ...]


def is_ordered(left: Letter, right: Letter) -> bool:
    """Canonical order: rows nonincreasing, alpha nondecreasing within a row."""
    if left[0] != right[0]:
        return left[0] > right[0]
    return left[1] <= right[1]


def is_canonical(word: Word) -> bool:
    return all(is_ordered(word[t], word[t + 1]) for t in range(len(word) - 1))


def word_counts(word: Sequence[Letter], n: int) -> Tuple[int, ...]:
    counts = [0] * n
    for row, _ in word:
        counts[row - 1] += 1
    return tuple(counts)


def word_weight(word: Sequence[Letter], n: int) -> Weight:
    return Weight.from_counts(word_counts(word, n))


def canonical_words(counts: Sequence[int]) -> Iterator[Word]:
    """All canonical words with counts[i-1] letters in row i."""
    n = len(counts)
    per_row = [
        list(itertools.combinations_with_replacement(range(1, n + 1), counts[row - 1]))
        for row in range(n, 0, -1)
    ]
    for choice in itertools.product(*per_row):
        word: List[Letter] = []
        for row, alphas in zip(range(n, 0, -1), choice):
            word.extend((row, alpha) for alpha in alphas)
        yield tuple(word)


def format_word(word: Word) -> str:
    if not word:
        return "|0>"
    return "".join(f"a{row}_{alpha} " for row, alpha in word) + "|0>"


class ExchangeRules:
    """Rewrites an out-of-order adjacent pair of zero modes.

    With the pair written as a^j_alpha a^i_beta (left, right) and p the weight
    of the state to their right:

    * equal rows, alpha > beta: a^i_alpha a^i_beta = q a^i_beta a^i_alpha
    * j < i, alpha == beta: the two letters commute
    * j < i, alpha != beta:
      a^j_alpha a^i_beta = ([p_ij] a^i_beta a^j_alpha
      - q^(eps_{beta alpha} p_ij) a^i_alpha a^j_beta) / [p_ij - 1]
    """

    def __init__(self, field: ExactField) -> None:
        self.field = field
        self.n = field.n

    def suffix_diff(self, suffix_counts: Sequence[int], i: int, j: int) -> int:
        """p_ij of a state with the given letter counts."""
        return (j - i) + suffix_counts[i - 1] - suffix_counts[j - 1]

    def rewrite(
        self, left: Letter, right: Letter, suffix_counts: Sequence[int]
    ) -> List[Tuple[Scalar, Letter, Letter]]:
        assert not is_ordered(left, right), "pair is already in canonical order"
        field = self.field
        j, alpha = left
        i, beta = right
        if i == j:
            return [(field.q(1), right, left)]
        if alpha == beta:
            return [(field.one, right, left)]
        p_ij = self.suffix_diff(suffix_counts, i, j)
        divisor = field.qint(p_ij - 1)
        if divisor.is_zero():
            raise NonGenericWeight(
                f"[p_{i}{j} - 1] vanishes for p_{i}{j} = {p_ij} in {field!r}"
            )
        return [
            (field.qint(p_ij) / divisor, (i, beta), (j, alpha)),
            (-field.q(sign(beta, alpha) * p_ij) / divisor, (i, alpha), (j, beta)),
        ]
