#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from qmonodromy.field import ExactField, Scalar
from qmonodromy.generic.errors import SingularWeight


@dataclass(frozen=True)
class Weight:
    """Eigenvalues p = (p_1, ..., p_n) of the commuting operators p_j.

    Components are rationals summing to zero; on states generated from the
    vacuum all differences p_ij = p_i - p_j are integers.
    """

    p: Tuple[Fraction, ...]

    def __post_init__(self):
        assert sum(self.p) == 0, f"weight components must sum to zero: {self.p}"

    @property
    def n(self) -> int:
        return len(self.p)

    @classmethod
    def vacuum(cls, n: int) -> "Weight":
        """Barycentric coordinates of the Weyl vector, (n+1)/2 - i."""
        return cls(tuple(Fraction(n + 1, 2) - i for i in range(1, n + 1)))

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> "Weight":
        """Weight of a monomial with counts[i-1] letters in row i."""
        n = len(counts)
        length = sum(counts)
        vacuum = cls.vacuum(n)
        return cls(
            tuple(vacuum.p[i] + counts[i] - Fraction(length, n) for i in range(n))
        )

    @classmethod
    def from_shifts(cls, shifts: Sequence[int]) -> "Weight":
        """Vacuum weight moved by integer shifts, re-centred to sum zero."""
        n = len(shifts)
        vacuum = cls.vacuum(n)
        mean = Fraction(sum(shifts), n)
        return cls(tuple(vacuum.p[i] + shifts[i] - mean for i in range(n)))

    def diff(self, i: int, j: int) -> int:
        """p_ij for 1-based i, j."""
        value = self.p[i - 1] - self.p[j - 1]
        assert value.denominator == 1, f"p_{i}{j} = {value} is not an integer"
        return int(value)

    def shifted(self, row: int) -> "Weight":
        """Weight after applying one zero mode of the given row."""
        return Weight(
            tuple(
                value + (1 if i + 1 == row else 0) - Fraction(1, self.n)
                for i, value in enumerate(self.p)
            )
        )

    def qpow(self, field: ExactField, j: int, sign: int = 1) -> Scalar:
        """Eigenvalue of q^(sign p_j)."""
        return field.qpow_rational(sign * self.p[j - 1])

    def bracket(self, field: ExactField, i: int, j: int, shift: int = 0) -> Scalar:
        return field.qint(self.diff(i, j) + shift)

    def nonzero_bracket(self, field: ExactField, i: int, j: int, shift: int = 0):
        value = self.bracket(field, i, j, shift)
        if value.is_zero():
            raise SingularWeight(
                f"[p_{i}{j}{shift:+d}] vanishes at p = {self} in {field!r}"
            )
        return value

    def dq(self, field: ExactField) -> Scalar:
        """D_q(p) = prod_{i<j} [p_ij]"""
        total = field.one
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                total = total * self.bracket(field, i, j)
        return total

    def dynkin_labels(self) -> Tuple[int, ...]:
        return tuple(self.diff(j, j + 1) - 1 for j in range(1, self.n))

    def is_integrable(self, k: int) -> bool:
        """p_{j j+1} positive integers and p_1n <= h - 1."""
        h = k + self.n
        return all(label >= 0 for label in self.dynkin_labels()) and self.diff(
            1, self.n
        ) <= h - 1

    def __str__(self):
        return "(" + ", ".join(str(value) for value in self.p) + ")"
