#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Any, Dict, Hashable, Iterable, Iterator, Optional, Tuple

from qmonodromy.field import ExactField, Scalar


class SparseVector:
    """Finite linear combination of hashable basis keys with Scalar coefficients.

    Used both for Fock states (keys are zero-mode words) and for vectors of
    an auxiliary tensor space (keys are composite indices). Zero coefficients
    are never stored.
    """

    __slots__ = ("field", "terms")

    def __init__(
        self, field: ExactField, terms: Optional[Dict[Hashable, Scalar]] = None
    ) -> None:
        self.field = field
        self.terms: Dict[Hashable, Scalar] = {
            key: value for key, value in (terms or {}).items() if not value.is_zero()
        }

    @classmethod
    def from_terms(
        cls, field: ExactField, terms: Iterable[Tuple[Hashable, Scalar]]
    ) -> "SparseVector":
        """Sums coefficients of repeated keys."""
        accumulated: Dict[Hashable, Scalar] = {}
        for key, value in terms:
            if key in accumulated:
                accumulated[key] = accumulated[key] + value
            else:
                accumulated[key] = value
        return cls(field, accumulated)

    @classmethod
    def basis(cls, field: ExactField, key: Hashable) -> "SparseVector":
        return cls(field, {key: field.one})

    @classmethod
    def zero(cls, field: ExactField) -> "SparseVector":
        return cls(field)

    def _new(self, terms: Dict[Hashable, Scalar]) -> "SparseVector":
        return type(self)(self.field, terms)

    def __add__(self, other: "SparseVector") -> "SparseVector":
        terms = dict(self.terms)
        for key, value in other.terms.items():
            terms[key] = terms[key] + value if key in terms else value
        return self._new(terms)

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        return self + (-other)

    def __neg__(self) -> "SparseVector":
        return self._new({key: -value for key, value in self.terms.items()})

    def scale(self, factor) -> "SparseVector":
        if isinstance(factor, int) and factor == 1:
            return self
        return self._new({key: value * factor for key, value in self.terms.items()})

    def __rmul__(self, factor) -> "SparseVector":
        return self.scale(factor)

    def coefficient(self, key: Hashable) -> Scalar:
        return self.terms.get(key, self.field.zero)

    def items(self) -> Iterator[Tuple[Hashable, Scalar]]:
        return iter(self.terms.items())

    def keys(self):
        return self.terms.keys()

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def first_difference(
        self, other: "SparseVector"
    ) -> Optional[Tuple[Hashable, Scalar, Scalar]]:
        """Returns (key, self coefficient, other coefficient) of the first
        mismatch in sorted key order, or None if the vectors are equal."""
        for key in sorted(set(self.terms) | set(other.terms)):
            lhs = self.coefficient(key)
            rhs = other.coefficient(key)
            if lhs != rhs:
                return key, lhs, rhs
        return None

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({value})*{key}" for key, value in sorted(self.terms.items())
        )

    def __repr__(self):
        return f"{type(self).__name__}({self})"
