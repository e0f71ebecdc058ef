#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Dict, Tuple, Union


Number = Union[int, Fraction]


class Scalar:
    """An immutable element of an :class:`ExactField`.

    Supports the usual arithmetic operators, also against python ``int`` and
    ``Fraction`` operands. Equality is exact: ``a == b`` holds iff ``a - b``
    is the zero element of the field.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: "ExactField", value: Any) -> None:
        self.field = field
        self.value = value

    def _coerce(self, other) -> Any:
        if isinstance(other, Scalar):
            assert (
                other.field.key == self.field.key
            ), f"Cannot mix scalars of {self.field.key} and {other.field.key}"
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.convert(other)
        return NotImplemented

    def _wrap(self, value) -> "Scalar":
        return Scalar(self.field, value)

    def __add__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.add(self.value, value))

    __radd__ = __add__

    def __sub__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.add(self.value, self.field.neg(value)))

    def __rsub__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.add(value, self.field.neg(self.value)))

    def __mul__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(self.value, value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(self.value, self.field.inverse(value)))

    def __rtruediv__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(value, self.field.inverse(self.value)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, exponent: int):
        assert isinstance(exponent, int), "only integer powers are supported"
        if exponent < 0:
            return (1 / self) ** (-exponent)
        result = self.field.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_zero(self) -> bool:
        return self.field.is_zero_value(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return (self - other).is_zero()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def to_dict(self) -> Dict[str, Any]:
        return self.field.serialize(self.value)

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self})"


class ExactField(ABC):
    """Base class for exact coefficient fields containing q^(1/4n).

    Derived classes provide the raw arithmetic on their own value type and the
    representation of the basic root. Everything else (quantum integers,
    factorials, rational powers of q) is implemented here on top of
    :func:`qpow`.
    """

    def __init__(self, n: int) -> None:
        assert isinstance(n, int) and n >= 1, "n must be a positive integer"
        self.n = n
        self._qpow_cache: Dict[int, Scalar] = {}
        self._qint_cache: Dict[int, Scalar] = {}
        self.zero = self.scalar(0)
        self.one = self.scalar(1)

    @classmethod
    @abstractmethod
    def from_config(cls, config: Dict[str, Any]) -> "ExactField":
        pass

    @property
    @abstractmethod
    def key(self) -> Tuple:
        """Hashable identity of the field, equal across processes."""
        pass

    @abstractmethod
    def convert(self, number: Number) -> Any:
        pass

    @abstractmethod
    def add(self, a: Any, b: Any) -> Any:
        pass

    @abstractmethod
    def neg(self, a: Any) -> Any:
        pass

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any:
        pass

    @abstractmethod
    def inverse(self, a: Any) -> Any:
        pass

    @abstractmethod
    def is_zero_value(self, a: Any) -> bool:
        pass

    @abstractmethod
    def root_power(self, num: int) -> Any:
        """Raw value of q^(num / 4n)."""
        pass

    @abstractmethod
    def serialize(self, a: Any) -> Dict[str, Any]:
        pass

    @abstractmethod
    def deserialize(self, data: Dict[str, Any]) -> Scalar:
        pass

    @abstractmethod
    def format(self, a: Any) -> str:
        pass

    def scalar(self, number: Number) -> Scalar:
        return Scalar(self, self.convert(number))

    def is_zero(self, x: Scalar) -> bool:
        return x.is_zero()

    def qpow(self, num: int) -> Scalar:
        """Returns q^(num / 4n)."""
        if num not in self._qpow_cache:
            self._qpow_cache[num] = Scalar(self, self.root_power(num))
        return self._qpow_cache[num]

    def qpow_rational(self, exponent: Number) -> Scalar:
        """Returns q^exponent for a rational exponent with denominator dividing 4n."""
        num = Fraction(exponent) * 4 * self.n
        assert num.denominator == 1, f"q^{exponent} is not representable for n={self.n}"
        return self.qpow(int(num))

    def q(self, power: int = 1) -> Scalar:
        return self.qpow(4 * self.n * power)

    def qint(self, m: int) -> Scalar:
        """The quantum bracket [m] = (q^m - q^-m) / (q - q^-1)."""
        if m not in self._qint_cache:
            size = abs(m)
            total = self.zero
            for j in range(size):
                total = total + self.q(size - 1 - 2 * j)
            self._qint_cache[m] = total if m >= 0 else -total
        return self._qint_cache[m]

    def qfact(self, m: int) -> Scalar:
        """[m]! = [m][m-1]...[1]"""
        assert m >= 0
        total = self.one
        for j in range(1, m + 1):
            total = total * self.qint(j)
        return total

    def __repr__(self):
        return f"{type(self).__name__}{self.key[1:]}"
