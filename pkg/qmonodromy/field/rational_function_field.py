#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from fractions import Fraction
from typing import Any, Dict, List, Tuple

from qmonodromy.field import register_field
from qmonodromy.field.exact_field import ExactField, Number, Scalar
from sympy import QQ
from sympy.polys.fields import field


def _dense_coefficients(poly) -> List[Fraction]:
    terms = poly.terms()
    if not terms:
        return [Fraction(0)]
    degree = max(monom[0] for monom, _ in terms)
    coeffs = [Fraction(0)] * (degree + 1)
    for (exponent,), coeff in terms:
        coeffs[exponent] = Fraction(int(coeff.numerator), int(coeff.denominator))
    return coeffs


@register_field("generic")
class RationalFunctionField(ExactField):
    """Q(xi) with q = xi^(4n) a formal indeterminate."""

    def __init__(self, n: int) -> None:
        self.fraction_field, self.xi = field("xi", QQ)
        super().__init__(n)

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "RationalFunctionField":
        return cls(n=config["n"])

    @property
    def key(self) -> Tuple:
        return ("generic", self.n)

    def convert(self, number: Number):
        number = Fraction(number)
        return self.fraction_field(number.numerator) / self.fraction_field(
            number.denominator
        )

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inverse(self, a):
        if self.is_zero_value(a):
            raise ZeroDivisionError("division by zero in rational function field")
        return self.fraction_field.one / a

    def is_zero_value(self, a) -> bool:
        return not a.numer

    def root_power(self, num: int):
        return self.xi ** num

    def serialize(self, a) -> Dict[str, Any]:
        numerator = _dense_coefficients(a.numer)
        denominator = _dense_coefficients(a.denom)
        # monic denominator makes the pair canonical
        lead = denominator[-1]
        return {
            "mode": "generic",
            "numerator": [str(c / lead) for c in numerator],
            "denominator": [str(c / lead) for c in denominator],
        }

    def deserialize(self, data: Dict[str, Any]) -> Scalar:
        assert data["mode"] == "generic"

        def build(coeffs):
            total = self.fraction_field.zero
            for exponent, coeff in enumerate(coeffs):
                total = total + self.convert(Fraction(coeff)) * self.xi ** exponent
            return total

        return Scalar(self, build(data["numerator"]) / build(data["denominator"]))

    def format(self, a) -> str:
        return str(a)
