#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Any, Dict, Tuple

from qmonodromy.field import register_field
from qmonodromy.field.exact_field import ExactField, Number, Scalar
from sympy import Poly, QQ, Rational, Symbol, cyclotomic_poly


@register_field("cyclotomic")
class CyclotomicField(ExactField):
    """Q(zeta) with zeta a primitive root of unity of order 8nh, h = k + n.

    q = zeta^(4n) = exp(-i pi / h). Elements are polynomials in zeta reduced
    modulo the 8nh-th cyclotomic polynomial, which makes the representation
    canonical.
    """

    def __init__(self, n: int, k: int) -> None:
        assert isinstance(k, int) and k >= 1, "level k must be a positive integer"
        self.k = k
        self.h = k + n
        self.order = 8 * n * self.h
        self.symbol = Symbol("zeta")
        self.modulus = Poly(
            cyclotomic_poly(self.order, self.symbol), self.symbol, domain=QQ
        )
        super().__init__(n)

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "CyclotomicField":
        return cls(n=config["n"], k=config["k"])

    @property
    def key(self) -> Tuple:
        return ("cyclotomic", self.n, self.k)

    def _poly(self, coeffs) -> Poly:
        return Poly(coeffs, self.symbol, domain=QQ)

    def convert(self, number: Number) -> Poly:
        return self._poly(Rational(number.numerator, number.denominator))

    def add(self, a: Poly, b: Poly) -> Poly:
        return a + b

    def neg(self, a: Poly) -> Poly:
        return -a

    def mul(self, a: Poly, b: Poly) -> Poly:
        return (a * b).rem(self.modulus)

    def inverse(self, a: Poly) -> Poly:
        if a.is_zero:
            raise ZeroDivisionError("division by zero in cyclotomic field")
        return a.invert(self.modulus)

    def is_zero_value(self, a: Poly) -> bool:
        return a.is_zero

    def root_power(self, num: int) -> Poly:
        return self._poly(self.symbol ** (num % self.order)).rem(self.modulus)

    def serialize(self, a: Poly) -> Dict[str, Any]:
        return {
            "mode": "cyclotomic",
            "order": self.order,
            "coefficients": [str(c) for c in reversed(a.all_coeffs())],
        }

    def deserialize(self, data: Dict[str, Any]) -> Scalar:
        assert data["mode"] == "cyclotomic" and data["order"] == self.order
        coeffs = [Rational(c) for c in reversed(data["coefficients"])]
        return Scalar(self, Poly.from_list(coeffs, self.symbol, domain=QQ))

    def format(self, a: Poly) -> str:
        return str(a.as_expr())
