#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Any, Dict, List, Optional, Tuple

from qmonodromy.field import ExactField
from qmonodromy.monodromy import (
    A,
    M,
    M_MINUS,
    M_MINUS_INV,
    M_P,
    M_PLUS,
    M_PLUS_INV,
    MonodromyRealization,
)
from qmonodromy.rmatrix import RMatrixPair, build_rmatrix_pair
from qmonodromy.tensor import SiteOperator, SparseVector
from qmonodromy.zeromodes import FockModule, Word, format_word

from . import register_realization


@register_realization("fock")
class FockRealization(MonodromyRealization):
    """Monodromy matrices acting on the zero-mode module.

    M+- are pushed through the zero modes with M+-_2 a_1 = a_1 R^-+_12 M+-_2
    and act on the vacuum by the counit, (M+-)^a_b |0> = d^a_b |0>; the
    inverses follow M^-1_2 a_1 = a_1 M^-1_2 (R^-+_12)^-1. M is the
    renormalized product q^(1/n - n) M+ M-^-1 and M_p is diagonal with
    entries q^(-2 p_i + 1 - 1/n).
    """

    families = (A, M, M_PLUS, M_MINUS, M_PLUS_INV, M_MINUS_INV, M_P)

    def __init__(
        self,
        field: ExactField,
        max_word_len: int,
        rmatrices: Optional[RMatrixPair] = None,
        corrupt: Optional[str] = None,
        module: Optional[FockModule] = None,
    ) -> None:
        super().__init__(field)
        self.max_word_len = max_word_len
        self.corrupt = corrupt
        self.module = module if module is not None else FockModule(field)
        self.rmatrices = (
            rmatrices if rmatrices is not None else build_rmatrix_pair(field, corrupt)
        )
        perm = SiteOperator.permutation(field, self.n)
        r = self.rmatrices.r
        self._exchange: Dict[str, SiteOperator] = {
            M_PLUS: self.rmatrices.rminus,
            M_MINUS: self.rmatrices.rplus,
            M_PLUS_INV: r.inverse(),
            M_MINUS_INV: perm @ r @ perm,
        }
        self._m_prefactor = (
            field.one
            if corrupt == "m-prefactor"
            else field.qpow(4 - 4 * self.n * self.n)
        )
        self._mp_prefactor = (
            field.one
            if corrupt == "mp-prefactor"
            else field.qpow(4 * self.n - 4)
        )
        self._push_cache: Dict[Tuple[str, int, int, Word], SparseVector] = {}
        self._states: Optional[List[SparseVector]] = None

    @classmethod
    def from_config(
        cls, config: Dict[str, Any], field: ExactField
    ) -> "FockRealization":
        return cls(
            field,
            max_word_len=config.get("max_word_len", field.n),
            corrupt=config.get("corrupt"),
        )

    def apply(self, family, upper, lower, state):
        if family == A:
            return self.module.apply_a(upper, lower, state)
        if family == M_P:
            return self._apply_mp(upper, lower, state)
        if family == M:
            total = self.zero()
            for middle in range(1, self.n + 1):
                inner = self.apply(M_MINUS_INV, middle, lower, state)
                if inner.is_zero():
                    continue
                total = total + self.apply(M_PLUS, upper, middle, inner)
            return total.scale(self._m_prefactor)
        assert family in self._exchange, f"unknown family {family}"
        result = self.zero()
        for word, value in state.items():
            result = result + self._push(family, upper, lower, word).scale(value)
        return result

    def _apply_mp(self, upper: int, lower: int, state: SparseVector) -> SparseVector:
        if upper != lower:
            return self.zero()
        return SparseVector(
            self.field,
            {
                word: value
                * self.weight_of(word).qpow(self.field, upper, -2)
                * self._mp_prefactor
                for word, value in state.items()
            },
        )

    def _push(self, family: str, upper: int, lower: int, word: Word) -> SparseVector:
        key = (family, upper, lower, word)
        cached = self._push_cache.get(key)
        if cached is not None:
            return cached
        if not word:
            result = self.module.vacuum() if upper == lower else self.zero()
        else:
            (row, alpha), rest = word[0], word[1:]
            module = self.module
            rest_state = module.normalize(module.project(module.basis(rest)))
            exchange = self._exchange[family]
            result = self.zero()
            for alpha_p in range(1, self.n + 1):
                for index in range(1, self.n + 1):
                    if family in (M_PLUS, M_MINUS):
                        # Y^b_c a^i_a = a^i_a' S^{a'b}_{ab'} Y^b'_c
                        value = exchange.entry_at((alpha_p, upper), (alpha, index))
                        inner_upper, inner_lower = index, lower
                    else:
                        # Y^b_c a^i_a = a^i_a' Y^b_c' S^{a'c'}_{ac}
                        value = exchange.entry_at((alpha_p, index), (alpha, lower))
                        inner_upper, inner_lower = upper, index
                    if value.is_zero():
                        continue
                    inner = self.apply(family, inner_upper, inner_lower, rest_state)
                    if inner.is_zero():
                        continue
                    result = result + module.apply_a(row, alpha_p, inner).scale(value)
        self._push_cache[key] = result
        return result

    def test_states(self) -> List[SparseVector]:
        if self._states is None:
            words = self.module.corpus(self.max_word_len)
            self._states = [self.module.basis(word) for word in words]
        return self._states

    def weight_of(self, key):
        return self.module.weight_of(key)

    def format_key(self, key):
        return format_word(key)
