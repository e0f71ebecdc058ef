#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Products of matrices with operator entries, acting on a realization.

A :class:`Chain` is an ordered product of factors on V^(x N) whose entries
are either numbers (R-matrices, scalars) or operators of a realization
(zero modes a, the monodromy matrices M, M+-, their inverses and M_p).
Chains are evaluated right to left on vectors ``{composite index: state}``,
so both sides of an identity can be compared entry by entry on each test
state without building a free algebra.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field as dataclass_field
from typing import (
    Any,
    Callable,
    Dict,
    Hashable,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
)

from qmonodromy.field import ExactField, Scalar
from qmonodromy.tensor import SiteOperator, SparseVector, flatten_index, unflatten_index


# operator families a realization can provide
A = "a"
M = "M"
M_PLUS = "M+"
M_MINUS = "M-"
M_PLUS_INV = "M+inv"
M_MINUS_INV = "M-inv"
M_P = "Mp"

FAMILIES = (A, M, M_PLUS, M_MINUS, M_PLUS_INV, M_MINUS_INV, M_P)

# {composite index: state}
Column = Dict[int, SparseVector]


class MonodromyRealization(ABC):
    """Concrete action of the operator families on a space of states."""

    families: Tuple[str, ...] = ()

    def __init__(self, field: ExactField) -> None:
        self.field = field
        self.n = field.n

    @abstractmethod
    def apply(
        self, family: str, upper: int, lower: int, state: SparseVector
    ) -> SparseVector:
        """Entry (upper, lower) of the family acting on a state."""
        pass

    @abstractmethod
    def test_states(self) -> List[SparseVector]:
        pass

    def weight_of(self, key: Hashable):
        raise NotImplementedError(
            f"{type(self).__name__} has no weight grading on its states"
        )

    def supports(self, *families: str) -> bool:
        return all(family in self.families for family in families)

    def zero(self) -> SparseVector:
        return SparseVector.zero(self.field)

    def format_key(self, key: Hashable) -> str:
        return str(key)

    def format_state(self, state: SparseVector) -> str:
        if state.is_zero():
            return "0"
        return " + ".join(
            f"({value})*{self.format_key(key)}" for key, value in sorted(state.items())
        )


class OperatorMatrixRealization(MonodromyRealization):
    """Families given as matrices of :class:`SiteOperator` entries acting on
    an auxiliary space W = V^(x m); states are vectors of W."""

    def __init__(
        self,
        field: ExactField,
        num_sites: int,
        operators: Dict[str, Dict[Tuple[int, int], SiteOperator]],
    ) -> None:
        super().__init__(field)
        self.num_sites = num_sites
        self.operators = operators
        self.families = tuple(family for family in FAMILIES if family in operators)

    def apply(self, family, upper, lower, state):
        assert family in self.operators, f"{family} is not realized"
        return self.operators[family][upper, lower].apply(state)

    def test_states(self) -> List[SparseVector]:
        return [
            SparseVector.basis(self.field, index)
            for index in range(self.n ** self.num_sites)
        ]

    def format_key(self, key):
        labels = unflatten_index(key, self.n, self.num_sites)
        return "e" + "".join(str(a) for a in labels)


@dataclass
class _Factor:
    kind: str
    sites: Tuple[int, ...]
    operator: Optional[SiteOperator] = None
    family: Optional[str] = None
    value: Optional[Scalar] = None
    builder: Optional[Callable[[Any], SiteOperator]] = None
    _columns: Dict[Any, Dict[int, Dict[int, Scalar]]] = dataclass_field(
        default_factory=dict, repr=False
    )


class Chain:
    """An ordered product of factors on V^(x num_sites)."""

    def __init__(self, num_sites: int, factors: Sequence[_Factor] = ()) -> None:
        self.num_sites = num_sites
        self.factors: List[_Factor] = list(factors)

    @classmethod
    def identity(cls, num_sites: int) -> "Chain":
        return cls(num_sites)

    @classmethod
    def numeric(
        cls, num_sites: int, operator: SiteOperator, sites: Sequence[int]
    ) -> "Chain":
        embedded = operator.embed(list(sites), num_sites)
        factor = _Factor(kind="numeric", sites=tuple(sites), operator=embedded)
        return cls(num_sites, [factor])

    @classmethod
    def rhat(cls, num_sites: int, rhat: SiteOperator, position: int) -> "Chain":
        """R̂_i on sites (i, i+1)."""
        return cls.numeric(num_sites, rhat, (position, position + 1))

    @classmethod
    def family(cls, num_sites: int, family: str, site: int) -> "Chain":
        assert family in FAMILIES, f"unknown family {family}"
        assert 1 <= site <= num_sites, "site out of range"
        return cls(num_sites, [_Factor(kind="family", sites=(site,), family=family)])

    @classmethod
    def scalar(cls, num_sites: int, value: Scalar) -> "Chain":
        return cls(num_sites, [_Factor(kind="scalar", sites=(), value=value)])

    @classmethod
    def weighted(
        cls,
        num_sites: int,
        builder: Callable[[Any], SiteOperator],
        sites: Sequence[int],
    ) -> "Chain":
        """A numeric factor whose entries depend on the weight of the state
        it acts on."""
        return cls(
            num_sites,
            [_Factor(kind="weighted", sites=tuple(sites), builder=builder)],
        )

    def __matmul__(self, other: "Chain") -> "Chain":
        assert self.num_sites == other.num_sites, "chains act on different spaces"
        return Chain(self.num_sites, self.factors + other.factors)

    def __pow__(self, exponent: int) -> "Chain":
        assert exponent >= 0
        return Chain(self.num_sites, self.factors * exponent)

    def families(self) -> Tuple[str, ...]:
        return tuple(
            sorted({f.family for f in self.factors if f.kind == "family"})
        )

    def has_weighted_factors(self) -> bool:
        return any(f.kind == "weighted" for f in self.factors)

    # evaluation

    def evaluate(self, realization: MonodromyRealization, column: Column) -> Column:
        for factor in reversed(self.factors):
            column = self._apply_factor(realization, factor, column)
        return column

    def _apply_factor(
        self, realization: MonodromyRealization, factor: _Factor, column: Column
    ) -> Column:
        n = realization.n
        out: Dict[int, List[Tuple[Hashable, Scalar]]] = {}

        def add(index: int, state: SparseVector, coefficient=1) -> None:
            bucket = out.setdefault(index, [])
            bucket.extend((key, value * coefficient) for key, value in state.items())

        if factor.kind == "scalar":
            return {
                index: state.scale(factor.value)
                for index, state in column.items()
            }
        if factor.kind == "numeric":
            columns = factor._columns.get(None)
            if columns is None:
                columns = factor.operator.transpose().rows
                factor._columns[None] = columns
            for index, state in column.items():
                for target, value in columns.get(index, {}).items():
                    add(target, state, value)
        elif factor.kind == "family":
            site = factor.sites[0]
            for index, state in column.items():
                digits = list(unflatten_index(index, n, self.num_sites))
                lower = digits[site - 1]
                for upper in range(1, n + 1):
                    image = realization.apply(factor.family, upper, lower, state)
                    if image.is_zero():
                        continue
                    digits[site - 1] = upper
                    add(flatten_index(digits, n), image)
        else:
            for index, state in column.items():
                for key, coefficient in state.items():
                    weight = realization.weight_of(key)
                    columns = factor._columns.get(weight)
                    if columns is None:
                        op = factor.builder(weight)
                        op = op.embed(list(factor.sites), self.num_sites)
                        columns = op.transpose().rows
                        factor._columns[weight] = columns
                    for target, value in columns.get(index, {}).items():
                        out.setdefault(target, []).append((key, coefficient * value))
        result: Column = {}
        for index, terms in out.items():
            state = SparseVector.from_terms(realization.field, terms)
            if not state.is_zero():
                result[index] = state
        return result


# comparison helpers


def initial_column(
    index: int, state: SparseVector
) -> Column:
    return {index: state}


def upper_contracted(tensor: SparseVector, state: SparseVector) -> Column:
    """{alpha...: eps^{alpha...} state}"""
    return {index: state.scale(value) for index, value in tensor.items()}


def lower_contracted(
    realization: MonodromyRealization, tensor: SparseVector, column: Column
) -> SparseVector:
    """sum_alpha eps_{alpha...} column[alpha...]"""
    result = realization.zero()
    for index, state in column.items():
        value = tensor.coefficient(index)
        if not value.is_zero():
            result = result + state.scale(value)
    return result


def column_difference(
    realization: MonodromyRealization, num_sites: int, lhs: Column, rhs: Column
) -> Optional[Dict[str, str]]:
    """Witness of the first mismatch between two evaluated columns."""
    zero = realization.zero()
    for index in sorted(set(lhs) | set(rhs)):
        difference = lhs.get(index, zero).first_difference(rhs.get(index, zero))
        if difference is not None:
            key, left, right = difference
            return {
                "index": str(unflatten_index(index, realization.n, num_sites)),
                "state": realization.format_key(key),
                "lhs": str(left),
                "rhs": str(right),
            }
    return None


def state_difference(
    realization: MonodromyRealization, lhs: SparseVector, rhs: SparseVector
) -> Optional[Dict[str, str]]:
    difference = lhs.first_difference(rhs)
    if difference is None:
        return None
    key, left, right = difference
    return {"state": realization.format_key(key), "lhs": str(left), "rhs": str(right)}


def compare_on_columns(
    realization: MonodromyRealization,
    lhs: Chain,
    rhs: Chain,
    state: SparseVector,
    indices: Optional[Iterable[int]] = None,
) -> Optional[Dict[str, str]]:
    """Compares lhs and rhs column by column on one state."""
    n = realization.n
    if indices is None:
        indices = range(n ** lhs.num_sites)
    for index in indices:
        witness = column_difference(
            realization,
            lhs.num_sites,
            lhs.evaluate(realization, initial_column(index, state)),
            rhs.evaluate(realization, initial_column(index, state)),
        )
        if witness is not None:
            witness["column"] = str(unflatten_index(index, n, lhs.num_sites))
            return witness
    return None


# frequently used chains


def rhat_product(num_sites: int, rhat: SiteOperator, first: int, last: int) -> Chain:
    """R̂_first R̂_{first+1} ... R̂_last (identity when first > last)."""
    chain = Chain.identity(num_sites)
    for i in range(first, last + 1):
        chain = chain @ Chain.rhat(num_sites, rhat, i)
    return chain


def family_product(num_sites: int, family: str, sites: Iterable[int]) -> Chain:
    chain = Chain.identity(num_sites)
    for site in sites:
        chain = chain @ Chain.family(num_sites, family, site)
    return chain


def exchange_relations(rhat: SiteOperator) -> List[Tuple[str, Chain, Chain]]:
    """Exchange relations of the Gauss components on V (x) V:
    R̂ M+-_2 M+-_1 = M+-_2 M+-_1 R̂ and M-^-1_2 R̂ M+_2 = M+_1 R̂ M-^-1_1."""
    relations = []
    r = Chain.rhat(2, rhat, 1)
    for family, label in ((M_PLUS, "plus"), (M_MINUS, "minus")):
        pair = Chain.family(2, family, 2) @ Chain.family(2, family, 1)
        relations.append((f"exchange_{label}", r @ pair, pair @ r))
    relations.append(
        (
            "exchange_mixed",
            Chain.family(2, M_MINUS_INV, 2) @ r @ Chain.family(2, M_PLUS, 2),
            Chain.family(2, M_PLUS, 1) @ r @ Chain.family(2, M_MINUS_INV, 1),
        )
    )
    return relations


def reflection_relation(rhat: SiteOperator) -> Tuple[Chain, Chain]:
    """R̂ M_2 R̂ M_2 = M_2 R̂ M_2 R̂"""
    r = Chain.rhat(2, rhat, 1)
    m2 = Chain.family(2, M, 2)
    return r @ m2 @ r @ m2, m2 @ r @ m2 @ r
