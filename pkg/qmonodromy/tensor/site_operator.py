#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import itertools
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from qmonodromy.field import ExactField, Scalar
from qmonodromy.generic.util import numpy_seed

from .sparse_vector import SparseVector


Entry = Union[Scalar, int]


def flatten_index(indices: Sequence[int], n: int) -> int:
    """Composite index sum_i (alpha_i - 1) n^(N - i) of 1-based site indices."""
    index = 0
    for alpha in indices:
        assert 1 <= alpha <= n, f"index {alpha} out of range 1..{n}"
        index = index * n + (alpha - 1)
    return index


def unflatten_index(index: int, n: int, num_sites: int) -> Tuple[int, ...]:
    digits = []
    for _ in range(num_sites):
        index, digit = divmod(index, n)
        digits.append(digit + 1)
    assert index == 0, "composite index out of range"
    return tuple(reversed(digits))


class SiteOperator:
    """Exact linear operator on V^(tensor N), V = n-dimensional.

    Entries are stored sparsely as ``rows[row][col] = Scalar`` with the
    row-major composite index convention of :func:`flatten_index`. The upper
    (row) index labels the output, the lower (column) index the input.
    """

    def __init__(
        self,
        field: ExactField,
        n: int,
        num_sites: int,
        rows: Optional[Dict[int, Dict[int, Scalar]]] = None,
    ) -> None:
        self.field = field
        self.n = n
        self.num_sites = num_sites
        self.dim = n ** num_sites
        self.rows: Dict[int, Dict[int, Scalar]] = {}
        for row, cols in (rows or {}).items():
            kept = {col: value for col, value in cols.items() if not value.is_zero()}
            if kept:
                self.rows[row] = kept

    # construction

    @classmethod
    def zero(cls, field: ExactField, n: int, num_sites: int) -> "SiteOperator":
        return cls(field, n, num_sites)

    @classmethod
    def identity(cls, field: ExactField, n: int, num_sites: int) -> "SiteOperator":
        return cls(
            field, n, num_sites, {i: {i: field.one} for i in range(n ** num_sites)}
        )

    @classmethod
    def from_index_function(
        cls,
        field: ExactField,
        n: int,
        num_sites: int,
        fn: Callable[[Tuple[int, ...], Tuple[int, ...]], Entry],
    ) -> "SiteOperator":
        """Builds the operator with entries fn(upper, lower) over 1-based tuples."""
        tuples = list(itertools.product(range(1, n + 1), repeat=num_sites))
        rows: Dict[int, Dict[int, Scalar]] = {}
        for upper in tuples:
            row = flatten_index(upper, n)
            for lower in tuples:
                value = fn(upper, lower)
                if isinstance(value, int):
                    if value == 0:
                        continue
                    value = field.scalar(value)
                rows.setdefault(row, {})[flatten_index(lower, n)] = value
        return cls(field, n, num_sites, rows)

    @classmethod
    def permutation(cls, field: ExactField, n: int) -> "SiteOperator":
        """P on V (x) V with P^{ab}_{ba} = 1."""
        return cls.from_index_function(
            field,
            n,
            2,
            lambda upper, lower: 1
            if upper[0] == lower[1] and upper[1] == lower[0]
            else 0,
        )

    @classmethod
    def random(
        cls, field: ExactField, n: int, num_sites: int, seed: int, low=-3, high=4
    ) -> "SiteOperator":
        """Dense operator with small random integer entries."""
        dim = n ** num_sites
        with numpy_seed(seed):
            values = np.random.randint(low, high, size=(dim, dim))
        rows = {
            row: {col: field.scalar(int(values[row, col])) for col in range(dim)}
            for row in range(dim)
        }
        return cls(field, n, num_sites, rows)

    # access

    def entry(self, row: int, col: int) -> Scalar:
        return self.rows.get(row, {}).get(col, self.field.zero)

    def entry_at(self, upper: Sequence[int], lower: Sequence[int]) -> Scalar:
        return self.entry(flatten_index(upper, self.n), flatten_index(lower, self.n))

    def nonzero_entries(self) -> Iterator[Tuple[int, int, Scalar]]:
        for row in sorted(self.rows):
            for col in sorted(self.rows[row]):
                yield row, col, self.rows[row][col]

    def _check_compatible(self, other: "SiteOperator") -> None:
        assert (self.n, self.num_sites) == (
            other.n,
            other.num_sites,
        ), "operators act on different spaces"

    # algebra

    def __matmul__(self, other: "SiteOperator") -> "SiteOperator":
        self._check_compatible(other)
        rows: Dict[int, Dict[int, Scalar]] = {}
        for row, cols in self.rows.items():
            out: Dict[int, Scalar] = {}
            for mid, left in cols.items():
                for col, right in other.rows.get(mid, {}).items():
                    product = left * right
                    out[col] = out[col] + product if col in out else product
            rows[row] = out
        return SiteOperator(self.field, self.n, self.num_sites, rows)

    def __add__(self, other: "SiteOperator") -> "SiteOperator":
        self._check_compatible(other)
        rows = {row: dict(cols) for row, cols in self.rows.items()}
        for row, cols in other.rows.items():
            target = rows.setdefault(row, {})
            for col, value in cols.items():
                target[col] = target[col] + value if col in target else value
        return SiteOperator(self.field, self.n, self.num_sites, rows)

    def __neg__(self) -> "SiteOperator":
        return self.scale(-1)

    def __sub__(self, other: "SiteOperator") -> "SiteOperator":
        return self + (-other)

    def scale(self, factor: Entry) -> "SiteOperator":
        rows = {
            row: {col: value * factor for col, value in cols.items()}
            for row, cols in self.rows.items()
        }
        return SiteOperator(self.field, self.n, self.num_sites, rows)

    def __mul__(self, factor: Entry) -> "SiteOperator":
        return self.scale(factor)

    __rmul__ = __mul__

    def transpose(self) -> "SiteOperator":
        rows: Dict[int, Dict[int, Scalar]] = {}
        for row, col, value in self.nonzero_entries():
            rows.setdefault(col, {})[row] = value
        return SiteOperator(self.field, self.n, self.num_sites, rows)

    def trace(self) -> Scalar:
        total = self.field.zero
        for row, cols in self.rows.items():
            if row in cols:
                total = total + cols[row]
        return total

    def kron(self, other: "SiteOperator") -> "SiteOperator":
        """self (x) other, with self acting on the leading sites."""
        assert self.n == other.n
        rows: Dict[int, Dict[int, Scalar]] = {}
        for row_a, cols_a in self.rows.items():
            for row_b, cols_b in other.rows.items():
                out = rows.setdefault(row_a * other.dim + row_b, {})
                for col_a, value_a in cols_a.items():
                    for col_b, value_b in cols_b.items():
                        out[col_a * other.dim + col_b] = value_a * value_b
        return SiteOperator(
            self.field, self.n, self.num_sites + other.num_sites, rows
        )

    def embed(self, sites: Sequence[int], num_sites: int) -> "SiteOperator":
        """Acts as self on the listed 1-based sites (in order) and as the
        identity on the remaining ones."""
        assert len(sites) == self.num_sites, "site list does not match operator"
        assert len(set(sites)) == len(sites), "sites must be distinct"
        assert all(1 <= s <= num_sites for s in sites), "site out of range"
        others = [s for s in range(1, num_sites + 1) if s not in sites]
        rows: Dict[int, Dict[int, Scalar]] = {}
        for row, col, value in self.nonzero_entries():
            upper_local = unflatten_index(row, self.n, self.num_sites)
            lower_local = unflatten_index(col, self.n, self.num_sites)
            for rest in itertools.product(range(1, self.n + 1), repeat=len(others)):
                upper = [0] * num_sites
                lower = [0] * num_sites
                for site, u, l in zip(sites, upper_local, lower_local):
                    upper[site - 1] = u
                    lower[site - 1] = l
                for site, r in zip(others, rest):
                    upper[site - 1] = r
                    lower[site - 1] = r
                rows.setdefault(flatten_index(upper, self.n), {})[
                    flatten_index(lower, self.n)
                ] = value
        return SiteOperator(self.field, self.n, num_sites, rows)

    def apply(self, vector: SparseVector) -> SparseVector:
        """Matrix-vector product on a vector keyed by composite indices."""
        terms: Dict[int, Scalar] = {}
        for row, cols in self.rows.items():
            total = None
            for col, value in cols.items():
                if col in vector.terms:
                    product = value * vector.terms[col]
                    total = product if total is None else total + product
            if total is not None:
                terms[row] = total
        return SparseVector(self.field, terms)

    # comparison

    def is_zero(self) -> bool:
        return not self.rows

    def first_difference(
        self, other: "SiteOperator"
    ) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...], Scalar, Scalar]]:
        """Returns (upper, lower, self entry, other entry) of the first
        mismatching entry, or None."""
        self._check_compatible(other)
        for row in sorted(set(self.rows) | set(other.rows)):
            cols = set(self.rows.get(row, {})) | set(other.rows.get(row, {}))
            for col in sorted(cols):
                lhs = self.entry(row, col)
                rhs = other.entry(row, col)
                if lhs != rhs:
                    return (
                        unflatten_index(row, self.n, self.num_sites),
                        unflatten_index(col, self.n, self.num_sites),
                        lhs,
                        rhs,
                    )
        return None

    def equals(self, other: "SiteOperator") -> bool:
        return self.first_difference(other) is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, SiteOperator):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    # Gaussian elimination

    def _echelon(self, augment: Optional[Dict[int, Dict[int, Scalar]]] = None):
        """Gauss-Jordan elimination. Returns (pivot columns, reduced rows, augment)."""
        rows: List[Dict[int, Scalar]] = [
            dict(self.rows.get(i, {})) for i in range(self.dim)
        ]
        extra: List[Dict[int, Scalar]] = (
            [dict(augment.get(i, {})) for i in range(self.dim)] if augment else None
        )
        pivots: List[int] = []
        rank = 0
        for col in range(self.dim):
            pivot = next(
                (r for r in range(rank, self.dim) if col in rows[r]), None
            )
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            if extra is not None:
                extra[rank], extra[pivot] = extra[pivot], extra[rank]
            inv = 1 / rows[rank][col]
            rows[rank] = {c: v * inv for c, v in rows[rank].items()}
            if extra is not None:
                extra[rank] = {c: v * inv for c, v in extra[rank].items()}
            for r in range(self.dim):
                if r == rank or col not in rows[r]:
                    continue
                factor = rows[r][col]
                rows[r] = _axpy(rows[r], rows[rank], -factor)
                if extra is not None:
                    extra[r] = _axpy(extra[r], extra[rank], -factor)
            pivots.append(col)
            rank += 1
        return pivots, rows, extra

    def rank(self) -> int:
        pivots, _, _ = self._echelon()
        return len(pivots)

    def inverse(self) -> "SiteOperator":
        identity = {i: {i: self.field.one} for i in range(self.dim)}
        pivots, _, extra = self._echelon(identity)
        if len(pivots) < self.dim:
            raise ZeroDivisionError("operator is singular")
        rows = {i: extra[i] for i in range(self.dim)}
        return SiteOperator(self.field, self.n, self.num_sites, rows)

    def __str__(self):
        lines = [
            f"{unflatten_index(row, self.n, self.num_sites)}"
            f"{unflatten_index(col, self.n, self.num_sites)}: {value}"
            for row, col, value in self.nonzero_entries()
        ]
        return "\n".join(lines) if lines else "0"


def _axpy(
    target: Dict[int, Scalar], source: Dict[int, Scalar], factor: Scalar
) -> Dict[int, Scalar]:
    out = dict(target)
    for col, value in source.items():
        updated = out[col] + value * factor if col in out else value * factor
        if updated.is_zero():
            out.pop(col, None)
        else:
            out[col] = updated
    return out
