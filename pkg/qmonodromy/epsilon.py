#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Quantum antisymmetrizers and the constant and dynamical epsilon tensors.

Epsilon tensors are stored as :class:`SparseVector` objects over the
composite indices of V^(x n), see :func:`qmonodromy.tensor.flatten_index`.
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Sequence

from qmonodromy.field import ExactField, Scalar
from qmonodromy.rmatrix import build_rhat, embed_adjacent
from qmonodromy.tensor import SiteOperator, SparseVector, flatten_index
from qmonodromy.weight import Weight


class EpsVariant(Enum):
    CONSTANT_UPPER = "constant_upper"
    CONSTANT_LOWER = "constant_lower"
    DYNAMICAL_UPPER = "dynamical_upper"
    DYNAMICAL_LOWER = "dynamical_lower"


@dataclass
class EpsTensor:
    n: int
    variant: EpsVariant
    vector: SparseVector
    weight: Optional[Weight] = None

    def component(self, indices: Sequence[int]) -> Scalar:
        return self.vector.coefficient(flatten_index(indices, self.n))

    def contract(self, other: "EpsTensor") -> Scalar:
        """Full contraction of all n indices with another tensor."""
        total = self.vector.field.zero
        for key, value in self.vector.items():
            total = total + value * other.vector.coefficient(key)
        return total


@dataclass
class Antisymmetrizer:
    k: int
    op: SiteOperator


def permutation_length(indices: Sequence[int]) -> int:
    """Length of the permutation taking (n, n-1, ..., 1) to ``indices``,
    i.e. the number of ascending pairs."""
    return sum(
        1
        for a, b in itertools.combinations(range(len(indices)), 2)
        if indices[a] < indices[b]
    )


def classical_sign(indices: Sequence[int]) -> int:
    """Undeformed epsilon normalized by eps_{n ... 1} = 1."""
    return -1 if permutation_length(indices) % 2 else 1


def build_eps(
    field: ExactField,
    variant: EpsVariant,
    weight: Optional[Weight] = None,
    corrupt: Optional[str] = None,
) -> EpsTensor:
    """Builds one of the four epsilon tensors.

    The constant tensors have components q^(-n(n-1)/4) (-q)^l(sigma), the
    dynamical lower one is the undeformed tensor and the dynamical upper one
    is (-1)^(n(n-1)/2) / D_q(p) prod_{mu<nu} [p_{i_mu i_nu} - 1].

    Raises SingularWeight for DYNAMICAL_UPPER when some [p_ij] vanishes.
    """
    n = field.n
    terms: Dict[int, Scalar] = {}
    if variant in (EpsVariant.CONSTANT_UPPER, EpsVariant.CONSTANT_LOWER):
        if corrupt == "eps-normalization":
            prefactor = field.one
        else:
            prefactor = field.qpow_rational(Fraction(-n * (n - 1), 4))
        minus_q = -field.q(1)
        for indices in itertools.permutations(range(1, n + 1)):
            terms[flatten_index(indices, n)] = (
                prefactor * minus_q ** permutation_length(indices)
            )
    elif variant == EpsVariant.DYNAMICAL_LOWER:
        for indices in itertools.permutations(range(1, n + 1)):
            terms[flatten_index(indices, n)] = field.scalar(classical_sign(indices))
    else:
        assert weight is not None, "the dynamical upper tensor needs a weight"
        denominator = field.one
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                denominator = denominator * weight.nonzero_bracket(field, i, j)
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        for indices in itertools.permutations(range(1, n + 1)):
            value = field.scalar(sign)
            for mu, nu in itertools.combinations(range(n), 2):
                value = value * weight.bracket(field, indices[mu], indices[nu], -1)
            terms[flatten_index(indices, n)] = value / denominator
    return EpsTensor(
        n=n, variant=variant, vector=SparseVector(field, terms), weight=weight
    )


def build_antisym(
    field: ExactField, k: int, rhat: Optional[SiteOperator] = None
) -> Antisymmetrizer:
    """A_1k = q^(-k(k-1)/2) sum_{sigma in S_k} (-q)^l(sigma) g_sigma on V^(x k),
    where g_sigma is the product of g_i = q^(-1/n) R̂_i along a reduced word
    of sigma.
    """
    assert k >= 1, "antisymmetrizer level must be positive"
    n = field.n
    identity = SiteOperator.identity(field, n, k)
    if k == 1:
        return Antisymmetrizer(k=1, op=identity)
    rhat = rhat if rhat is not None else build_rhat(field)
    generators = [
        embed_adjacent(rhat, i, k).scale(field.qpow(-4)) for i in range(1, k)
    ]
    minus_q = -field.q(1)

    # breadth first over permutations (one-line notation) by length
    frontier = {tuple(range(k)): identity}
    total = identity
    for length in range(1, k * (k - 1) // 2 + 1):
        next_frontier: Dict[tuple, SiteOperator] = {}
        for perm, element in frontier.items():
            for i in range(k - 1):
                if perm[i] > perm[i + 1]:
                    continue
                longer = perm[:i] + (perm[i + 1], perm[i]) + perm[i + 2 :]
                if longer not in next_frontier:
                    next_frontier[longer] = element @ generators[i]
        level_sum = SiteOperator.zero(field, n, k)
        for element in next_frontier.values():
            level_sum = level_sum + element
        total = total + level_sum.scale(minus_q ** length)
        frontier = next_frontier
    return Antisymmetrizer(k=k, op=total.scale(field.q(-(k * (k - 1) // 2))))


def outer_product(upper: EpsTensor, lower: EpsTensor) -> SiteOperator:
    """The rank-one operator eps^{alpha...} eps_{beta...} on V^(x n)."""
    field = upper.vector.field
    rows = {
        row: {col: value * other for col, other in lower.vector.items()}
        for row, value in upper.vector.items()
    }
    return SiteOperator(field, upper.n, upper.n, rows)


def act_on_upper(op: SiteOperator, eps: EpsTensor) -> SparseVector:
    """op^{alpha...}_{sigma...} eps^{sigma...}"""
    return op.apply(eps.vector)


def act_on_lower(eps: EpsTensor, op: SiteOperator) -> SparseVector:
    """eps_{sigma...} op^{sigma...}_{beta...}"""
    return op.transpose().apply(eps.vector)


def adjacent_product(rhat: SiteOperator, num_sites: int) -> SiteOperator:
    """R̂_1 R̂_2 ... R̂_{N-1} on V^(x N)."""
    field = rhat.field
    product = SiteOperator.identity(field, rhat.n, num_sites)
    for i in range(1, num_sites):
        product = product @ embed_adjacent(rhat, i, num_sites)
    return product
