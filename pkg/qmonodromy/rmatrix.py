#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Constant and dynamical R-matrices of U_q(sl(n)) and their Hecke and braid
properties.

Conventions: ``rhat`` is R̂ on V (x) V including the q^(1/n) prefactor,
``R = P R̂``, ``R^- = R`` and ``R^+ = R_21^(-1) = P R^(-1) P``.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from qmonodromy.field import ExactField, Scalar
from qmonodromy.tensor import SiteOperator
from qmonodromy.weight import Weight


# Negative controls understood by build_rhat.
RHAT_CORRUPTIONS = ("rhat-prefactor", "r-convention")


def sign(alpha: int, beta: int) -> int:
    """epsilon_{alpha beta}: -1 below the diagonal order, 0 on it, 1 above."""
    if alpha < beta:
        return -1
    if alpha > beta:
        return 1
    return 0


def build_rhat(field: ExactField, corrupt: Optional[str] = None) -> SiteOperator:
    """Drinfeld-Jimbo R̂ with entries
    q^(-1/n) R̂^{ab}_{a'b'} = d^b_a' d^a_b' + (q^-1 - q^eps_ba) d^a_a' d^b_b'.
    """
    n = field.n
    prefactor = field.one if corrupt == "rhat-prefactor" else field.qpow(4)
    q_inv = field.q(-1)

    def entry(upper, lower):
        alpha, beta = upper
        alpha_p, beta_p = lower
        value = field.zero
        if beta == alpha_p and alpha == beta_p:
            value = value + 1
        if alpha == alpha_p and beta == beta_p:
            if corrupt == "r-convention":
                exponent = sign(alpha, beta)
            else:
                exponent = sign(beta, alpha)
            value = value + q_inv - field.q(exponent)
        return value * prefactor

    return SiteOperator.from_index_function(field, n, 2, entry)


@dataclass
class RMatrixPair:
    rhat: SiteOperator
    r: SiteOperator
    rminus: SiteOperator
    rplus: SiteOperator


def build_rmatrix_pair(field: ExactField, corrupt: Optional[str] = None) -> RMatrixPair:
    rhat = build_rhat(field, corrupt)
    perm = SiteOperator.permutation(field, field.n)
    r = perm @ rhat
    rplus = perm @ r.inverse() @ perm
    return RMatrixPair(rhat=rhat, r=r, rminus=r, rplus=rplus)


def build_rhat_dyn(field: ExactField, weight: Weight) -> SiteOperator:
    """Dynamical R̂(p) in the gauge where the exponent alpha_ij vanishes:
    q^(-1/n) R̂(p)^{ij}_{i'j'} = a_ij d^i_j' d^j_i' + b_ij d^i_i' d^j_j'.

    Raises SingularWeight when some [p_ij] vanishes.
    """
    n = field.n
    prefactor = field.qpow(4)
    a = {}
    b = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                a[i, j] = field.q(-1)
                b[i, j] = field.zero
                continue
            p_ij = weight.diff(i, j)
            bracket = weight.nonzero_bracket(field, i, j)
            a[i, j] = field.qint(p_ij - 1) / bracket
            b[i, j] = field.q(-p_ij) / bracket

    def entry(upper, lower):
        i, j = upper
        i_p, j_p = lower
        value = field.zero
        if i == j_p and j == i_p:
            value = value + a[i, j]
        if i == i_p and j == j_p:
            value = value + b[i, j]
        return value * prefactor

    return SiteOperator.from_index_function(field, n, 2, entry)


def hecke_residual(field: ExactField, rhat: SiteOperator) -> SiteOperator:
    """(q^(-1/n) X - q^-1)(q^(-1/n) X + q), zero iff X is of Hecke type."""
    g = rhat.scale(field.qpow(-4))
    identity = SiteOperator.identity(field, field.n, 2)
    return (g - identity.scale(field.q(-1))) @ (g + identity.scale(field.q(1)))


def embed_adjacent(rhat: SiteOperator, position: int, num_sites: int) -> SiteOperator:
    """R̂_i acting on sites (i, i+1)."""
    return rhat.embed([position, position + 1], num_sites)


def braid_sides(rhat: SiteOperator) -> Tuple[SiteOperator, SiteOperator]:
    """Both sides of R̂_1 R̂_2 R̂_1 = R̂_2 R̂_1 R̂_2 on V^(x3)."""
    r1 = embed_adjacent(rhat, 1, 3)
    r2 = embed_adjacent(rhat, 2, 3)
    return r1 @ r2 @ r1, r2 @ r1 @ r2


def far_commutator(rhat: SiteOperator) -> SiteOperator:
    """[R̂_1, R̂_3] on V^(x4)."""
    r1 = embed_adjacent(rhat, 1, 4)
    r3 = embed_adjacent(rhat, 3, 4)
    return r1 @ r3 - r3 @ r1


def ice_rule_violations(rhat: SiteOperator):
    """Nonzero entries whose index pair {alpha, beta} is not preserved."""
    n = rhat.n
    for row, col, value in rhat.nonzero_entries():
        upper = (row // n + 1, row % n + 1)
        lower = (col // n + 1, col % n + 1)
        if sorted(upper) != sorted(lower):
            yield upper, lower, value


def relabel_reversed(op: SiteOperator) -> SiteOperator:
    """Entries re-indexed by alpha -> n + 1 - alpha on every site."""
    n = op.n
    return SiteOperator.from_index_function(
        op.field,
        n,
        op.num_sites,
        lambda upper, lower: op.entry_at(
            tuple(n + 1 - a for a in upper), tuple(n + 1 - a for a in lower)
        ),
    )


def spectrum_multiplicities(
    field: ExactField, rhat: SiteOperator
) -> Tuple[Scalar, int, int]:
    """Multiplicities (m_plus, m_minus) of the eigenvalues q^-1 and -q of
    q^(-1/n) R̂ read off from the trace, assuming the Hecke relation holds.

    Returns the trace together with the expected multiplicities
    n(n+1)/2 and n(n-1)/2.
    """
    n = field.n
    trace = rhat.scale(field.qpow(-4)).trace()
    return trace, n * (n + 1) // 2, n * (n - 1) // 2
