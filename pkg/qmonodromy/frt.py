#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Gauss components M+- realized by R-matrices on an auxiliary space.

On a single auxiliary site the entries (M)^alpha_beta are n x n matrices cut
out of an R-matrix coupling the auxiliary site with the defining space.
Several sites are combined with the coproduct
Delta(M^alpha_beta) = M^alpha_sigma (x) M^sigma_beta, the inverses with the
antipode, i.e. in reversed site order.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from qmonodromy.field import ExactField, Scalar
from qmonodromy.generic.errors import NoValidVariant
from qmonodromy.monodromy import (
    M,
    M_MINUS,
    M_MINUS_INV,
    M_PLUS,
    M_PLUS_INV,
    OperatorMatrixRealization,
    compare_on_columns,
    exchange_relations,
)
from qmonodromy.rmatrix import build_rmatrix_pair
from qmonodromy.tensor import SiteOperator


# operator matrix on the defining space with entries acting on one site
OperatorMatrix = Dict[Tuple[int, int], SiteOperator]


@dataclass(frozen=True)
class FrtVariant:
    """Which R-matrix cut builds M+ and M-, and whether the q^(1/n)
    prefactor is kept."""

    plus: str
    minus: str
    normalized: bool

    @property
    def name(self) -> str:
        suffix = "normalized" if self.normalized else "unnormalized"
        return f"M+={self.plus},M-={self.minus},{suffix}"


# cuts of R on V_aux (x) V_0 ("a0") or V_0 (x) V_aux ("0a"), and inverses
_INVERSE_CUT = {
    "R_a0": "R_a0_inv",
    "R_a0_inv": "R_a0",
    "R_0a": "R_0a_inv",
    "R_0a_inv": "R_0a",
}

_PAIRINGS = (
    ("R_a0", "R_0a_inv"),
    ("R_0a", "R_a0_inv"),
    ("R_a0_inv", "R_0a"),
    ("R_0a_inv", "R_a0"),
)

FRT_VARIANTS: Tuple[FrtVariant, ...] = tuple(
    FrtVariant(plus=plus, minus=minus, normalized=normalized)
    for normalized in (False, True)
    for plus, minus in _PAIRINGS
)


def _cut(
    field: ExactField, r: SiteOperator, r_inv: SiteOperator, name: str
) -> OperatorMatrix:
    n = field.n
    source = r_inv if name.endswith("_inv") else r
    aux_first = name.startswith("R_a0")

    def entry_function(alpha: int, beta: int):
        def entry(upper, lower):
            if aux_first:
                return source.entry_at((upper[0], alpha), (lower[0], beta))
            return source.entry_at((alpha, upper[0]), (beta, lower[0]))

        return entry

    return {
        (alpha, beta): SiteOperator.from_index_function(
            field, n, 1, entry_function(alpha, beta)
        )
        for alpha in range(1, n + 1)
        for beta in range(1, n + 1)
    }


def single_site_families(
    field: ExactField, variant: FrtVariant, corrupt: Optional[str] = None
) -> Dict[str, OperatorMatrix]:
    r = build_rmatrix_pair(field, corrupt).r
    if variant.normalized:
        r = r.scale(field.qpow(-4))
    r_inv = r.inverse()
    return {
        M_PLUS: _cut(field, r, r_inv, variant.plus),
        M_MINUS: _cut(field, r, r_inv, variant.minus),
        M_PLUS_INV: _cut(field, r, r_inv, _INVERSE_CUT[variant.plus]),
        M_MINUS_INV: _cut(field, r, r_inv, _INVERSE_CUT[variant.minus]),
    }


def _matrix_product(
    field: ExactField, left: OperatorMatrix, right: OperatorMatrix
) -> OperatorMatrix:
    n = field.n
    result: OperatorMatrix = {}
    for alpha in range(1, n + 1):
        for beta in range(1, n + 1):
            total = None
            for sigma in range(1, n + 1):
                term = left[alpha, sigma] @ right[sigma, beta]
                total = term if total is None else total + term
            result[alpha, beta] = total
    return result


def _embed_matrix(matrix: OperatorMatrix, site: int, num_sites: int) -> OperatorMatrix:
    return {key: op.embed([site], num_sites) for key, op in matrix.items()}


def assemble_families(
    field: ExactField,
    single_site: Dict[str, OperatorMatrix],
    num_sites: int,
    m_prefactor: Optional[Scalar] = None,
) -> Dict[str, OperatorMatrix]:
    """Coproduct over num_sites auxiliary sites; the inverses are multiplied
    in reversed site order. Also builds M = q^(1/n - n) M+ M-^-1."""
    families: Dict[str, OperatorMatrix] = {}
    for family, matrix in single_site.items():
        order = range(1, num_sites + 1)
        if family in (M_PLUS_INV, M_MINUS_INV):
            order = reversed(order)
        product = None
        for site in order:
            embedded = _embed_matrix(matrix, site, num_sites)
            if product is None:
                product = embedded
            else:
                product = _matrix_product(field, product, embedded)
        families[family] = product
    prefactor = m_prefactor
    if prefactor is None:
        prefactor = field.qpow(4 - 4 * field.n * field.n)
    families[M] = {
        key: op.scale(prefactor)
        for key, op in _matrix_product(
            field, families[M_PLUS], families[M_MINUS_INV]
        ).items()
    }
    return families


def variant_failures(
    field: ExactField, families: Dict[str, OperatorMatrix], num_sites: int
) -> List[str]:
    """Names of the defining conditions a candidate violates: the exchange
    relations, triangularity, equal diagonals of M+ and M-^-1 and
    prod d_alpha = 1."""
    n = field.n
    realization = OperatorMatrixRealization(field, num_sites, families)
    rhat = build_rmatrix_pair(field).rhat
    failures = []
    for name, lhs, rhs in exchange_relations(rhat):
        for state in realization.test_states():
            if compare_on_columns(realization, lhs, rhs, state) is not None:
                failures.append(name)
                break
    identity = SiteOperator.identity(field, n, num_sites)
    for alpha in range(1, n + 1):
        for beta in range(1, n + 1):
            if alpha > beta and not families[M_PLUS][alpha, beta].is_zero():
                failures.append("upper_triangular")
            if alpha < beta and not families[M_MINUS][alpha, beta].is_zero():
                failures.append("lower_triangular")
    diagonal_product = identity
    for alpha in range(1, n + 1):
        d = families[M_PLUS][alpha, alpha]
        if not d.equals(families[M_MINUS_INV][alpha, alpha]):
            failures.append("diagonal")
        diagonal_product = diagonal_product @ d
    if not diagonal_product.equals(identity):
        failures.append("diagonal_product")
    return sorted(set(failures))


@dataclass
class FrtConstruction:
    variant: FrtVariant
    passing_variants: List[FrtVariant]
    families: Dict[str, OperatorMatrix]
    num_sites: int


def build_frt(
    field: ExactField, num_sites: int, corrupt: Optional[str] = None
) -> FrtConstruction:
    """Selects the R-matrix cuts by brute force on one auxiliary site and
    assembles the families on num_sites sites.

    Raises NoValidVariant if no candidate passes.
    """
    assert num_sites >= 1, "need at least one auxiliary site"
    passing = []
    for variant in FRT_VARIANTS:
        single_site = single_site_families(field, variant, corrupt)
        failures = variant_failures(
            field, assemble_families(field, single_site, 1), 1
        )
        if failures:
            logging.debug(f"FRT variant {variant.name} fails {failures}")
        else:
            passing.append(variant)
    if not passing:
        raise NoValidVariant(f"no FRT construction passes over {field!r}")
    chosen = passing[0]
    logging.info(
        f"FRT variant {chosen.name} selected "
        f"({len(passing)} of {len(FRT_VARIANTS)} candidates pass)"
    )
    m_prefactor = field.one if corrupt == "m-prefactor" else None
    families = assemble_families(
        field, single_site_families(field, chosen, corrupt), num_sites, m_prefactor
    )
    return FrtConstruction(
        variant=chosen,
        passing_variants=passing,
        families=families,
        num_sites=num_sites,
    )
