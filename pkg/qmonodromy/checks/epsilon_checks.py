#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import List

from qmonodromy.epsilon import (
    EpsVariant,
    act_on_lower,
    act_on_upper,
    adjacent_product,
    build_antisym,
    outer_product,
)
from qmonodromy.rmatrix import embed_adjacent
from qmonodromy.tensor import SiteOperator

from . import register_check
from .check_report import CheckReport
from .verification_check import (
    Outcome,
    VerificationCheck,
    first_failure,
    operator_outcome,
    over_states,
    scalar_witness,
    tagged,
    vector_witness,
)


@register_check("eps_rhat")
class EpsRhatCheck(VerificationCheck):
    """The constant epsilon tensors are eigenvectors of every R̂_i with
    eigenvalue -q^(1 + 1/n), from the left (upper) and from the right (lower)."""

    suite = "epsilon"

    def run(self, task) -> List[CheckReport]:
        field = task.field
        n = field.n
        rhat = task.rmatrices.rhat
        eigenvalue = -field.qpow(4 * n + 4)
        upper = task.eps(EpsVariant.CONSTANT_UPPER)
        lower = task.eps(EpsVariant.CONSTANT_LOWER)

        def eigen(act, eps):
            return first_failure(
                tagged(
                    Outcome(
                        witness=vector_witness(
                            act(embed_adjacent(rhat, i, n), eps),
                            eps.vector.scale(eigenvalue),
                        )
                    ),
                    position=i,
                )
                for i in range(1, n)
            )

        return [
            self.verify(task, "eps_rhat_upper", lambda: eigen(act_on_upper, upper)),
            self.verify(
                task,
                "eps_rhat_lower",
                lambda: eigen(lambda op, eps: act_on_lower(eps, op), lower),
            ),
        ]


@register_check("eps_normalization")
class EpsNormalizationCheck(VerificationCheck):
    """eps^{a...} eps_{a...} = [n]! for the constant pair and for the
    dynamical pair at every test weight."""

    suite = "epsilon"

    def run(self, task) -> List[CheckReport]:
        field = task.field
        expected = field.qfact(field.n)

        def constant():
            upper = task.eps(EpsVariant.CONSTANT_UPPER)
            lower = task.eps(EpsVariant.CONSTANT_LOWER)
            contraction = upper.contract(lower)
            return Outcome(
                witness=scalar_witness(contraction, expected, "eps.eps"),
                value=contraction,
            )

        def dynamical():
            lower = task.eps(EpsVariant.DYNAMICAL_LOWER)
            return over_states(
                task.test_weights,
                lambda weight: scalar_witness(
                    task.eps(EpsVariant.DYNAMICAL_UPPER, weight).contract(lower),
                    expected,
                    f"eps(p).eps(p) at p={weight}",
                ),
            )

        return [
            self.verify(task, "eps_normalization_constant", constant),
            self.verify(
                task,
                "eps_normalization_dynamical",
                dynamical,
                count_as="weights",
            ),
        ]


@register_check("antisymmetrizer")
class AntisymmetrizerCheck(VerificationCheck):
    """A_1k^2 = [k]! A_1k, A_1k g_i = g_i A_1k = -q A_1k with g_i = q^(-1/n) R̂_i,
    A_1k != 0 for k <= n and A_12 = q^-1 - g."""

    suite = "epsilon"

    def run(self, task) -> List[CheckReport]:
        field = task.field
        n = field.n
        rhat = task.rmatrices.rhat
        antisyms = {}

        def antisym(k: int) -> SiteOperator:
            if k not in antisyms:
                antisyms[k] = build_antisym(field, k, rhat).op
            return antisyms[k]

        def normalization():
            return first_failure(
                operator_outcome(
                    antisym(k) @ antisym(k), antisym(k).scale(field.qfact(k)), k=k
                )
                for k in range(1, n + 1)
            )

        def absorbs_rhat():
            def outcomes():
                minus_q = -field.q(1)
                for k in range(2, n + 1):
                    a = antisym(k)
                    for i in range(1, k):
                        g = embed_adjacent(rhat, i, k).scale(field.qpow(-4))
                        yield operator_outcome(
                            a @ g, a.scale(minus_q), k=k, side="right", i=i
                        )
                        yield operator_outcome(
                            g @ a, a.scale(minus_q), k=k, side="left", i=i
                        )

            return first_failure(outcomes())

        def nonzero():
            for k in range(1, n + 1):
                if antisym(k).is_zero():
                    return Outcome(
                        witness={"index": f"k={k}", "lhs": "0", "rhs": "nonzero"}
                    )
            return Outcome()

        def level_two():
            identity = SiteOperator.identity(field, n, 2)
            g = rhat.scale(field.qpow(-4))
            return operator_outcome(antisym(2), identity.scale(field.q(-1)) - g)

        return [
            self.verify(task, "antisym_normalization", normalization),
            self.verify(task, "antisym_absorbs_rhat", absorbs_rhat),
            self.verify(task, "antisym_nonzero", nonzero),
            self.verify(task, "antisym_level_two", level_two),
        ]


@register_check("antisym_factorization")
class AntisymFactorizationCheck(VerificationCheck):
    """A_1n = eps^{a...} eps_{b...} is a rank one operator, A_1,n+1 = 0, and
    eps_{a...} [(R̂_1 ... R̂_{n-1})^n]^{a...}_{b...} = q^(n^2 - 1) eps_{b...}."""

    suite = "epsilon"

    def run(self, task) -> List[CheckReport]:
        field = task.field
        n = field.n
        rhat = task.rmatrices.rhat
        upper = task.eps(EpsVariant.CONSTANT_UPPER)
        lower = task.eps(EpsVariant.CONSTANT_LOWER)
        top = {}

        def a1n() -> SiteOperator:
            if "op" not in top:
                top["op"] = build_antisym(field, n, rhat).op
            return top["op"]

        def rank_one():
            rank = a1n().rank()
            return Outcome(
                witness=None
                if rank == 1
                else {"index": "rank", "lhs": str(rank), "rhs": "1"}
            )

        def vanishing():
            over = build_antisym(field, n + 1, rhat).op
            return operator_outcome(over, SiteOperator.zero(field, n, n + 1))

        def rhat_power():
            cycle = adjacent_product(rhat, n)
            power = SiteOperator.identity(field, n, n)
            for _ in range(n):
                power = power @ cycle
            factor = field.q(n * n - 1)
            return Outcome(
                witness=vector_witness(
                    act_on_lower(lower, power), lower.vector.scale(factor)
                ),
                value=factor,
            )

        return [
            self.verify(
                task,
                "antisym_eps_factorization",
                lambda: operator_outcome(a1n(), outer_product(upper, lower)),
            ),
            self.verify(task, "antisym_rank_one", rank_one),
            # vanishes in both field modes since dim V = n
            self.verify(task, "antisym_vanishing", vanishing, params={"sites": n + 1}),
            self.verify(task, "eps_rhat_power", rhat_power),
        ]
