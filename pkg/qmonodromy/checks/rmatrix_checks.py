#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import List

from qmonodromy.field import ExactField
from qmonodromy.rmatrix import (
    braid_sides,
    build_rhat_dyn,
    far_commutator,
    hecke_residual,
    ice_rule_violations,
    relabel_reversed,
    spectrum_multiplicities,
)
from qmonodromy.tensor import SiteOperator

from . import register_check
from .check_report import CheckReport
from .verification_check import (
    Outcome,
    VerificationCheck,
    first_failure,
    operator_outcome,
    operator_witness,
    over_states,
    scalar_witness,
)


def braid_outcome(rhat: SiteOperator) -> Outcome:
    lhs, rhs = braid_sides(rhat)
    return operator_outcome(lhs, rhs)


def far_commute_outcome(rhat: SiteOperator) -> Outcome:
    commutator = far_commutator(rhat)
    return operator_outcome(commutator, SiteOperator.zero(rhat.field, rhat.n, 4))


def hecke_outcome(field: ExactField, rhat: SiteOperator) -> Outcome:
    residual = hecke_residual(field, rhat)
    return operator_outcome(residual, SiteOperator.zero(field, field.n, 2))


@register_check("braid")
class BraidCheck(VerificationCheck):
    """R̂_1 R̂_2 R̂_1 = R̂_2 R̂_1 R̂_2 on V^(x3) and [R̂_1, R̂_3] = 0 on
    V^(x4)."""

    suite = "rmatrix"

    def run(self, task) -> List[CheckReport]:
        rhat = task.rmatrices.rhat
        return [
            self.verify(task, "braid", lambda: braid_outcome(rhat)),
            self.verify(task, "braid_far_commute", lambda: far_commute_outcome(rhat)),
        ]


@register_check("hecke")
class HeckeCheck(VerificationCheck):
    """(q^(-1/n) X - q^-1)(q^(-1/n) X + q) = 0 for X = R̂ and X = R̂(p) at the
    test weights."""

    suite = "rmatrix"

    def run(self, task) -> List[CheckReport]:
        field = task.field
        weights = task.test_weights

        def dynamical():
            return over_states(
                weights,
                lambda weight: operator_witness(
                    hecke_residual(field, build_rhat_dyn(field, weight)),
                    SiteOperator.zero(field, field.n, 2),
                ),
            )

        return [
            self.verify(
                task,
                "hecke_constant",
                lambda: hecke_outcome(field, task.rmatrices.rhat),
            ),
            self.verify(
                task, "hecke_dynamical", dynamical, count_as="weights"
            ),
        ]


def _ice_rule_witness(rhat: SiteOperator):
    for upper, lower, value in ice_rule_violations(rhat):
        return {"index": f"{upper}{lower}", "lhs": str(value), "rhs": "0"}
    return None


@register_check("ice_rule")
class IceRuleCheck(VerificationCheck):
    """Entries of R̂ and R̂(p) preserve the index pair {alpha, beta}."""

    suite = "rmatrix"

    def run(self, task) -> List[CheckReport]:
        field = task.field
        return [
            self.verify(
                task,
                "ice_rule_constant",
                lambda: Outcome(witness=_ice_rule_witness(task.rmatrices.rhat)),
            ),
            self.verify(
                task,
                "ice_rule_dynamical",
                lambda: over_states(
                    task.test_weights,
                    lambda weight: _ice_rule_witness(build_rhat_dyn(field, weight)),
                ),
                count_as="weights",
            ),
        ]


@register_check("rmatrix_conventions")
class RMatrixConventionCheck(VerificationCheck):
    """R̂ = P R, P R̂ P equals R̂ with every index reversed, and both R^- = R
    and R^+ = R_21^-1 solve the Yang-Baxter equation."""

    suite = "rmatrix"

    def run(self, task) -> List[CheckReport]:
        field = task.field
        n = field.n
        pair = task.rmatrices
        perm = SiteOperator.permutation(field, n)

        def ybe():
            def sides(r: SiteOperator):
                r12 = r.embed([1, 2], 3)
                r13 = r.embed([1, 3], 3)
                r23 = r.embed([2, 3], 3)
                return r12 @ r13 @ r23, r23 @ r13 @ r12

            return first_failure(
                operator_outcome(*sides(r), r_matrix=label)
                for label, r in (("R-", pair.rminus), ("R+", pair.rplus))
            )

        return [
            self.verify(
                task, "rhat_is_p_r", lambda: operator_outcome(pair.rhat, perm @ pair.r)
            ),
            self.verify(
                task,
                "p_conjugation",
                lambda: operator_outcome(
                    perm @ pair.rhat @ perm, relabel_reversed(pair.rhat)
                ),
            ),
            self.verify(task, "yang_baxter", ybe),
        ]


@register_check("spectrum")
class SpectrumCheck(VerificationCheck):
    """q^(-1/n) R̂ has eigenvalues q^-1 and -q with multiplicities n(n+1)/2
    and n(n-1)/2, and R̂ is invertible."""

    suite = "rmatrix"

    def run(self, task) -> List[CheckReport]:
        field = task.field
        rhat = task.rmatrices.rhat

        def multiplicities():
            trace, m_plus, m_minus = spectrum_multiplicities(field, rhat)
            expected = field.q(-1) * m_plus - field.q(1) * m_minus
            outcome = hecke_outcome(field, rhat)
            if outcome.witness is None:
                outcome.witness = scalar_witness(trace, expected, "trace")
            outcome.value = trace
            return outcome

        def invertible():
            try:
                inverse = rhat.inverse()
            except ZeroDivisionError:
                return Outcome(
                    witness={"index": "det", "lhs": "0", "rhs": "nonzero"}
                )
            return operator_outcome(
                rhat @ inverse, SiteOperator.identity(field, field.n, 2)
            )

        return [
            self.verify(task, "spectrum", multiplicities),
            self.verify(task, "rhat_invertible", invertible),
        ]
