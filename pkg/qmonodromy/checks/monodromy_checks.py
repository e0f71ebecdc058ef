#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from fractions import Fraction
from typing import Callable, Iterable, List, Optional

from qmonodromy.epsilon import EpsTensor, EpsVariant, adjacent_product, build_antisym
from qmonodromy.monodromy import (
    A,
    M,
    M_MINUS,
    M_MINUS_INV,
    M_P,
    M_PLUS,
    M_PLUS_INV,
    Chain,
    MonodromyRealization,
    column_difference,
    compare_on_columns,
    exchange_relations,
    family_product,
    lower_contracted,
    reflection_relation,
    rhat_product,
    state_difference,
    upper_contracted,
)
from qmonodromy.rmatrix import embed_adjacent
from qmonodromy.tensor import SiteOperator, SparseVector
from qmonodromy.weight import Weight

from . import register_check
from .check_report import CheckReport
from .verification_check import (
    Outcome,
    VerificationCheck,
    Witness,
    first_failure,
    operator_outcome,
    over_states,
    tagged,
)


def chain_outcome(
    realization: MonodromyRealization,
    lhs: Chain,
    rhs: Chain,
    states: Optional[Iterable[SparseVector]] = None,
) -> Outcome:
    """Compares two chains column by column on the test states of a
    realization; skipped if the realization lacks one of their families."""
    missing = sorted(
        {f for f in lhs.families() + rhs.families() if not realization.supports(f)}
    )
    if missing:
        return Outcome(
            checked=0,
            skip_reason=f"{type(realization).__name__} does not realize "
            + ", ".join(missing),
        )
    if states is None:
        states = realization.test_states()
    return over_states(
        states, lambda state: compare_on_columns(realization, lhs, rhs, state)
    )


def entry_outcome(
    realization: MonodromyRealization,
    families: Iterable[str],
    compare: Callable[[SparseVector], Optional[Witness]],
) -> Outcome:
    missing = [f for f in families if not realization.supports(f)]
    if missing:
        return Outcome(
            checked=0,
            skip_reason=f"{type(realization).__name__} does not realize "
            + ", ".join(missing),
        )
    return over_states(realization.test_states(), compare)


def reversed_product(num_sites: int, family: str) -> Chain:
    """Y_N ... Y_1"""
    return family_product(num_sites, family, range(num_sites, 0, -1))


def _unchanged(state: SparseVector) -> SparseVector:
    return state


def interleaved(num_sites: int, left: str, right: str) -> Chain:
    """(Y Z)_1 (Y Z)_2 ... (Y Z)_N"""
    chain = Chain.identity(num_sites)
    for site in range(1, num_sites + 1):
        chain = chain @ Chain.family(num_sites, left, site) @ Chain.family(
            num_sites, right, site
        )
    return chain


def cycle(num_sites: int, rhat: SiteOperator) -> Chain:
    """R̂_1 ... R̂_{N-1} M_N"""
    return rhat_product(num_sites, rhat, 1, num_sites - 1) @ Chain.family(
        num_sites, M, num_sites
    )


def x_chain(n: int, rhat: SiteOperator, j: int) -> Chain:
    """X_j as a product of j factors R̂_1 ... R̂_{n-t} M+_{n-t+1} R̂_{n-t+1} ...
    R̂_{n-1}, followed by M-^-1_{n-j+1} ... M-^-1_n."""
    chain = Chain.identity(n)
    for t in range(1, j + 1):
        chain = (
            chain
            @ rhat_product(n, rhat, 1, n - t)
            @ Chain.family(n, M_PLUS, n - t + 1)
            @ rhat_product(n, rhat, n - t + 1, n - 1)
        )
    return chain @ family_product(n, M_MINUS_INV, range(n - j + 1, n + 1))


def contracted_outcome(
    realization: MonodromyRealization,
    chain: Chain,
    lower: EpsTensor,
    upper: EpsTensor,
    expected: Callable[[SparseVector], SparseVector],
) -> Outcome:
    """(1/[n]!) eps_{i...} chain^{i...}_{alpha...} eps^{alpha...} s against
    expected(s) on every test state."""
    field = realization.field
    norm = 1 / field.qfact(field.n)

    def compare(state: SparseVector) -> Optional[Witness]:
        column = chain.evaluate(realization, upper_contracted(upper.vector, state))
        lhs = lower_contracted(realization, lower.vector, column).scale(norm)
        return state_difference(realization, lhs, expected(state))

    return entry_outcome(realization, chain.families(), compare)


class _MonodromyCheck(VerificationCheck):
    suite = "monodromy"

    def on_realizations(
        self,
        task,
        check_id: str,
        fn: Callable[[MonodromyRealization], Outcome],
    ) -> List[CheckReport]:
        """One report per realization of the monodromy families."""
        return [
            self.verify(
                task, check_id, lambda: fn(realization), params={"realization": label}
            )
            for label, realization in task.monodromy_realizations()
        ]


@register_check("vacuum")
class VacuumCheck(_MonodromyCheck):
    """Action of the monodromy families on the vacuum: M |0> = q^(1/n - n) |0>,
    M+- and their inverses act by the counit, (M_p)^i_i |0> = q^(-2 p_i + 1 - 1/n)
    |0>, and M_p a |0> = q^(1/n - n) a |0>."""

    def run(self, task) -> List[CheckReport]:
        field = task.field
        n = field.n
        fock = task.fock
        vacuum = fock.module.vacuum()
        m_eigenvalue = field.qpow_rational(Fraction(1, n) - n)

        def diagonal(family: str, values: Callable[[int], object]) -> Outcome:
            def outcomes():
                for upper in range(1, n + 1):
                    for lower in range(1, n + 1):
                        expected = (
                            vacuum.scale(values(upper))
                            if upper == lower
                            else fock.zero()
                        )
                        yield tagged(
                            Outcome(
                                witness=state_difference(
                                    fock,
                                    fock.apply(family, upper, lower, vacuum),
                                    expected,
                                )
                            ),
                            index=f"{family}^{upper}_{lower}",
                        )

            return first_failure(outcomes())

        def counit():
            return first_failure(
                diagonal(family, lambda _: field.one)
                for family in (M_PLUS, M_MINUS, M_PLUS_INV, M_MINUS_INV)
            )

        def mp_vacuum():
            weight = Weight.vacuum(n)
            return diagonal(
                M_P,
                lambda i: field.qpow_rational(
                    -2 * weight.p[i - 1] + 1 - Fraction(1, n)
                ),
            )

        def conformal_dimension():
            # e^(2 pi i Delta) for Delta = (n^2 - 1) / 2nh
            delta_phase = field.qpow_rational(-Fraction(n * n - 1, n))
            eigenvalue = fock.apply(M, 1, 1, vacuum).coefficient(())
            witness = None
            if eigenvalue != delta_phase:
                witness = {
                    "index": "M^1_1 |0>",
                    "lhs": str(eigenvalue),
                    "rhs": str(delta_phase),
                }
            return Outcome(witness=witness, value=eigenvalue)

        def renormalized():
            lhs = Chain.family(1, M_P, 1) @ Chain.family(1, A, 1)
            rhs = Chain.scalar(1, m_eigenvalue) @ Chain.family(1, A, 1)
            return chain_outcome(fock, lhs, rhs, states=[vacuum])

        return [
            self.verify(
                task, "vacuum_m", lambda: diagonal(M, lambda _: m_eigenvalue)
            ),
            self.verify(task, "vacuum_mpm", counit),
            self.verify(task, "vacuum_mp", mp_vacuum),
            self.verify(task, "conformal_dimension", conformal_dimension),
            self.verify(task, "main_vacuum", renormalized),
        ]


@register_check("zero_mode_monodromy")
class ZeroModeMonodromyCheck(_MonodromyCheck):
    """Exchange of the monodromy families with the zero modes:
    M_p a = a M, M_1 a_2 = a_2 R̂ M_2 R̂, M+-_2 a_1 = a_1 R^-+_12 M+-_2 and
    M+-^-1_2 a_1 = a_1 M+-^-1_2 (R^-+_12)^-1."""

    def run(self, task) -> List[CheckReport]:
        fock = task.fock
        pair = task.rmatrices
        rhat = Chain.rhat(2, pair.rhat, 1)

        def push(family: str, r: SiteOperator, inverse: bool) -> Outcome:
            lhs = Chain.family(2, family, 2) @ Chain.family(2, A, 1)
            if inverse:
                rhs = (
                    Chain.family(2, A, 1)
                    @ Chain.family(2, family, 2)
                    @ Chain.numeric(2, r.inverse(), (1, 2))
                )
            else:
                rhs = (
                    Chain.family(2, A, 1)
                    @ Chain.numeric(2, r, (1, 2))
                    @ Chain.family(2, family, 2)
                )
            return chain_outcome(fock, lhs, rhs)

        return [
            self.verify(
                task,
                "mp_a_equals_a_m",
                lambda: chain_outcome(
                    fock,
                    Chain.family(1, M_P, 1) @ Chain.family(1, A, 1),
                    Chain.family(1, A, 1) @ Chain.family(1, M, 1),
                ),
            ),
            self.verify(
                task,
                "m_exchange_a",
                lambda: chain_outcome(
                    fock,
                    Chain.family(2, M, 1) @ Chain.family(2, A, 2),
                    Chain.family(2, A, 2) @ rhat @ Chain.family(2, M, 2) @ rhat,
                ),
            ),
            self.verify(
                task, "mplus_exchange_a", lambda: push(M_PLUS, pair.rminus, False)
            ),
            self.verify(
                task, "mminus_exchange_a", lambda: push(M_MINUS, pair.rplus, False)
            ),
            self.verify(
                task,
                "mplus_inv_exchange_a",
                lambda: push(M_PLUS_INV, pair.rminus, True),
            ),
            self.verify(
                task,
                "mminus_inv_exchange_a",
                lambda: push(M_MINUS_INV, pair.rplus, True),
            ),
        ]


@register_check("zero_mode_chains")
class ZeroModeChainCheck(_MonodromyCheck):
    """Moving monodromy matrices through products of zero modes on V^(x m):
    a_1 M_1 ... a_m M_m = a_1 ... a_m (R̂_1 ... R̂_{m-1} M_m)^m and the
    intermediate steps."""

    def run(self, task) -> List[CheckReport]:
        field = task.field
        n = field.n
        fock = task.fock
        rhat = task.rmatrices.rhat
        sizes = range(2, max(n, 3) + 1)

        def a_m_chain():
            return first_failure(
                tagged(
                    chain_outcome(
                        fock,
                        interleaved(m, A, M),
                        family_product(m, A, range(1, m + 1)) @ cycle(m, rhat) ** m,
                    ),
                    m=m,
                )
                for m in sizes
            )

        def step(j: int, power: int) -> Outcome:
            lhs = (
                rhat_product(j, rhat, 1, j - 2) @ Chain.family(j, M, j - 1)
            ) ** power @ Chain.family(j, A, j)
            rhs = Chain.family(j, A, j) @ (
                rhat_product(j, rhat, 1, j - 1)
                @ Chain.family(j, M, j)
                @ Chain.rhat(j, rhat, j - 1)
            ) ** power
            return tagged(chain_outcome(fock, lhs, rhs), j=j)

        def random_factor():
            x = SiteOperator.random(field, n, 1, seed=task.seed)

            def outcomes():
                for j in range(3, max(n, 3) + 1):
                    product = adjacent_product(rhat, j) @ x.embed([j], j)
                    for i in range(0, j - 2):
                        yield operator_outcome(
                            embed_adjacent(rhat, j - i - 1, j) @ product,
                            product @ embed_adjacent(rhat, j - i - 2, j),
                            j=j,
                            i=i,
                        )

            return first_failure(outcomes())

        return [
            self.verify(task, "a_m_chain", a_m_chain),
            self.verify(
                task, "rrm_a", lambda: first_failure(step(j, 1) for j in sizes)
            ),
            self.verify(
                task, "ram", lambda: first_failure(step(j, j - 1) for j in sizes)
            ),
            self.verify(task, "rrm_random", random_factor, params={"seed": task.seed}),
        ]


@register_check("gauss_components")
class GaussComponentCheck(_MonodromyCheck):
    """M+ is upper and M- lower triangular, the diagonal entries
    d_alpha = (M+)^alpha_alpha = (M-^-1)^alpha_alpha commute with product 1,
    and M+- M+-^-1 = 1."""

    def run(self, task) -> List[CheckReport]:
        n = task.field.n

        def triangularity(realization):
            def compare(state):
                for alpha in range(1, n + 1):
                    for beta in range(1, n + 1):
                        if alpha == beta:
                            continue
                        family = M_PLUS if alpha > beta else M_MINUS
                        image = realization.apply(family, alpha, beta, state)
                        witness = state_difference(
                            realization, image, realization.zero()
                        )
                        if witness is not None:
                            witness["index"] = f"{family}^{alpha}_{beta}"
                            return witness
                return None

            return entry_outcome(realization, (M_PLUS, M_MINUS), compare)

        def diagonal_commute(realization):
            def compare(state):
                for alpha in range(1, n + 1):
                    for beta in range(alpha + 1, n + 1):
                        witness = state_difference(
                            realization,
                            realization.apply(
                                M_PLUS,
                                alpha,
                                alpha,
                                realization.apply(M_PLUS, beta, beta, state),
                            ),
                            realization.apply(
                                M_PLUS,
                                beta,
                                beta,
                                realization.apply(M_PLUS, alpha, alpha, state),
                            ),
                        )
                        if witness is not None:
                            witness["index"] = f"d{alpha} d{beta}"
                            return witness
                return None

            return entry_outcome(realization, (M_PLUS,), compare)

        def diagonal_product(realization):
            def compare(state):
                image = state
                for alpha in range(1, n + 1):
                    image = realization.apply(M_PLUS, alpha, alpha, image)
                return state_difference(realization, image, state)

            return entry_outcome(realization, (M_PLUS,), compare)

        def diagonal_inverse(realization):
            def compare(state):
                for alpha in range(1, n + 1):
                    witness = state_difference(
                        realization,
                        realization.apply(M_PLUS, alpha, alpha, state),
                        realization.apply(M_MINUS_INV, alpha, alpha, state),
                    )
                    if witness is not None:
                        witness["index"] = f"d{alpha}"
                        return witness
                return None

            return entry_outcome(realization, (M_PLUS, M_MINUS_INV), compare)

        def inverse(realization):
            return first_failure(
                tagged(
                    chain_outcome(
                        realization,
                        Chain.family(1, family, 1) @ Chain.family(1, inverse_family, 1),
                        Chain.identity(1),
                    ),
                    family=family,
                )
                for family, inverse_family in (
                    (M_PLUS, M_PLUS_INV),
                    (M_MINUS, M_MINUS_INV),
                )
            )

        reports = []
        for check_id, fn in (
            ("triangularity", triangularity),
            ("diagonal_commute", diagonal_commute),
            ("diagonal_product", diagonal_product),
            ("diagonal_inverse", diagonal_inverse),
            ("gauss_inverse", inverse),
        ):
            reports.extend(self.on_realizations(task, check_id, fn))
        return reports


@register_check("gauss_exchange")
class GaussExchangeCheck(_MonodromyCheck):
    """R̂ M+-_2 M+-_1 = M+-_2 M+-_1 R̂, M-^-1_2 R̂ M+_2 = M+_1 R̂ M-^-1_1 and the
    reflection equation R̂ M_2 R̂ M_2 = M_2 R̂ M_2 R̂."""

    def run(self, task) -> List[CheckReport]:
        rhat = task.rmatrices.rhat
        reports = []
        for check_id, lhs, rhs in exchange_relations(rhat):
            reports.extend(
                self.on_realizations(
                    task,
                    check_id,
                    lambda realization: chain_outcome(realization, lhs, rhs),
                )
            )
        lhs, rhs = reflection_relation(rhat)
        reports.extend(
            self.on_realizations(
                task,
                "reflection",
                lambda realization: chain_outcome(realization, lhs, rhs),
            )
        )
        return reports


@register_check("monodromy_determinants")
class MonodromyDeterminantCheck(_MonodromyCheck):
    """Quantum determinants of M_p a, a M, M+-, M+-^-1 and M, and the
    compatibility of M+- with the epsilon tensors and A_1n."""

    def run(self, task) -> List[CheckReport]:
        field = task.field
        n = field.n
        fock = task.fock
        module = fock.module
        rhat = task.rmatrices.rhat
        classical = task.eps(EpsVariant.DYNAMICAL_LOWER)
        lower = task.eps(EpsVariant.CONSTANT_LOWER)
        upper = task.eps(EpsVariant.CONSTANT_UPPER)

        def weight_product():
            def compare(state):
                image = state
                for i in range(1, n + 1):
                    image = module.apply_qp(i, -2, image)
                return state_difference(fock, image, state)

            return over_states(fock.test_states(), compare)

        def exponent_sums():
            first = n * (1 - Fraction(1, n)) - Fraction(2, n) * Fraction(n * (n - 1), 2)
            second = (
                n * (1 - Fraction(1, n))
                - 2 * n
                + Fraction(2, n) * Fraction(n * (n + 1), 2)
            )
            for label, value in (("M_p a", first), ("a M_p", second)):
                if value != 0:
                    return Outcome(
                        witness={"index": label, "lhs": str(value), "rhs": "0"}
                    )
            return Outcome()

        def per_family(families, build):
            def fn(realization):
                return first_failure(
                    tagged(build(realization, family), family=family)
                    for family in families
                )

            return fn

        def eps_left(realization, family):
            chain = reversed_product(n, family)

            def compare(state):
                for index in range(n ** n):
                    column = chain.evaluate(realization, {index: state})
                    witness = state_difference(
                        realization,
                        lower_contracted(realization, lower.vector, column),
                        state.scale(lower.vector.coefficient(index)),
                    )
                    if witness is not None:
                        witness["index"] = str(index)
                        return witness
                return None

            return entry_outcome(realization, (family,), compare)

        def eps_right(realization, family):
            chain = reversed_product(n, family)

            def compare(state):
                column = upper_contracted(upper.vector, state)
                return column_difference(
                    realization, n, chain.evaluate(realization, column), column
                )

            return entry_outcome(realization, (family,), compare)

        def antisym(realization, family):
            a1n = Chain.numeric(n, build_antisym(field, n, rhat).op, range(1, n + 1))
            chain = reversed_product(n, family)
            return chain_outcome(realization, a1n @ chain, chain @ a1n)

        reports = [
            self.verify(task, "detq_mp", weight_product),
            self.verify(task, "qsum", exponent_sums),
            self.verify(
                task,
                "detq_mp_a",
                lambda: contracted_outcome(
                    fock, interleaved(n, M_P, A), classical, upper, module.detq_a
                ),
            ),
            self.verify(
                task,
                "detq_a_m",
                lambda: contracted_outcome(
                    fock, interleaved(n, A, M), classical, upper, module.detq_a
                ),
            ),
        ]
        reports += self.on_realizations(
            task,
            "detq_mpm",
            per_family(
                (M_PLUS, M_MINUS),
                lambda realization, family: contracted_outcome(
                    realization, reversed_product(n, family), lower, upper, _unchanged
                ),
            ),
        )
        reports += self.on_realizations(
            task,
            "detq_mpm_inv",
            per_family(
                (M_PLUS_INV, M_MINUS_INV),
                lambda realization, family: contracted_outcome(
                    realization,
                    family_product(n, family, range(1, n + 1)),
                    lower,
                    upper,
                    _unchanged,
                ),
            ),
        )
        reports += self.on_realizations(
            task,
            "detq_m",
            lambda realization: contracted_outcome(
                realization, cycle(n, rhat) ** n, lower, upper, _unchanged
            ),
        )
        reports += self.on_realizations(
            task,
            "detq_mpm_eps",
            per_family(
                (M_PLUS, M_MINUS),
                lambda realization, family: first_failure(
                    [
                        tagged(eps_left(realization, family), side="left"),
                        tagged(eps_right(realization, family), side="right"),
                    ]
                ),
            ),
        )
        reports += self.on_realizations(
            task, "antisym_mpm", per_family((M_PLUS, M_MINUS), antisym)
        )
        return reports


@register_check("rearrangement")
class RearrangementCheck(_MonodromyCheck):
    """(R̂_1 ... R̂_{n-1} M_n)^n = q^(1 - n^2) (R̂_1 ... R̂_{n-1})^n
    M+_n ... M+_1 M-^-1_1 ... M-^-1_n."""

    def run(self, task) -> List[CheckReport]:
        field = task.field
        n = field.n
        rhat = task.rmatrices.rhat
        prefactor = field.one if task.corrupt == "mrn-prefactor" else field.q(1 - n * n)
        lhs = cycle(n, rhat) ** n
        rhs = (
            Chain.scalar(n, prefactor)
            @ rhat_product(n, rhat, 1, n - 1) ** n
            @ reversed_product(n, M_PLUS)
            @ family_product(n, M_MINUS_INV, range(1, n + 1))
        )
        return self.on_realizations(
            task,
            "rearrangement",
            lambda realization: chain_outcome(realization, lhs, rhs),
        )


@register_check("x_chain")
class XChainCheck(_MonodromyCheck):
    """The products X_j: their factorized form, X_1 = q^(n - 1/n) R̂_1 ...
    R̂_{n-1} M_n, the M+ / M-^-1 exchange inside X_j and X_1 X_j = X_{j+1}."""

    def run(self, task) -> List[CheckReport]:
        field = task.field
        n = field.n
        rhat = task.rmatrices.rhat

        def factorized(realization):
            return first_failure(
                tagged(
                    chain_outcome(
                        realization,
                        x_chain(n, rhat, j),
                        rhat_product(n, rhat, 1, n - 1) ** j
                        @ family_product(n, M_PLUS, range(n, n - j, -1))
                        @ family_product(n, M_MINUS_INV, range(n - j + 1, n + 1)),
                    ),
                    j=j,
                )
                for j in range(1, n + 1)
            )

        def first(realization):
            return chain_outcome(
                realization,
                x_chain(n, rhat, 1),
                Chain.scalar(n, field.qpow_rational(n - Fraction(1, n)))
                @ cycle(n, rhat),
            )

        def exchange(realization):
            def sides(i: int):
                lhs = Chain.family(n, M_MINUS_INV, i + 1) @ (
                    rhat_product(n, rhat, 1, i)
                    @ Chain.family(n, M_PLUS, i + 1)
                    @ rhat_product(n, rhat, i + 1, n - 1)
                )
                rhs = (
                    rhat_product(n, rhat, 1, i - 1)
                    @ Chain.family(n, M_PLUS, i)
                    @ rhat_product(n, rhat, i, n - 1)
                ) @ Chain.family(n, M_MINUS_INV, i)
                return lhs, rhs

            return first_failure(
                tagged(chain_outcome(realization, *sides(i)), i=i) for i in range(1, n)
            )

        def recursion(realization):
            x1 = x_chain(n, rhat, 1)
            return first_failure(
                tagged(
                    chain_outcome(
                        realization, x1 @ x_chain(n, rhat, j), x_chain(n, rhat, j + 1)
                    ),
                    j=j,
                )
                for j in range(1, n)
            )

        reports = []
        for check_id, fn in (
            ("x_factorized", factorized),
            ("x_one", first),
            ("rel_mm", exchange),
            ("x_recursion", recursion),
        ):
            reports.extend(self.on_realizations(task, check_id, fn))
        return reports
