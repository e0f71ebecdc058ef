#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import itertools
from fractions import Fraction
from typing import Iterator, List

from qmonodromy.epsilon import EpsVariant
from qmonodromy.generic.errors import SingularWeight
from qmonodromy.monodromy import (
    A,
    Chain,
    column_difference,
    compare_on_columns,
    family_product,
    lower_contracted,
    upper_contracted,
)
from qmonodromy.rmatrix import build_rhat_dyn
from qmonodromy.tensor import SparseVector
from qmonodromy.weight import Weight
from qmonodromy.zeromodes import (
    FockModule,
    Word,
    format_word,
    is_ordered,
    weight_spectrum,
    word_counts,
)

from . import register_check
from .check_report import CheckReport
from .verification_check import (
    Outcome,
    VerificationCheck,
    first_failure,
    over_states,
    tagged,
    vector_witness,
)


def _det_ratio(module: FockModule, state: SparseVector) -> SparseVector:
    """det_q(a) / D_q(p) on a state."""
    return SparseVector(
        module.field,
        {
            word: value / module.weight_of(word).dq(module.field)
            for word, value in module.detq_a(state).items()
        },
    )


def _nonsingular_dq(module: FockModule, word: Word) -> None:
    weight = module.weight_of(word)
    if weight.dq(module.field).is_zero():
        raise SingularWeight(f"D_q(p) vanishes at p = {weight}")


@register_check("zero_mode_exchange")
class ExchangeRelationCheck(VerificationCheck):
    """The quadratic relations of the zero modes on every test state, both in
    R-matrix form R̂(p)_12 a_1 a_2 = a_1 a_2 R̂_12 and componentwise."""

    suite = "zeromodes"

    def run(self, task) -> List[CheckReport]:
        field = task.field
        module = task.module
        fock = task.fock
        words = task.zero_mode_words

        def rmatrix_form():
            lhs = (
                Chain.weighted(2, lambda weight: build_rhat_dyn(field, weight), (1, 2))
                @ family_product(2, A, (1, 2))
            )
            rhs = family_product(2, A, (1, 2)) @ Chain.rhat(2, task.rmatrices.rhat, 1)
            return over_states(
                [module.basis(word) for word in words],
                lambda state: compare_on_columns(fock, lhs, rhs, state),
            )

        def componentwise():
            def compare(word: Word):
                state = module.basis(word)
                counts = word_counts(word, field.n)
                for left, right in itertools.product(module.letters, repeat=2):
                    if is_ordered(left, right):
                        continue
                    lhs = module.apply_a(*left, module.apply_a(*right, state))
                    rhs = SparseVector.zero(field)
                    for coefficient, new_left, new_right in module.rules.rewrite(
                        left, right, counts
                    ):
                        rhs = rhs + module.apply_a(
                            *new_left, module.apply_a(*new_right, state)
                        ).scale(coefficient)
                    witness = vector_witness(lhs, rhs, format_word)
                    if witness is not None:
                        witness["state"] = format_word(word)
                        witness["pair"] = f"a{left[0]}_{left[1]} a{right[0]}_{right[1]}"
                        return witness
                return None

            return over_states(words, compare)

        return [
            self.verify(
                task,
                "exchange_rmatrix",
                rmatrix_form,
                params={"max_word_len": task.max_word_len},
            ),
            self.verify(
                task,
                "exchange_quadratic",
                componentwise,
                params={"max_word_len": task.max_word_len},
            ),
        ]


@register_check("weight_operators")
class WeightOperatorCheck(VerificationCheck):
    """q^(p_j) a^i_alpha = q^(delta_ij - 1/n) a^i_alpha q^(p_j), prod_j q^(p_j) = 1,
    and the vacuum relation a^i_alpha q^(-2 p_i) |0> = q^(1-n) a^i_alpha |0>."""

    suite = "zeromodes"

    def run(self, task) -> List[CheckReport]:
        field = task.field
        n = field.n
        module = task.module
        words = task.zero_mode_words
        states = [module.basis(word) for word in words]

        def exchange():
            def compare(state):
                letters = itertools.product(module.letters, range(1, n + 1))
                for (row, alpha), j in letters:
                    shift = field.qpow_rational(
                        (1 if row == j else 0) - Fraction(1, n)
                    )
                    lhs = module.apply_qp(j, 1, module.apply_a(row, alpha, state))
                    rhs = module.apply_a(row, alpha, module.apply_qp(j, 1, state))
                    rhs = rhs.scale(shift)
                    witness = vector_witness(lhs, rhs, format_word)
                    if witness is not None:
                        witness["operator"] = f"q^p{j} a{row}_{alpha}"
                        return witness
                return None

            return over_states(states, compare)

        def product():
            def compare(state):
                image = state
                for j in range(1, n + 1):
                    image = module.apply_qp(j, 1, image)
                return vector_witness(image, state, format_word)

            return over_states(states, compare)

        def vacuum_relation():
            vacuum = module.vacuum()
            factor = field.q(1 - n)

            def outcomes():
                for row, alpha in module.letters:
                    lhs = module.apply_a(row, alpha, module.apply_qp(row, -2, vacuum))
                    rhs = module.apply_a(row, alpha, vacuum).scale(factor)
                    yield tagged(
                        Outcome(witness=vector_witness(lhs, rhs, format_word)),
                        letter=f"a{row}_{alpha}",
                    )

            return first_failure(outcomes())

        return [
            self.verify(task, "qp_exchange", exchange),
            self.verify(task, "qp_product", product),
            self.verify(task, "vacuum_relation", vacuum_relation),
        ]


@register_check("vacuum_zero_modes")
class VacuumZeroModeCheck(VerificationCheck):
    """The vacuum has the barycentric weight (n+1)/2 - i and is annihilated
    by the zero modes of rows 2..n."""

    suite = "zeromodes"

    def run(self, task) -> List[CheckReport]:
        module = task.module
        n = task.field.n

        def weight():
            actual = module.weight_of(())
            expected = Weight.vacuum(n)
            if actual == expected and all(
                label == 0 for label in actual.dynkin_labels()
            ):
                return Outcome()
            return Outcome(
                witness={"index": "p", "lhs": str(actual), "rhs": str(expected)}
            )

        def annihilation():
            vacuum = module.vacuum()
            for row in range(2, n + 1):
                for alpha in range(1, n + 1):
                    image = module.apply_a(row, alpha, vacuum)
                    if not image.is_zero():
                        return Outcome(
                            witness={
                                "index": f"a{row}_{alpha} |0>",
                                "lhs": module.format_state(image),
                                "rhs": "0",
                            }
                        )
            return Outcome()

        return [
            self.verify(task, "vacuum_weight", weight),
            self.verify(task, "vacuum_annihilation", annihilation),
        ]


@register_check("determinant")
class DeterminantCheck(VerificationCheck):
    """det_q(a) s = D_q(p) s on the test states, weight preservation of
    det_q(a), and its vacuum value D_q(p_0).

    The module imposes only the vacuum value, so on excited states the first
    identity follows from the exchange relations and is not built in.
    """

    suite = "zeromodes"

    def run(self, task) -> List[CheckReport]:
        field = task.field
        module = task.module
        words = task.zero_mode_words

        def vacuum_value():
            vacuum = module.vacuum()
            expected = Weight.vacuum(field.n).dq(field)
            return Outcome(
                witness=vector_witness(
                    module.detq_a(vacuum), vacuum.scale(expected), format_word
                ),
                value=expected,
            )

        def dq_realized():
            return over_states(
                words,
                lambda word: vector_witness(
                    module.detq_a(module.basis(word)),
                    module.dq(module.basis(word)),
                    format_word,
                ),
            )

        def weight_preserved():
            def compare(word: Word):
                expected = module.weight_of(word)
                for target in module.detq_a(module.basis(word)).keys():
                    if module.weight_of(target) != expected:
                        return {
                            "index": format_word(word),
                            "lhs": str(module.weight_of(target)),
                            "rhs": str(expected),
                        }
                return None

            return over_states(words, compare)

        return [
            self.verify(task, "detq_vacuum", vacuum_value),
            self.verify(task, "detq_equals_dq", dq_realized),
            self.verify(task, "detq_weight", weight_preserved),
        ]


@register_check("intertwining")
class IntertwiningCheck(VerificationCheck):
    """eps_{i...}(p) a^i1_a1 ... a^in_an = det_q(a) eps_{a...} and
    a^i1_a1 ... a^in_an eps^{a...} = eps^{i...}(p) det_q(a) on the test states."""

    suite = "zeromodes"

    def run(self, task) -> List[CheckReport]:
        field = task.field
        n = field.n
        module = task.module
        fock = task.fock
        words = task.zero_mode_words
        chain = family_product(n, A, range(1, n + 1))
        dynamical_lower = task.eps(EpsVariant.DYNAMICAL_LOWER)
        constant_lower = task.eps(EpsVariant.CONSTANT_LOWER)
        constant_upper = task.eps(EpsVariant.CONSTANT_UPPER)

        def lower_relation():
            def compare(word: Word):
                state = module.basis(word)
                det = module.detq_a(state)
                for index in range(n ** n):
                    column = chain.evaluate(fock, {index: state})
                    lhs = lower_contracted(fock, dynamical_lower.vector, column)
                    rhs = det.scale(constant_lower.vector.coefficient(index))
                    witness = vector_witness(lhs, rhs, format_word)
                    if witness is not None:
                        witness["state"] = format_word(word)
                        witness["column"] = str(index)
                        return witness
                return None

            return over_states(words, compare)

        def upper_relation():
            def compare(word: Word):
                state = module.basis(word)
                dynamical_upper = task.eps(
                    EpsVariant.DYNAMICAL_UPPER, module.weight_of(word)
                )
                lhs = chain.evaluate(
                    fock, upper_contracted(constant_upper.vector, state)
                )
                det = module.detq_a(state)
                rhs = {
                    index: det.scale(value)
                    for index, value in dynamical_upper.vector.items()
                    if not det.is_zero()
                }
                witness = column_difference(fock, n, lhs, rhs)
                if witness is not None:
                    witness["state"] = format_word(word)
                return witness

            return over_states(words, compare)

        return [
            self.verify(task, "intertwining_lower", lower_relation),
            self.verify(task, "intertwining_upper", upper_relation),
        ]


@register_check("centrality")
class CentralityCheck(VerificationCheck):
    """[q^(p_i), det_q(a)] = 0 and [det_q(a) / D_q(p), a^i_alpha] = 0."""

    suite = "zeromodes"

    def run(self, task) -> List[CheckReport]:
        n = task.field.n
        module = task.module
        words = task.zero_mode_words

        def weight_commutator():
            def compare(word: Word):
                state = module.basis(word)
                for i in range(1, n + 1):
                    witness = vector_witness(
                        module.apply_qp(i, 1, module.detq_a(state)),
                        module.detq_a(module.apply_qp(i, 1, state)),
                        format_word,
                    )
                    if witness is not None:
                        witness["state"] = format_word(word)
                        return witness
                return None

            return over_states(words, compare)

        def zero_mode_commutator():
            def compare(word: Word):
                _nonsingular_dq(module, word)
                state = module.basis(word)
                ratio = _det_ratio(module, state)
                for row, alpha in module.letters:
                    shifted = module.apply_a(row, alpha, state)
                    for target in shifted.keys():
                        _nonsingular_dq(module, target)
                    witness = vector_witness(
                        _det_ratio(module, shifted),
                        module.apply_a(row, alpha, ratio),
                        format_word,
                    )
                    if witness is not None:
                        witness["state"] = format_word(word)
                        witness["letter"] = f"a{row}_{alpha}"
                        return witness
                return None

            return over_states(words, compare)

        return [
            self.verify(task, "centrality_weight", weight_commutator),
            self.verify(task, "centrality_zero_modes", zero_mode_commutator),
        ]


@register_check("weight_spectrum")
class WeightSpectrumCheck(VerificationCheck):
    """Every zero mode a^i shifts the weight by a box in row i, p_ij are
    integers on the test states, and D_q(p) does not vanish on integrable
    weights of level k."""

    suite = "zeromodes"

    def run(self, task) -> List[CheckReport]:
        field = task.field
        n = field.n
        module = task.module
        words = task.zero_mode_words
        level = task.level

        def grading():
            def compare(word: Word):
                weight = module.weight_of(word)
                for i, j in itertools.combinations(range(n), 2):
                    if (weight.p[i] - weight.p[j]).denominator != 1:
                        return {
                            "index": f"p_{i + 1}{j + 1} {format_word(word)}",
                            "lhs": str(weight.p[i] - weight.p[j]),
                            "rhs": "integer",
                        }
                for row, alpha in module.letters:
                    expected = weight.shifted(row)
                    for target in module.apply_a(row, alpha, module.basis(word)).keys():
                        if module.weight_of(target) != expected:
                            return {
                                "index": f"a{row}_{alpha} {format_word(word)}",
                                "lhs": str(module.weight_of(target)),
                                "rhs": str(expected),
                            }
                return None

            return over_states(words, compare)

        def integrable():
            def compare(word: Word):
                spectrum = weight_spectrum(word, n, level)
                if spectrum.integrable and spectrum.weight.dq(field).is_zero():
                    return {
                        "index": f"D_q(p) at {format_word(word)}",
                        "lhs": "0",
                        "rhs": "nonzero",
                    }
                return None

            return over_states(words, compare)

        return [
            self.verify(task, "weight_grading", grading),
            self.verify(
                task, "integrable_dq_nonzero", integrable, params={"level": level}
            ),
        ]


def confluence_words(n: int) -> Iterator[Word]:
    """Length three words whose rows are pairwise distinct, or merely not
    all equal when n = 2."""
    letters = [(row, alpha) for row in range(1, n + 1) for alpha in range(1, n + 1)]
    for word in itertools.product(letters, repeat=3):
        rows = {row for row, _ in word}
        if (n >= 3 and len(rows) == 3) or (n == 2 and len(rows) > 1):
            yield word


@register_check("confluence")
class ConfluenceCheck(VerificationCheck):
    """Normal ordering leftmost-first and rightmost-first agree on length
    three words, before dropping the zero modes that annihilate the vacuum."""

    suite = "zeromodes"

    def run(self, task) -> List[CheckReport]:
        module = task.module

        def compare(word: Word):
            difference = module.confluence_witness(word)
            if difference is None:
                return None
            key, left, right = difference
            return {
                "index": format_word(word),
                "state": format_word(key),
                "lhs": str(left),
                "rhs": str(right),
            }

        return [
            self.verify(
                task,
                "confluence",
                lambda: over_states(confluence_words(task.field.n), compare),
            )
        ]
