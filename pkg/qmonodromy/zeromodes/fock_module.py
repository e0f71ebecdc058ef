#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from qmonodromy.epsilon import EpsVariant, build_eps
from qmonodromy.field import ExactField, Scalar
from qmonodromy.generic.errors import (
    InconsistentModule,
    NonGenericWeight,
    SingularWeight,
)
from qmonodromy.tensor import SparseVector
from qmonodromy.weight import Weight

from .words import (
    ExchangeRules,
    Letter,
    Word,
    canonical_words,
    format_word,
    is_ordered,
    word_counts,
    word_weight,
)


@dataclass
class WeightSpectrum:
    weight: Weight
    dynkin_labels: Tuple[int, ...]
    integrable: bool


def weight_spectrum(word: Sequence[Letter], n: int, k: int) -> WeightSpectrum:
    """Shifted weight of a monomial, its Dynkin labels p_{j j+1} - 1 and the
    integrability predicate for level k."""
    weight = word_weight(word, n)
    return WeightSpectrum(
        weight=weight,
        dynkin_labels=weight.dynkin_labels(),
        integrable=weight.is_integrable(k),
    )


class _Sector:
    """Fully reduced relations among the words of one letter-count sector.

    Every relation is stored under its largest word (the pivot) with
    coefficient 1, and no relation contains another relation's pivot.
    """

    def __init__(self) -> None:
        self.pivots: Dict[Word, SparseVector] = {}

    def reduce(self, vector: SparseVector) -> SparseVector:
        result = vector
        for word in [w for w in vector.keys() if w in self.pivots]:
            result = result - self.pivots[word].scale(vector.coefficient(word))
        return result

    def add_relation(self, vector: SparseVector) -> None:
        vector = self.reduce(vector)
        if vector.is_zero():
            return
        pivot = max(vector.keys())
        vector = vector.scale(1 / vector.coefficient(pivot))
        for word, relation in list(self.pivots.items()):
            coefficient = relation.coefficient(pivot)
            if not coefficient.is_zero():
                self.pivots[word] = relation - vector.scale(coefficient)
        self.pivots[pivot] = vector


class FockModule:
    """The zero-mode module generated from the vacuum.

    States are :class:`SparseVector` objects keyed by canonical words (see
    :func:`qmonodromy.zeromodes.words.is_ordered`). The module is the span of
    canonical words modulo

    * the left ideal generated by the a^i_alpha with i >= 2, which annihilate
      the vacuum,
    * the left submodule generated by (det_q(a) - D_q(p_0)) |0>, which
      identifies a sector with one more box in every row with the sector
      below it. Only the vacuum value is imposed, so det_q(a) = D_q(p) on
      other states is a property to verify.

    Inside each letter-count sector the quotient is computed by exact
    elimination; the surviving (standard) words form the basis. States
    returned by :func:`apply_a`, :func:`detq_a` and friends are always in
    normal form, i.e. combinations of standard words of sectors in which at
    least one row is empty.
    """

    def __init__(self, field: ExactField) -> None:
        self.field = field
        self.n = field.n
        self.rules = ExchangeRules(field)
        self.letters: List[Letter] = [
            (row, alpha)
            for row in range(1, self.n + 1)
            for alpha in range(1, self.n + 1)
        ]
        self._eps_lower = build_eps(field, EpsVariant.DYNAMICAL_LOWER)
        self._eps_upper = build_eps(field, EpsVariant.CONSTANT_UPPER)
        self._insert_cache: Dict[Tuple[Letter, Word], SparseVector] = {}
        self._raw_cache: Dict[Tuple[Letter, Word], SparseVector] = {}
        self._apply_cache: Dict[Tuple[Letter, Word], SparseVector] = {}
        self._sectors: Dict[Tuple[int, ...], _Sector] = {}
        self._preimages: Dict[Tuple[int, ...], Dict[Word, SparseVector]] = {}
        self._normal_forms: Dict[Word, SparseVector] = {}
        self._dressed: Dict[Word, SparseVector] = {}

    # states

    def vacuum(self) -> SparseVector:
        return SparseVector.basis(self.field, ())

    def basis(self, word: Word) -> SparseVector:
        return SparseVector.basis(self.field, word)

    def weight_of(self, word: Word) -> Weight:
        return word_weight(word, self.n)

    def format_state(self, state: SparseVector) -> str:
        if state.is_zero():
            return "0"
        return " + ".join(
            f"({value})*{format_word(word)}" for word, value in sorted(state.items())
        )

    # normal ordering in the free span of canonical words

    def insert(self, letter: Letter, word: Word) -> SparseVector:
        """Canonical form of letter * word for a canonical word, resolving the
        leftmost out-of-order pair first."""
        key = (letter, word)
        cached = self._insert_cache.get(key)
        if cached is not None:
            return cached
        if not word or is_ordered(letter, word[0]):
            result = self.basis((letter,) + word)
        else:
            rest = word[1:]
            counts = word_counts(rest, self.n)
            terms = []
            for coefficient, left, right in self.rules.rewrite(letter, word[0], counts):
                for inner, inner_value in self.insert(right, rest).items():
                    for outer, outer_value in self.insert(left, inner).items():
                        terms.append((outer, coefficient * inner_value * outer_value))
            result = SparseVector.from_terms(self.field, terms)
        self._insert_cache[key] = result
        return result

    def _insert_all(self, letter: Letter, state: SparseVector) -> SparseVector:
        return SparseVector.from_terms(
            self.field,
            (
                (word, value * image_value)
                for source, value in state.items()
                for word, image_value in self.insert(letter, source).items()
            ),
        )

    def canonicalize(self, word: Sequence[Letter]) -> SparseVector:
        state = self.vacuum()
        for letter in reversed(tuple(word)):
            state = self._insert_all(letter, state)
        return state

    def rewrite_word(self, word: Word, rightmost: bool = False) -> SparseVector:
        """Normal ordering by repeatedly rewriting the leftmost (or rightmost)
        out-of-order adjacent pair, without memoization."""
        done = []
        pending = self.basis(word)
        while not pending.is_zero():
            terms = []
            for current, value in pending.items():
                positions = [
                    t
                    for t in range(len(current) - 1)
                    if not is_ordered(current[t], current[t + 1])
                ]
                if not positions:
                    done.append((current, value))
                    continue
                t = positions[-1] if rightmost else positions[0]
                suffix = word_counts(current[t + 2 :], self.n)
                for coefficient, left, right in self.rules.rewrite(
                    current[t], current[t + 1], suffix
                ):
                    rewritten = current[:t] + (left, right) + current[t + 2 :]
                    terms.append((rewritten, value * coefficient))
            pending = SparseVector.from_terms(self.field, terms)
        return SparseVector.from_terms(self.field, done)

    # quotient by the left ideal

    def _drop_ideal(self, state: SparseVector) -> SparseVector:
        return SparseVector(
            self.field,
            {
                word: value
                for word, value in state.items()
                if not word or word[-1][0] == 1
            },
        )

    def sector(self, counts: Tuple[int, ...]) -> _Sector:
        if counts in self._sectors:
            return self._sectors[counts]
        sector = _Sector()
        for row in range(2, self.n + 1):
            if counts[row - 1] == 0:
                continue
            smaller = tuple(c - (1 if r == row else 0) for r, c in enumerate(counts, 1))
            for prefix in canonical_words(smaller):
                for alpha in range(1, self.n + 1):
                    relation = self.canonicalize(prefix + ((row, alpha),))
                    sector.add_relation(self._drop_ideal(relation))
        logging.debug(f"Sector {counts}: {len(sector.pivots)} relations")
        self._sectors[counts] = sector
        return sector

    def standard_words(self, counts: Tuple[int, ...]) -> List[Word]:
        pivots = self.sector(counts).pivots
        return [
            word
            for word in canonical_words(counts)
            if (not word or word[-1][0] == 1) and word not in pivots
        ]

    def project(self, state: SparseVector) -> SparseVector:
        """Image of a combination of canonical words in the quotient by the
        left ideal, written in standard words."""
        by_sector: Dict[Tuple[int, ...], Dict[Word, Scalar]] = {}
        for word, value in self._drop_ideal(state).items():
            by_sector.setdefault(word_counts(word, self.n), {})[word] = value
        result = SparseVector.zero(self.field)
        for counts, terms in sorted(by_sector.items()):
            result = result + self.sector(counts).reduce(
                SparseVector(self.field, terms)
            )
        return result

    def apply_raw(self, letter: Letter, state: SparseVector) -> SparseVector:
        """Action of a zero mode before the determinant identification."""
        terms = []
        for word, value in state.items():
            key = (letter, word)
            image = self._raw_cache.get(key)
            if image is None:
                image = self.project(self.insert(letter, word))
                self._raw_cache[key] = image
            terms.extend(
                (target, value * coefficient) for target, coefficient in image.items()
            )
        return SparseVector.from_terms(self.field, terms)

    def detq_raw(self, state: SparseVector) -> SparseVector:
        """(1/[n]!) eps_{i...} a^{i_1}_{alpha_1} ... a^{i_n}_{alpha_n} eps^{alpha...}
        before the determinant identification."""
        n = self.n
        partial: Dict[Tuple[Letter, ...], SparseVector] = {(): state}

        def product(letters: Tuple[Letter, ...]) -> SparseVector:
            if letters not in partial:
                partial[letters] = self.apply_raw(letters[0], product(letters[1:]))
            return partial[letters]

        result = SparseVector.zero(self.field)
        for rows in itertools.permutations(range(1, n + 1)):
            row_sign = self._eps_lower.component(rows)
            for alphas in itertools.permutations(range(1, n + 1)):
                coefficient = row_sign * self._eps_upper.component(alphas)
                result = result + product(tuple(zip(rows, alphas))).scale(coefficient)
        return result.scale(1 / self.field.qfact(n))

    # determinant identification

    def _dressed_vacuum(self, word: Word) -> SparseVector:
        """word * det_q(a) |0> before the determinant identification."""
        cached = self._dressed.get(word)
        if cached is not None:
            return cached
        if not word:
            result = self.detq_raw(self.vacuum())
        else:
            result = self.apply_raw(word[0], self._dressed_vacuum(word[1:]))
        self._dressed[word] = result
        return result

    def _preimage_map(self, counts: Tuple[int, ...]) -> Dict[Word, SparseVector]:
        """For every standard word w of a sector with no empty row, a state x
        one box lower in every row with w = x det_q(a) |0>, scaled by D_q(p_0).

        Only det_q(a) |0> = D_q(p_0) |0> is imposed; every other sector follows
        from it through the left action of the zero modes.
        """
        if counts in self._preimages:
            return self._preimages[counts]
        lower = tuple(c - 1 for c in counts)
        dq = Weight.vacuum(self.n).dq(self.field)
        if dq.is_zero():
            raise SingularWeight("D_q(p) vanishes at the vacuum")
        rows: Dict[Word, Tuple[SparseVector, SparseVector]] = {}
        for word in self.standard_words(lower):
            image = self._dressed_vacuum(word)
            source = self.basis(word)
            for pivot in [w for w in image.keys() if w in rows]:
                coefficient = image.coefficient(pivot)
                image = image - rows[pivot][0].scale(coefficient)
                source = source - rows[pivot][1].scale(coefficient)
            if image.is_zero():
                raise InconsistentModule(
                    f"x det_q(a) |0> vanishes for a state x of sector {lower}"
                )
            pivot = max(image.keys())
            inverse = 1 / image.coefficient(pivot)
            image = image.scale(inverse)
            source = source.scale(inverse)
            for other, (other_image, other_source) in list(rows.items()):
                coefficient = other_image.coefficient(pivot)
                if not coefficient.is_zero():
                    rows[other] = (
                        other_image - image.scale(coefficient),
                        other_source - source.scale(coefficient),
                    )
            rows[pivot] = (image, source)
        targets = self.standard_words(counts)
        if set(rows) != set(targets):
            raise InconsistentModule(
                f"det_q(a) |0> does not generate sector {counts} from {lower}"
            )
        preimages = {word: rows[word][1].scale(dq) for word in targets}
        logging.debug(f"Determinant pullback {counts} -> {lower}: {len(targets)} words")
        self._preimages[counts] = preimages
        return preimages

    def normal_form(self, word: Word) -> SparseVector:
        cached = self._normal_forms.get(word)
        if cached is not None:
            return cached
        counts = word_counts(word, self.n)
        if min(counts) == 0:
            result = self.basis(word)
        else:
            result = SparseVector.zero(self.field)
            for source, value in self._preimage_map(counts)[word].items():
                result = result + self.normal_form(source).scale(value)
        self._normal_forms[word] = result
        return result

    def normalize(self, state: SparseVector) -> SparseVector:
        result = SparseVector.zero(self.field)
        for word, value in state.items():
            result = result + self.normal_form(word).scale(value)
        return result

    # module operations

    def apply_a(self, row: int, alpha: int, state: SparseVector) -> SparseVector:
        """a^row_alpha acting on a state in normal form.

        Raises NonGenericWeight when normal ordering needs a vanishing
        divisor [p_ij - 1].
        """
        assert 1 <= row <= self.n and 1 <= alpha <= self.n, "zero mode out of range"
        letter = (row, alpha)
        result = SparseVector.zero(self.field)
        for word, value in state.items():
            key = (letter, word)
            image = self._apply_cache.get(key)
            if image is None:
                image = self.normalize(self.apply_raw(letter, self.basis(word)))
                self._apply_cache[key] = image
            result = result + image.scale(value)
        return result

    def apply_qp(self, j: int, sign: int, state: SparseVector) -> SparseVector:
        """q^(sign p_j), diagonal on words."""
        return SparseVector(
            self.field,
            {
                word: value * self.weight_of(word).qpow(self.field, j, sign)
                for word, value in state.items()
            },
        )

    def detq_a(self, state: SparseVector) -> SparseVector:
        return self.normalize(self.detq_raw(state))

    def dq(self, state: SparseVector) -> SparseVector:
        """Multiplication by D_q(p), diagonal on words."""
        return SparseVector(
            self.field,
            {
                word: value * self.weight_of(word).dq(self.field)
                for word, value in state.items()
            },
        )

    # corpus

    def in_alcove(self, word: Word) -> bool:
        """At a root of unity: 0 < p_ij < h for i < j on every suffix."""
        h = getattr(self.field, "h", None)
        if h is None:
            return True
        for t in range(len(word) + 1):
            counts = word_counts(word[t:], self.n)
            for i in range(1, self.n + 1):
                for j in range(i + 1, self.n + 1):
                    p_ij = self.rules.suffix_diff(counts, i, j)
                    if not 0 < p_ij < h:
                        return False
        return True

    def corpus(self, max_word_len: int) -> List[Word]:
        """Standard words of length at most max_word_len reachable from the
        vacuum, shortest first."""
        seen = {()}
        queue = deque([()])
        while queue:
            word = queue.popleft()
            if len(word) >= max_word_len:
                continue
            for row, alpha in self.letters:
                try:
                    image = self.apply_a(row, alpha, self.basis(word))
                except (NonGenericWeight, SingularWeight) as err:
                    logging.debug(
                        f"Corpus skips a{row}_{alpha} {format_word(word)}: {err}"
                    )
                    continue
                for target in image.keys():
                    if (
                        target not in seen
                        and len(target) <= max_word_len
                        and self.in_alcove(target)
                    ):
                        seen.add(target)
                        queue.append(target)
        return sorted(seen, key=lambda w: (len(w), w))

    def confluence_witness(
        self, word: Word
    ) -> Optional[Tuple[Word, Scalar, Scalar]]:
        """Compares leftmost-first and rightmost-first normal ordering of a
        word in the span of canonical words, before any quotient."""
        leftmost = self.rewrite_word(word, rightmost=False)
        rightmost = self.rewrite_word(word, rightmost=True)
        return leftmost.first_difference(rightmost)
