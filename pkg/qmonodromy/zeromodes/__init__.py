#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from qmonodromy.weight import Weight

from .fock_module import FockModule, WeightSpectrum, weight_spectrum
from .words import (
    ExchangeRules,
    Letter,
    Word,
    canonical_words,
    format_word,
    is_canonical,
    is_ordered,
    word_counts,
    word_weight,
)


__all__ = [
    "ExchangeRules",
    "FockModule",
    "Letter",
    "Weight",
    "WeightSpectrum",
    "Word",
    "canonical_words",
    "format_word",
    "is_canonical",
    "is_ordered",
    "weight_spectrum",
    "word_counts",
    "word_weight",
]
