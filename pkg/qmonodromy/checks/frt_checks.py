#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import logging
from typing import List

from qmonodromy.frt import FRT_VARIANTS, variant_failures
from qmonodromy.generic.errors import NoValidVariant

from . import register_check
from .check_report import CheckReport
from .verification_check import Outcome, VerificationCheck


@register_check("frt_variants")
class FrtVariantCheck(VerificationCheck):
    """Some choice of R-matrix cuts yields triangular M+- with matching
    diagonals and the exchange relations on one auxiliary site."""

    suite = "frt"

    def run(self, task) -> List[CheckReport]:
        def search(num_sites: int) -> Outcome:
            try:
                realization = task.frt(num_sites)
            except NoValidVariant as err:
                return Outcome(
                    witness={
                        "index": "passing variants",
                        "lhs": "0",
                        "rhs": f">= 1 of {len(FRT_VARIANTS)}",
                        "reason": str(err),
                    }
                )
            selection = {
                "selected": realization.construction.variant.name,
                "passing": realization.variant_names,
                "unique": len(realization.variant_names) == 1,
            }
            logging.info(f"FRT on {num_sites} site(s): {selection}")
            return Outcome(value=selection)

        return [
            self.verify(task, "frt_variants", lambda: search(m), params={"sites": m})
            for m in task.frt_sites
        ]


@register_check("frt_defining_relations")
class FrtRelationCheck(VerificationCheck):
    """The coproduct of the selected variant on several sites still satisfies
    the exchange relations, triangularity and the diagonal conditions."""

    suite = "frt"

    def run(self, task) -> List[CheckReport]:
        def relations(num_sites: int) -> Outcome:
            try:
                realization = task.frt(num_sites)
            except NoValidVariant as err:
                return Outcome(checked=0, skip_reason=str(err))
            failures = variant_failures(
                task.field, realization.construction.families, num_sites
            )
            if failures:
                return Outcome(
                    witness={
                        "index": realization.construction.variant.name,
                        "lhs": ", ".join(failures),
                        "rhs": "none",
                    }
                )
            return Outcome()

        return [
            self.verify(
                task,
                "frt_defining_relations",
                lambda: relations(m),
                params={"sites": m},
            )
            for m in task.frt_sites
        ]
