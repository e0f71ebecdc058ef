#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Any, Dict, Optional

from qmonodromy.field import ExactField
from qmonodromy.frt import FrtConstruction, build_frt
from qmonodromy.monodromy import OperatorMatrixRealization

from . import register_realization


@register_realization("frt")
class FrtRealization(OperatorMatrixRealization):
    """M+-, their inverses and M as operator matrices on W = V^(x m).

    Zero modes and M_p have no counterpart here, so only identities between
    R-matrices and the monodromy families can be checked on it.
    """

    def __init__(
        self,
        field: ExactField,
        num_sites: int = 2,
        corrupt: Optional[str] = None,
    ) -> None:
        construction: FrtConstruction = build_frt(field, num_sites, corrupt)
        super().__init__(field, num_sites, construction.families)
        self.construction = construction

    @classmethod
    def from_config(cls, config: Dict[str, Any], field: ExactField) -> "FrtRealization":
        return cls(
            field,
            num_sites=config.get("num_sites", 2),
            corrupt=config.get("corrupt"),
        )

    @property
    def variant_names(self):
        return [variant.name for variant in self.construction.passing_variants]
