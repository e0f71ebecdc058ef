#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Union

from qmonodromy.field import Scalar
from qmonodromy.generic.errors import NonGenericWeight, SingularWeight
from qmonodromy.generic.perf_stats import PerfTimer
from qmonodromy.tensor import SiteOperator, SparseVector

from .check_report import FAIL, PASS, SKIPPED, CheckReport


Witness = Dict[str, str]


@dataclass
class Outcome:
    """What a single comparison established before it becomes a report."""

    witness: Optional[Witness] = None
    checked: int = 1
    skip_reason: Optional[str] = None
    # an exact scalar, or a plain record such as a variant selection
    value: Optional[Union[Scalar, Dict[str, Any]]] = None


def over_states(
    states: Iterable[Any], compare: Callable[[Any], Optional[Witness]]
) -> Outcome:
    """Runs compare on every test state until the first witness.

    States at which a bracket vanishes are skipped; the outcome is skipped
    altogether if no state survives.
    """
    checked = 0
    reason = None
    for state in states:
        try:
            witness = compare(state)
        except (SingularWeight, NonGenericWeight) as err:
            reason = f"{type(err).__name__}: {err}"
            continue
        checked += 1
        if witness is not None:
            return Outcome(witness=witness, checked=checked, skip_reason=reason)
    return Outcome(checked=checked, skip_reason=reason or "no test states")


def first_failure(outcomes: Iterable[Outcome]) -> Outcome:
    """Combines the outcomes of several instances of one identity, stopping
    at the first failure. Pass a generator to skip the remaining work."""
    checked = 0
    reason = None
    for outcome in outcomes:
        if outcome.witness is not None:
            return outcome
        checked += outcome.checked
        reason = reason or outcome.skip_reason
    return Outcome(checked=checked, skip_reason=reason or "nothing to compare")


def tagged(outcome: Outcome, **tags: Any) -> Outcome:
    """Adds the instance parameters to a witness."""
    if outcome.witness is not None:
        outcome.witness.update({key: str(value) for key, value in tags.items()})
    return outcome


def operator_outcome(lhs: SiteOperator, rhs: SiteOperator, **tags: Any) -> Outcome:
    return tagged(Outcome(witness=operator_witness(lhs, rhs)), **tags)


def operator_witness(lhs: SiteOperator, rhs: SiteOperator) -> Optional[Witness]:
    difference = lhs.first_difference(rhs)
    if difference is None:
        return None
    upper, lower, left, right = difference
    return {"index": f"{upper}{lower}", "lhs": str(left), "rhs": str(right)}


def vector_witness(
    lhs: SparseVector, rhs: SparseVector, format_key: Callable = str
) -> Optional[Witness]:
    difference = lhs.first_difference(rhs)
    if difference is None:
        return None
    key, left, right = difference
    return {"index": format_key(key), "lhs": str(left), "rhs": str(right)}


def scalar_witness(lhs: Scalar, rhs: Scalar, label: str) -> Optional[Witness]:
    if lhs == rhs:
        return None
    return {"index": label, "lhs": str(lhs), "rhs": str(rhs)}


def _serialized(value: Optional[Union[Scalar, Dict[str, Any]]]):
    if isinstance(value, Scalar):
        return value.to_dict()
    return value


class VerificationCheck(ABC):
    """Base class for verification checks.

    A check verifies one family of identities and returns a
    :class:`CheckReport` per identity. Every check belongs to a suite; the
    task runs the suites as phases in the order they were requested.
    """

    suite: str = ""

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "VerificationCheck":
        return cls(**config)

    @classmethod
    def name(cls) -> str:
        return cls.__name__

    @abstractmethod
    def run(self, task) -> List[CheckReport]:
        """Verifies the identities on the objects built by the task."""
        pass

    def verify(
        self,
        task,
        check_id: str,
        fn: Callable[[], Outcome],
        params: Optional[Dict[str, Any]] = None,
        count_as: Optional[str] = None,
    ) -> CheckReport:
        """Times fn and turns its outcome into a report.

        With count_as, the number of instances actually compared is recorded
        under that parameter name.
        """
        merged = dict(task.base_params())
        merged.update(params or {})
        with PerfTimer(check_id, task.perf_stats) as timer:
            outcome = fn()
        if count_as is not None:
            merged[count_as] = outcome.checked
        if outcome.witness is not None:
            status = FAIL
        elif outcome.checked == 0:
            status = SKIPPED
        else:
            status = PASS
        report = CheckReport(
            check_id=check_id,
            suite=self.suite,
            params=merged,
            status=status,
            witness=outcome.witness,
            reason=outcome.skip_reason if status == SKIPPED else None,
            elapsed_ms=timer.elapsed_ms,
            value=_serialized(outcome.value),
        )
        logging.debug(f"{check_id} {merged}: {status}")
        return report
