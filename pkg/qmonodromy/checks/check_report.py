#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional


PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

STATUSES = (PASS, FAIL, SKIPPED)


@dataclass
class CheckReport:
    """Outcome of one verified identity.

    A failing report always carries a witness: the first mismatching entry
    rendered as exact scalar strings. A skipped report carries the reason,
    typically a vanishing bracket at every test state.
    """

    check_id: str
    suite: str
    params: Dict[str, Any] = field(default_factory=dict)
    status: str = PASS
    witness: Optional[Dict[str, str]] = None
    reason: Optional[str] = None
    elapsed_ms: int = 0
    # serialized exact scalar, for checks that compute a number
    value: Optional[Dict[str, Any]] = None

    def __post_init__(self):
        assert self.status in STATUSES, f"unknown status {self.status}"
        assert self.status != FAIL or self.witness, "a failing check needs a witness"

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, record: Dict[str, Any]) -> "CheckReport":
        return cls(**record)


def _format_params(params: Dict[str, Any]) -> str:
    return ", ".join(f"{key}={params[key]}" for key in sorted(params))


def _format_status(report: CheckReport) -> str:
    if report.status == SKIPPED:
        return f"skipped ({report.reason})"
    return report.status


def format_table(reports: List[CheckReport]) -> str:
    """Human readable summary. Only uses fields that survive serialization,
    so a re-parsed report file gives the same table."""
    rows = [("suite", "check", "params", "status", "ms")]
    for report in reports:
        rows.append(
            (
                report.suite,
                report.check_id,
                _format_params(report.params),
                _format_status(report),
                str(report.elapsed_ms),
            )
        )
    widths = [max(len(row[col]) for row in rows) for col in range(len(rows[0]))]
    lines = []
    for idx, row in enumerate(rows):
        lines.append(
            "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        )
        if idx == 0:
            lines.append("  ".join("-" * width for width in widths))
    failed = sum(1 for report in reports if report.status == FAIL)
    skipped = sum(1 for report in reports if report.status == SKIPPED)
    lines.append(
        f"{len(reports)} checks: {len(reports) - failed - skipped} passed, "
        f"{failed} failed, {skipped} skipped"
    )
    return "\n".join(lines)
