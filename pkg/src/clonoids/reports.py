"""Check outcome records shared by the registry self-test and the verification suite."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Optional

PASS = "pass"
FAIL = "fail"
INDETERMINATE = "indeterminate"
SKIPPED_BUDGET = "skipped-budget"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named check.

    A ``fail`` report always carries a counterexample whose payload can be
    replayed through the public operations of the module that produced it.
    """

    check_id: str
    status: str
    statistics: Mapping[str, Any] = field(default_factory=dict)
    counterexample: Optional[Mapping[str, Any]] = None

    def __post_init__(self):
        if self.status not in (PASS, FAIL, INDETERMINATE, SKIPPED_BUDGET):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == FAIL and self.counterexample is None:
            raise ValueError("fail reports must carry a counterexample")

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_json_dict(self) -> dict:
        d: dict = {
            "checkId": self.check_id,
            "status": self.status,
            "statistics": dict(sorted(self.statistics.items())),
        }
        if self.counterexample is not None:
            d["counterexample"] = dict(sorted(self.counterexample.items()))
        return d
