"""Structured pass/fail records shared by the map verifier and the check registry."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any


def _plain(value):
    """JSON-friendly copy: tuples become lists, big ints stay exact."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, float) and value == float("inf"):
        return "inf"
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return value


@dataclass
class CheckReport:
    """Outcome of one check over one parameter set.

    status is "pass", "fail" or "threshold"; a failing report always carries a
    witness {"index", "expected", "actual"}.
    """

    name: str
    params: dict
    range: tuple
    status: str
    witness: dict | None = None
    runtime_ms: int = 0
    tag: str = "theorem"
    threshold: int | None = None
    detail: str = ""
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status == "fail" and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "threshold")

    def to_dict(self) -> dict[str, Any]:
        return _plain(asdict(self))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def csv_row(self) -> list:
        w = self.witness["index"] if self.witness else ""
        return [
            self.name,
            json.dumps(_plain(self.params), sort_keys=True),
            "..".join(str(x) for x in self.range),
            self.status if self.threshold is None else f"{self.status}({self.threshold})",
            w,
        ]


CSV_HEADER = ["name", "params", "range", "status", "witness_index"]
