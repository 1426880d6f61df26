"""Verification reports and the first-failure check runner."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Iterable

PASS = "pass"
FAIL = "fail"


@dataclass
class Report:
    """Outcome of one bounded identity check.

    ``counterexample`` is set exactly when ``status == "fail"`` and holds the
    inputs together with the fully expanded, unequal left and right sides.
    """

    name: str
    status: str
    bounds: dict = field(default_factory=dict)
    counterexample: dict | None = None
    cases: int = 0
    millis: float = 0.0
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        out: dict[str, Any] = {
            "name": self.name,
            "status": self.status,
            "bound": {k: _jsonable(v) for k, v in self.bounds.items()},
            "millis": round(self.millis, 3),
            "cases": self.cases,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        if self.counterexample is not None:
            ce = self.counterexample
            out["counterexample"] = {
                "inputs": {k: str(v) for k, v in ce["inputs"].items()},
                "lhs": str(ce["lhs"]),
                "rhs": str(ce["rhs"]),
            }
        return out

    def summary(self) -> str:
        line = f"{self.status.upper():4}  {self.name}  ({self.cases} cases, {self.millis:.1f} ms)"
        if self.counterexample is not None:
            ce = self.counterexample
            inputs = ", ".join(f"{k}={v}" for k, v in ce["inputs"].items())
            line += f"\n      at {inputs}\n      lhs = {ce['lhs']}\n      rhs = {ce['rhs']}"
        return line


def _jsonable(v):
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def run_check(name: str, cases: Iterable[tuple[dict, Any, Any]], bounds: dict | None = None,
              seed: int | None = None) -> Report:
    """Consume ``(inputs, lhs, rhs)`` triples until the first ``lhs != rhs``.

    ``cases`` is normally a generator, so sides that are never compared are
    never computed.
    """
    start = time.perf_counter()
    count = 0
    counterexample = None
    for inputs, lhs, rhs in cases:
        count += 1
        if lhs != rhs:
            counterexample = {"inputs": dict(inputs), "lhs": lhs, "rhs": rhs}
            break
    millis = (time.perf_counter() - start) * 1000.0
    return Report(
        name=name,
        status=FAIL if counterexample is not None else PASS,
        bounds=dict(bounds or {}),
        counterexample=counterexample,
        cases=count,
        millis=millis,
        seed=seed,
    )


REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "homore verification run",
    "type": "object",
    "required": ["config", "suites", "seed", "version"],
    "properties": {
        "config": {"type": "object"},
        "seed": {"type": "integer"},
        "version": {"type": "string"},
        "suites": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status", "bound", "millis"],
                "properties": {
                    "name": {"type": "string"},
                    "status": {"enum": [PASS, FAIL]},
                    "bound": {"type": "object"},
                    "millis": {"type": "number", "minimum": 0},
                    "cases": {"type": "integer", "minimum": 0},
                    "seed": {"type": "integer"},
                    "counterexample": {
                        "type": "object",
                        "required": ["inputs", "lhs", "rhs"],
                        "properties": {
                            "inputs": {"type": "object", "additionalProperties": {"type": "string"}},
                            "lhs": {"type": "string"},
                            "rhs": {"type": "string"},
                        },
                    },
                },
                "if": {"properties": {"status": {"const": FAIL}}},
                "then": {"required": ["counterexample"]},
            },
        },
    },
}
