"""Structured outcome of a check, serializable to one JSON line."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .core import Mat, Poly
from .matio import format_rat, mat_to_obj


@dataclass
class Report:
    check: str
    passed: bool
    values: dict[str, Any] = field(default_factory=dict)

    def __getitem__(self, key: str) -> Any:
        return self.values[key]

    def get(self, key: str, default=None) -> Any:
        return self.values.get(key, default)

    def to_dict(self) -> dict:
        out = {"check": self.check, "pass": self.passed}
        out.update({k: to_jsonable(v) for k, v in self.values.items()})
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, separators=(",", ":"))


def to_jsonable(v):
    if isinstance(v, Report):
        return v.to_dict()
    if isinstance(v, Mat):
        return mat_to_obj(v)
    if isinstance(v, Fraction):
        return format_rat(v)
    if isinstance(v, Poly):
        return [format_rat(c) for c in v.coeffs]
    if hasattr(v, "to_jsonable"):
        return v.to_jsonable()
    if isinstance(v, dict):
        return {str(k): to_jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [to_jsonable(x) for x in v]
    if isinstance(v, (set, frozenset)):
        return sorted(to_jsonable(x) for x in v)
    return v
