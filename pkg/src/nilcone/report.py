"""Structured results shared by the certifiers and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    if hasattr(x, "parts"):
        return str(x)
    return x


@dataclass
class CertReport:
    check: str
    params: dict[str, Any]
    trials: list[dict[str, Any]] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    observed_min: dict[str, Any] = field(default_factory=dict)
    stats: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "params": jsonable(self.params),
            "trials": jsonable(self.trials),
            "violations": list(self.violations),
            "observed_min": jsonable(self.observed_min),
            "stats": jsonable(self.stats),
            "pass": self.passed,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={jsonable(v)}" for k, v in self.params.items())
        line = f"[{status}] {self.check} {params}"
        if self.violations:
            line += f" ({len(self.violations)} violations; first: {self.violations[0]})"
        return line


@dataclass
class DimensionBreakdown:
    genus: int
    kind: str
    flag: str
    degrees: list[int]
    poles: list[int]
    h0_values: list[int]
    bun_dim: int | None = None
    richardson: str | None = None

    @property
    def total(self) -> int:
        return sum(self.h0_values)

    @property
    def match(self) -> bool:
        return self.bun_dim is not None and self.total == self.bun_dim

    def to_json(self) -> dict[str, Any]:
        return {
            "genus": self.genus,
            "kind": self.kind,
            "flag": self.flag,
            "richardson": self.richardson,
            "summands": [
                {"degree": d, "pole": c, "h0": h}
                for d, c, h in zip(self.degrees, self.poles, self.h0_values)
            ],
            "total": self.total,
            "bun_dim": self.bun_dim,
            "match": self.match,
        }

    def summary(self) -> str:
        status = "MATCH" if self.match else "MISMATCH"
        return (
            f"[{status}] {self.flag} g={self.genus}: Hitchin base {self.total}"
            f" vs Bun {self.bun_dim} (poles {self.poles})"
        )


def dumps(obj: Any) -> str:
    return json.dumps(jsonable(obj), indent=2, sort_keys=False) + "\n"
