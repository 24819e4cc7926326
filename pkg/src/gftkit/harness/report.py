"""Check outcomes and verification reports, with JSON/CSV/table rendering."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_ENGINE = 0, 1, 2, 3


def jsonable(x):
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real), float(x.imag)]
    if isinstance(x, (np.floating, float)):
        x = float(x)
        return x if math.isfinite(x) else repr(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, np.ndarray):
        return [jsonable(v) for v in x.tolist()]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return jsonable(x.to_json())
    return x


@dataclass
class CheckResult:
    id: str
    claim: str
    passed: bool
    measured: Any = None
    expected: Any = None
    tolerance: Optional[float] = None
    comparator: str = ""
    witness: dict = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def status(self):
        if self.error is not None:
            return "error"
        return "pass" if self.passed else "fail"

    def to_json(self):
        return jsonable({
            "id": self.id,
            "claim": self.claim,
            "status": self.status,
            "measured": self.measured,
            "expected": self.expected,
            "tolerance": self.tolerance,
            "comparator": self.comparator,
            "witness": self.witness,
            "error": self.error,
        })


@dataclass
class VerificationReport:
    scenario_id: str
    description: str
    provenance: str
    checks: list
    config: dict
    runtime: float = 0.0

    @property
    def passed(self):
        return all(c.status == "pass" for c in self.checks)

    @property
    def exit_code(self):
        if any(c.status == "error" for c in self.checks):
            return EXIT_ENGINE
        return EXIT_PASS if self.passed else EXIT_FAIL

    def to_json(self, include_runtime=True):
        out = {
            "scenario": self.scenario_id,
            "description": self.description,
            "provenance": self.provenance,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "config": jsonable(self.config),
        }
        if include_runtime:
            out["runtime"] = round(self.runtime, 3)
        return out


def combined_exit(reports):
    codes = [r.exit_code for r in reports]
    if EXIT_ENGINE in codes:
        return EXIT_ENGINE
    if EXIT_FAIL in codes:
        return EXIT_FAIL
    return EXIT_PASS


def render_json(reports, include_runtime=True):
    doc = {
        "status": "pass" if combined_exit(reports) == EXIT_PASS else "fail",
        "reports": [r.to_json(include_runtime) for r in reports],
    }
    return json.dumps(doc, indent=2, sort_keys=True)


CSV_FIELDS = ["scenario", "check", "status", "measured", "expected", "tolerance", "comparator", "witness", "error"]


def render_csv(reports):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in reports:
        for c in r.checks:
            j = c.to_json()
            w.writerow([r.scenario_id, c.id, c.status, json.dumps(j["measured"]), json.dumps(j["expected"]),
                        "" if c.tolerance is None else c.tolerance, c.comparator,
                        json.dumps(j["witness"], sort_keys=True), c.error or ""])
    return buf.getvalue()


def _short(x):
    if isinstance(x, float):
        return f"{x:.8g}"
    if isinstance(x, complex):
        return f"{x.real:.6g}{x.imag:+.6g}i"
    if isinstance(x, (list, tuple)) and len(x) == 2 and all(isinstance(v, (int, float)) for v in x):
        return f"[{x[0]:.6g}, {x[1]:.6g}]"
    return str(x)


def render_table(reports):
    lines = []
    for r in reports:
        lines.append(f"== {r.scenario_id}  [{'PASS' if r.passed else 'FAIL'}]  {r.description}")
        lines.append(f"   anchor: {r.provenance}   ({r.runtime:.2f}s)")
        for c in r.checks:
            tail = f"error: {c.error}" if c.error else (
                f"measured={_short(c.measured)} {c.comparator} expected={_short(c.expected)}"
                + (f" tol={c.tolerance:g}" if c.tolerance is not None else ""))
            lines.append(f"   {c.status.upper():5s} {c.id}: {tail}")
    n = sum(len(r.checks) for r in reports)
    bad = sum(1 for r in reports for c in r.checks if c.status != "pass")
    lines.append(f"{n - bad}/{n} checks passed")
    return "\n".join(lines)
