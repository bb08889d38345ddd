"""Command records: one JSON object per line, or a plain-text rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from ..checks import Report

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


@dataclass
class Record:
    command: str
    input: str
    result: dict[str, Any] = field(default_factory=dict)
    checks: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    error: dict[str, Any] | None = None
    status: int = EXIT_OK

    def add_report(self, report: Report) -> None:
        self.checks.extend(report.to_list())
        self.notes.extend(report.notes)
        if not report.passed and self.status == EXIT_OK:
            self.status = EXIT_FAILED

    def fail(self, kind: str, message: str, status: int, **extra: Any) -> None:
        self.error = {"kind": kind, "message": message, **extra}
        self.status = status

    @property
    def ok(self) -> bool:
        return self.status == EXIT_OK

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "input": self.input,
            "ok": self.ok,
            "status": self.status,
            "result": self.result,
            "checks": self.checks,
            "notes": self.notes,
            "error": self.error,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False, separators=(",", ":"))

    def to_text(self) -> str:
        lines = [f"{self.command} {self.input}: {'ok' if self.ok else 'FAILED'}"]
        for key in sorted(self.result):
            lines.extend(_text_item(key, self.result[key], 1))
        for c in self.checks:
            mark = "ok  " if c["passed"] else "FAIL"
            w = c.get("witness")
            lines.append(f"  {mark} {c['name']}" + (f": {w}" if w else ""))
        lines.extend(f"  note: {n}" for n in self.notes)
        if self.error:
            lines.append(f"  error ({self.error['kind']}): {self.error['message']}")
        return "\n".join(lines)


def _text_item(key: str, value: Any, depth: int) -> list[str]:
    pad = "  " * depth
    if isinstance(value, dict):
        out = [f"{pad}{key}:"]
        for k in sorted(value):
            out.extend(_text_item(k, value[k], depth + 1))
        return out
    if isinstance(value, list) and value and isinstance(value[0], dict):
        out = [f"{pad}{key}:"]
        for i, item in enumerate(value):
            out.extend(_text_item(f"[{i}]", item, depth + 1))
        return out
    if isinstance(value, list):
        return [f"{pad}{key}: " + ", ".join(str(v) for v in value)]
    return [f"{pad}{key}: {value}"]
