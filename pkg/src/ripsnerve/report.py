"""Run reports: TSV blocks with '#' metadata, or JSON.

Reports carry no timestamps or absolute paths so identical inputs and flags
give byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence


@dataclass
class Table:
    name: str
    header: Sequence[str]
    rows: list[Sequence[Any]] = field(default_factory=list)

    def add(self, *row: Any) -> None:
        self.rows.append(row)


@dataclass
class RunReport:
    command: str
    inputs: list[tuple[str, str]] = field(default_factory=list)
    tables: list[Table] = field(default_factory=list)
    notes: list[tuple[str, Any]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    checks: list[tuple[str, bool]] = field(default_factory=list)
    headline: str | None = None

    def digest(self, path: str) -> None:
        data = Path(path).read_bytes()
        self.inputs.append((path, hashlib.sha256(data).hexdigest()))

    def table(self, name: str, *header: str) -> Table:
        t = Table(name, header)
        self.tables.append(t)
        return t

    def note(self, key: str, value: Any) -> None:
        self.notes.append((key, value))

    def check(self, name: str, ok: bool) -> bool:
        self.checks.append((name, bool(ok)))
        return bool(ok)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def to_tsv(self) -> str:
        out = [self.headline] if self.headline is not None else []
        out.append(f"# command: {self.command}")
        out += [f"# input: {p} sha256={h}" for p, h in self.inputs]
        out += [f"# {k}: {_cell(v)}" for k, v in self.notes]
        out += [f"# warning: {w}" for w in self.warnings]
        for t in self.tables:
            out.append(f"## {t.name}")
            out.append("\t".join(t.header))
            out += ["\t".join(_cell(c) for c in row) for row in t.rows]
        if self.checks:
            failed = [n for n, ok in self.checks if not ok]
            out.append(f"# checks: {len(self.checks) - len(failed)}/{len(self.checks)} passed")
            out += [f"# FAILED: {n}" for n in failed]
        return "\n".join(out) + "\n"

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "headline": self.headline,
            "inputs": [{"path": p, "sha256": h} for p, h in self.inputs],
            "notes": {k: _jsonable(v) for k, v in self.notes},
            "warnings": list(self.warnings),
            "tables": [
                {"name": t.name, "header": list(t.header), "rows": [[_jsonable(c) for c in r] for r in t.rows]}
                for t in self.tables
            ],
            "checks": [{"name": n, "passed": ok} for n, ok in self.checks],
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def betti_str(betti: Sequence[int]) -> str:
    return "(" + ",".join(str(b) for b in betti) + ")"


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (tuple, list)):
        return betti_str(v)
    return str(v)


def _jsonable(v: Any) -> Any:
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, float) and v == float("inf"):
        return "inf"
    return v
