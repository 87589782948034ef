"""Check reports shared by the verification commands."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    total: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, witness: str = "", detail: str = "") -> bool:
        self.total += 1
        if not ok:
            self.failures.append({"witness": witness, "detail": detail})
        return ok

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"name": self.name, "total": self.total, "failures": list(self.failures)}


@dataclass
class Report:
    command: str
    params: dict = field(default_factory=dict)
    seed: int | None = None
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def check(self, name: str) -> Check:
        c = Check(name)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [f for c in self.checks for f in c.failures]

    def to_dict(self) -> dict:
        d = {
            "command": self.command,
            "params": self.params,
            "seed": self.seed,
            "checks": [c.to_dict() for c in self.checks],
            "pass": self.passed,
        }
        if self.notes:
            d["notes"] = list(self.notes)
        return d

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            status = "ok" if c.passed else "FAIL"
            lines.append(f"{c.name}: {c.total} checked, {len(c.failures)} failed [{status}]")
            for f in c.failures[:5]:
                lines.append(f"    {f['witness']}  {f['detail']}".rstrip())
        lines.extend(self.notes)
        return lines
