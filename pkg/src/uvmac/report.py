"""Pass/fail reports shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, witness: str) -> bool:
        self.checked += 1
        if not ok:
            self.failures.append(witness)
        return ok

    def merge(self, other: "CheckReport") -> "CheckReport":
        self.checked += other.checked
        self.failures.extend(f"{other.name}: {w}" for w in other.failures)
        self.notes.extend(other.notes)
        return self

    def render(self, max_failures: int = 10) -> str:
        head = f"[{'PASS' if self.passed else 'FAIL'}] {self.name} ({self.checked} checks"
        head += ")" if self.passed else f", {len(self.failures)} failed)"
        lines = [head]
        lines += [f"  note: {n}" for n in self.notes]
        lines += [f"  witness: {w}" for w in self.failures[:max_failures]]
        if len(self.failures) > max_failures:
            lines.append(f"  ... {len(self.failures) - max_failures} more")
        return "\n".join(lines)

    def __bool__(self):
        return self.passed
