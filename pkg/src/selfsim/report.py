"""Line-oriented check reports shared by the verification harnesses and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    title: str
    lines: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    def info(self, text):
        self.lines.append(str(text))

    def check(self, name, ok, detail=""):
        ok = bool(ok)
        self.checks.append((name, ok))
        self.lines.append(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
        return ok

    def extend(self, other, prefix=""):
        for line in other.lines:
            self.lines.append(prefix + line)
        self.checks.extend(other.checks)

    @property
    def passed(self):
        return all(ok for _, ok in self.checks)

    def __str__(self):
        return "\n".join([f"== {self.title}"] + self.lines)
