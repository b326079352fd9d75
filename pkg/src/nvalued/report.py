"""Run reports emitted by the command line tools."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass
class RunReport:
    command: str
    params: dict
    columns: list[str] = field(default_factory=list)
    rows: list[list] = field(default_factory=list)
    checks: list[dict] = field(default_factory=list)
    status: int = EXIT_OK
    message: str = ""

    def add_check(self, name: str, passed: bool, detail: str = ""):
        self.checks.append({"name": name, "passed": bool(passed), "detail": detail})
        if not passed and self.status == EXIT_OK:
            self.status = EXIT_VIOLATION

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "RunReport":
        return cls(**data)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if self.columns:
            writer.writerow(self.columns)
            writer.writerows(self.rows)
            buf.write("\n")
        writer.writerow(["check", "result", "detail"])
        for c in self.checks:
            writer.writerow([c["name"], "pass" if c["passed"] else "FAIL", c["detail"]])
        if self.message:
            buf.write(f"# {self.message}\n")
        buf.write(f"# exit {self.status}\n")
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_csv()
