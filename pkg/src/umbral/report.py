"""Check results and verification reports."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    id: str
    passed: bool
    witness: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        out = {"id": self.id, "status": "pass" if self.passed else "fail"}
        if not self.passed:
            out["witness"] = {k: str(v) for k, v in self.witness.items()}
        return out


@dataclass
class Report:
    suite: str
    order: int
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "order": self.order,
            "passed": self.passed,
            "n_checks": len(self.checks),
            "n_failed": len(self.failures()),
            "seconds": round(self.seconds, 3),
            "checks": [c.to_json() for c in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"suite {self.suite} (order {self.order}): "
                 f"{len(self.checks) - len(self.failures())}/{len(self.checks)} passed "
                 f"in {self.seconds:.2f}s"]
        for c in self.failures():
            lines.append(f"FAIL {c.id}")
            for k, v in c.witness.items():
                lines.append(f"    {k}: {v}")
        return "\n".join(lines)
