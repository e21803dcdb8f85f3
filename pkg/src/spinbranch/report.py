from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class VerifyReport:
    """Outcome of an exhaustive check over a parameter grid.

    ``counterexamples`` holds ``(p, partition, detail)`` triples with the
    partition in its comma-separated text form.
    """

    lemma_id: str
    grid: dict
    checked: int = 0
    counterexamples: list[tuple[int, str, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "grid": self.grid,
            "checked": str(self.checked),
            "counterexamples": [
                {"p": str(p), "partition": lam, "detail": detail}
                for p, lam, detail in self.counterexamples
            ],
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.lemma_id} {self.grid}: checked {self.checked}, "
                f"{len(self.counterexamples)} counterexample(s)")
