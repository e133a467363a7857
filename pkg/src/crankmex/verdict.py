"""Structured pass/fail results for theorem and identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Verdict:
    """Outcome of one exact check.

    ``params`` echoes the bounds the check ran at; on failure
    ``counterexample`` pins down the first offending coefficient or tuple so
    the failure can be reproduced by hand.
    """

    name: str
    params: dict[str, object] = field(default_factory=dict)
    status: str = "pass"
    counterexample: dict[str, object] | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @classmethod
    def ok(cls, name: str, params: dict[str, object]) -> "Verdict":
        return cls(name=name, params=params, status="pass")

    @classmethod
    def fail(
        cls, name: str, params: dict[str, object], counterexample: dict[str, object]
    ) -> "Verdict":
        return cls(
            name=name, params=params, status="fail", counterexample=counterexample
        )
