"""Three-valued classification outcomes with an auditable reason chain."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Outcome(str, Enum):
    YES = "yes"
    NO = "no"
    CONDITIONAL = "conditional"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a classifier.

    ``reasons`` is an ordered chain of ``(rule_id, statement)`` pairs naming the
    facts used. A conditional verdict names the open fact it hinges on in
    ``condition``.
    """

    outcome: Outcome
    reasons: tuple[tuple[str, str], ...] = ()
    condition: str | None = None
    annotations: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "outcome", Outcome(self.outcome))
        object.__setattr__(self, "reasons", tuple(tuple(r) for r in self.reasons))
        if self.outcome is Outcome.CONDITIONAL and not self.condition:
            raise ValueError("a conditional verdict must name its condition")

    def __bool__(self):
        raise TypeError("a Verdict is three-valued; compare .outcome instead")

    def to_dict(self) -> dict[str, Any]:
        return {
            "outcome": self.outcome.value,
            "condition": self.condition,
            "reasons": [list(r) for r in self.reasons],
            "annotations": dict(self.annotations),
        }
