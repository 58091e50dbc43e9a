"""Rules, rule sets and saturation statistics."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from pydantic import BaseModel, ConfigDict, Field

from rdfcore import TriplePattern
from .exceptions import UnsafeRule


@dataclass(frozen=True)
class Rule:
    """Premises imply conclusions. The name is informative only."""

    premises: tuple[TriplePattern, ...]
    conclusions: tuple[TriplePattern, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if not self.premises or not self.conclusions:
            raise ValueError("A rule needs at least one premise and one conclusion")
        bound = set().union(*(p.variables() for p in self.premises))
        for conclusion in self.conclusions:
            free = conclusion.variables() - bound
            if free:
                raise UnsafeRule(str(sorted(free)[0]))


class RuleSetName(str, enum.Enum):
    SAME_AS = "sameas"
    SUB_CLASS_OF = "subclass"
    BOTH = "both"
    CUSTOM = "custom"


@dataclass(frozen=True)
class RuleSet:
    name: RuleSetName
    rules: tuple[Rule, ...] = ()

    def __len__(self) -> int:
        return len(self.rules)


class SaturationStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    added_triples: int = Field(ge=0)
    passes: int = Field(ge=0)
    duration_ms: int = Field(ge=0)


def format_stats(stats: SaturationStats) -> str:
    """``added=<n> passes=<k> ms=<t>``"""
    return f"added={stats.added_triples} passes={stats.passes} ms={stats.duration_ms}"
