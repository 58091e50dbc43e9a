"""
shacl.model
~~~~~~~~~~~

Shapes, property constraints and validation reports.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from pydantic import BaseModel, ConfigDict
from rdflib import URIRef
from rdflib.term import Node

from rdfcore import RdfGraph


class NodeKind(str, enum.Enum):
    IRI_ONLY = "IriOnly"
    LITERAL_ONLY = "LiteralOnly"
    ANY = "Any"


class Severity(str, enum.Enum):
    VIOLATION = "Violation"
    WARNING = "Warning"

    @property
    def code(self) -> str:
        return self.value[0]


@dataclass(frozen=True)
class PropertyConstraint:
    """Constraints on the values of one predicate. ``max_count=None`` means unbounded.

    ``message`` is the shape's own ``sh:message``; results use it instead of
    the generated text.
    """

    path: URIRef
    min_count: int = 0
    max_count: int | None = None
    datatype: URIRef | None = None
    value_class: URIRef | None = None
    node_kind: NodeKind = NodeKind.ANY
    severity: Severity = Severity.VIOLATION
    message: str | None = None
    node: Node | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.min_count < 0:
            raise ValueError(f"min_count must be >= 0, got {self.min_count}")
        if self.max_count is not None and self.max_count < self.min_count:
            raise ValueError(f"max_count {self.max_count} is below min_count {self.min_count}")
        if self.datatype is not None and self.value_class is not None:
            raise ValueError("A constraint sets either a datatype or a value class, not both")


@dataclass(frozen=True)
class Shape:
    target_class: URIRef
    constraints: tuple[PropertyConstraint, ...]
    node: Node | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not self.constraints:
            raise ValueError(f"Shape for {self.target_class} has no constraints")


@dataclass(frozen=True)
class ShapeSet:
    """Loaded shapes plus the shapes graph they were read from."""

    shapes: tuple[Shape, ...] = ()
    prefixes: dict[str, str] = field(default_factory=dict, compare=False, hash=False)
    warnings: tuple[str, ...] = field(default=(), compare=False)
    graph: RdfGraph = field(default_factory=RdfGraph, compare=False, hash=False)

    def targets(self) -> list[URIRef]:
        return sorted({shape.target_class for shape in self.shapes})

    def for_class(self, class_iri: URIRef) -> tuple[Shape, ...]:
        return tuple(shape for shape in self.shapes if shape.target_class == class_iri)

    def __len__(self) -> int:
        return len(self.shapes)


class ValidationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    focus_node: str
    path: str
    constraint_kind: str
    message: str
    severity: Severity

    def sort_key(self) -> tuple[str, str, str, str]:
        return self.focus_node, self.path, self.constraint_kind, self.message

    def to_line(self) -> str:
        return f"{self.severity.code} {self.focus_node} {self.path} {self.constraint_kind} {self.message}"


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    conforms: bool
    results: tuple[ValidationResult, ...] = ()

    @classmethod
    def from_results(cls, results) -> "ValidationReport":
        ordered = tuple(sorted(results, key=ValidationResult.sort_key))
        return cls(
            conforms=not any(r.severity is Severity.VIOLATION for r in ordered),
            results=ordered,
        )

    @property
    def violations(self) -> tuple[ValidationResult, ...]:
        return tuple(r for r in self.results if r.severity is Severity.VIOLATION)

    @property
    def warnings(self) -> tuple[ValidationResult, ...]:
        return tuple(r for r in self.results if r.severity is Severity.WARNING)

    def to_text(self) -> str:
        """``conforms: true|false`` followed by one line per result."""
        lines = [f"conforms: {'true' if self.conforms else 'false'}"]
        lines += [result.to_line() for result in self.results]
        return "\n".join(lines) + "\n"
