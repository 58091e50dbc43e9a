from __future__ import annotations

import enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, model_validator

from rdfcore import iri_violation
from reasoner.ontology import load_ontology, rami_namespace


class PolicyKind(str, enum.Enum):
    STRICT_SKIP = "strict"
    MINT_UNDER_BASE = "mint"


class IdentifierPolicy(BaseModel):
    """How non-URI identifiers become IRIs: not at all, or minted under a base IRI."""

    model_config = ConfigDict(frozen=True)

    kind: PolicyKind = PolicyKind.STRICT_SKIP
    base: str | None = None

    @model_validator(mode="after")
    def _check_base(self) -> "IdentifierPolicy":
        if self.kind is PolicyKind.MINT_UNDER_BASE:
            if not self.base or self.base[-1] not in "/#":
                raise ValueError(f"Mint base IRI must end in '/' or '#', got {self.base!r}")
            reason = iri_violation(self.base)
            if reason is not None:
                raise ValueError(f"Mint base {self.base!r} is not an absolute IRI ({reason})")
        elif self.base is not None:
            raise ValueError("Only the mint policy takes a base IRI")
        return self

    @classmethod
    def strict(cls) -> "IdentifierPolicy":
        return cls()

    @classmethod
    def mint(cls, base: str) -> "IdentifierPolicy":
        return cls(kind=PolicyKind.MINT_UNDER_BASE, base=base)

    @classmethod
    def parse(cls, text: str) -> "IdentifierPolicy":
        """Parse ``strict`` or ``mint:<base IRI>``."""
        text = text.strip()
        if text == "strict":
            return cls.strict()
        if text.startswith("mint:"):
            return cls.mint(text[len("mint:"):])
        raise ValueError(f"Unknown identifier policy {text!r}; use 'strict' or 'mint:<base>'")

    def __str__(self) -> str:
        return "strict" if self.kind is PolicyKind.STRICT_SKIP else f"mint:{self.base}"


class MappingConfig(BaseModel):
    """Mapping options.

    ``rami_namespace`` defaults to the namespace the ontology binds to the
    ``rami`` prefix (the bundled ontology unless ``ontology_path`` is set).
    """

    model_config = ConfigDict(frozen=True)

    rami_namespace: str = ""
    identifier_policy: IdentifierPolicy = Field(default_factory=IdentifierPolicy.strict)
    emit_abstract_notes: bool = False
    ontology_path: Path | None = None

    @model_validator(mode="before")
    @classmethod
    def _default_namespace(cls, data):
        if isinstance(data, dict) and not data.get("rami_namespace"):
            path = data.get("ontology_path")
            ontology = load_ontology(path) if path else None
            data = {**data, "rami_namespace": rami_namespace(ontology)}
        return data

    @model_validator(mode="after")
    def _check_namespace(self) -> "MappingConfig":
        reason = iri_violation(self.rami_namespace)
        if reason is not None:
            raise ValueError(f"rami namespace {self.rami_namespace!r} is not an absolute IRI ({reason})")
        return self
