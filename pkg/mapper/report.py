from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class SkippedEntity(BaseModel):
    model_config = ConfigDict(frozen=True)

    path: str
    reason: str


class MappingReport(BaseModel):
    """What a mapping run emitted and what it left out."""

    emitted_triples: int = 0
    skipped_entities: list[SkippedEntity] = Field(default_factory=list)
    collapsed_duplicates: int = 0
    warnings: list[str] = Field(default_factory=list)

    def skip(self, path: str, reason: str) -> None:
        self.skipped_entities.append(SkippedEntity(path=path, reason=reason))

    @property
    def has_skips(self) -> bool:
        return bool(self.skipped_entities)

    def skip_lines(self) -> list[str]:
        return [f"SKIP {s.path} {s.reason}" for s in self.skipped_entities]

    def summary(self) -> str:
        """Counts first, then one line per skip and per warning."""
        lines = [
            f"emitted_triples: {self.emitted_triples}",
            f"collapsed_duplicates: {self.collapsed_duplicates}",
            f"skipped_entities: {len(self.skipped_entities)}",
            f"warnings: {len(self.warnings)}",
            *self.skip_lines(),
            *(f"WARN {w}" for w in self.warnings),
        ]
        return "\n".join(lines) + "\n"
