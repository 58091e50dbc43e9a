"""
controllers.pipeline_stats
~~~~~~~~~~~~~~~~~~~~~~~~~~

Metrics of one pipeline run over a single input, printed by ``stats``.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from aas_xml import XmlMetrics
from serializers import SerializationFormat


class PipelineStats(BaseModel):
    xml_metrics: XmlMetrics = Field(default_factory=XmlMetrics)
    input_bytes: int = Field(default=0, ge=0)
    triples: int = Field(default=0, ge=0)
    format_bytes: dict[SerializationFormat, int] = Field(default_factory=dict)
    map_ms: int = Field(default=0, ge=0)
    reason_ms: int | None = Field(default=None, ge=0)
    validate_ms: int | None = Field(default=None, ge=0)

    def to_record(self) -> str:
        """One ``key=value`` line; formats appear only when they were serialized."""
        fields = [
            f"leaves={self.xml_metrics.leaf_count}",
            f"nodes={self.xml_metrics.node_count}",
            f"in_bytes={self.input_bytes}",
            f"triples={self.triples}",
        ]
        for fmt in SerializationFormat:
            if fmt in self.format_bytes:
                fields.append(f"{fmt.flag}={self.format_bytes[fmt]}")
        return " ".join(fields)

    def timing_lines(self) -> list[str]:
        lines = [f"map_ms={self.map_ms}"]
        if self.reason_ms is not None:
            lines.append(f"reason_ms={self.reason_ms}")
        if self.validate_ms is not None:
            lines.append(f"validate_ms={self.validate_ms}")
        return lines
