from __future__ import annotations

from lxml import etree
from pydantic import BaseModel, ConfigDict, Field

from .parser import parse_xml


class XmlMetrics(BaseModel):
    """Element node and leaf counts of one XML document."""

    model_config = ConfigDict(frozen=True)

    node_count: int = Field(default=0, ge=0)
    leaf_count: int = Field(default=0, ge=0)


def xml_metrics(doc: bytes) -> XmlMetrics:
    """Count element nodes and leaf elements (no element children) of *doc*.

    Comments and processing instructions are not nodes here.
    """
    root = parse_xml(doc)
    nodes = leaves = 0
    for element in root.iter(tag=etree.Element):
        nodes += 1
        if not any(isinstance(child.tag, str) for child in element):
            leaves += 1
    return XmlMetrics(node_count=nodes, leaf_count=leaves)
