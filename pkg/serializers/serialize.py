"""
serializers.serialize
~~~~~~~~~~~~~~~~~~~~~

Write an ``RdfGraph`` in one of the five output formats.

N-Triples (and N-Quads, whose default-graph-only output is identical) are
canonical: one triple per line, lines sorted bytewise, LF endings. Turtle,
RDF/XML and JSON-LD use the graph's prefix table; JSON-LD is written as a
single ``@context`` plus a node array with keys and value arrays sorted.
"""

from __future__ import annotations

import json
import logging

from rdflib import Literal, URIRef

from rdfcore import RdfGraph
from .exceptions import UnserializableTerm
from .formats import SerializationFormat

logger = logging.getLogger(__name__)


def _canonical_ntriples(graph: RdfGraph) -> bytes:
    if not len(graph):
        return b""
    raw = graph.rdflib_graph.serialize(format="nt", encoding="utf-8")
    lines = sorted(line for line in raw.split(b"\n") if line.strip())
    return b"\n".join(lines) + b"\n"


def _canonical_json(value):
    if isinstance(value, dict):
        return {key: _canonical_json(item) for key, item in value.items()}
    if isinstance(value, list):
        items = [_canonical_json(item) for item in value]
        return sorted(items, key=lambda item: json.dumps(item, sort_keys=True, ensure_ascii=False))
    return value


def _used_prefixes(graph: RdfGraph) -> dict[str, str]:
    iris = set()
    for triple in graph:
        for term in triple:
            if isinstance(term, URIRef):
                iris.add(str(term))
            elif isinstance(term, Literal) and term.datatype is not None:
                iris.add(str(term.datatype))
    return {
        label: namespace
        for label, namespace in sorted(graph.prefixes.items())
        if any(iri.startswith(namespace) for iri in iris)
    }


def _jsonld(graph: RdfGraph) -> bytes:
    context = _used_prefixes(graph)
    raw = graph.rdflib_graph.serialize(format="json-ld", context=context, auto_compact=True, encoding="utf-8")
    document = json.loads(raw)

    # rdflib compacts a single node to a bare object and may emit a bare
    # array; both are brought into one {"@context", "@graph"} shape
    if isinstance(document, list):
        nodes = document
    elif "@graph" in document:
        nodes = document["@graph"]
    else:
        node = {key: value for key, value in document.items() if key != "@context"}
        nodes = [node] if node else []

    canonical = {"@context": context, "@graph": _canonical_json(nodes)}
    text = json.dumps(canonical, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def serialize(graph: RdfGraph, fmt: SerializationFormat) -> bytes:
    """Return *graph* as UTF-8 bytes in *fmt*.

    Raises:
        UnserializableTerm: If a term cannot be expressed in *fmt* (RDF/XML
            needs every predicate to split into namespace and local name).
    """
    if fmt in (SerializationFormat.NTRIPLES, SerializationFormat.NQUADS):
        return _canonical_ntriples(graph)

    if fmt is SerializationFormat.JSONLD:
        return _jsonld(graph)

    try:
        data = graph.rdflib_graph.serialize(format=fmt.plugin, encoding="utf-8")
    except ValueError as exc:
        raise UnserializableTerm(str(exc), fmt.flag) from exc

    return data.replace(b"\r\n", b"\n")


def serialized_sizes(graph: RdfGraph, formats=tuple(SerializationFormat)) -> dict[SerializationFormat, int]:
    """Byte size of *graph* in each of *formats*."""
    sizes = {}
    for fmt in formats:
        sizes[fmt] = len(serialize(graph, fmt))
        logger.debug("Serialized %d triples as %s: %d bytes", len(graph), fmt.flag, sizes[fmt])
    return sizes
