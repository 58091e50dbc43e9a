"""Read node shapes and their property shapes from a shapes graph."""

from __future__ import annotations

import logging
from pathlib import Path

from rdflib import Literal, URIRef
from rdflib.namespace import RDF
from rdflib.term import Node

from rdfcore import SH, RdfGraph
from serializers import parse_file
from .exceptions import MalformedShape
from .model import NodeKind, PropertyConstraint, Severity, Shape, ShapeSet

logger = logging.getLogger(__name__)

_PROPERTY_COMPONENTS = {
    SH.path, SH.minCount, SH.maxCount, SH.datatype, SH["class"], SH.nodeKind, SH.severity,
    SH.name, SH.description, SH.message, SH.order, SH.group,
}
_NODE_COMPONENTS = {SH.targetClass, SH.property, SH.name, SH.description, SH.message}

_NODE_KINDS = {SH.IRI: NodeKind.IRI_ONLY, SH.Literal: NodeKind.LITERAL_ONLY}
_SEVERITIES = {SH.Violation: Severity.VIOLATION, SH.Warning: Severity.WARNING, SH.Info: Severity.WARNING}


class _ShapeReader:
    def __init__(self, graph: RdfGraph) -> None:
        self._graph = graph.rdflib_graph
        self.warnings: list[str] = []

    def _warn(self, message: str) -> None:
        logger.warning("Shapes: %s", message)
        self.warnings.append(message)

    def _single(self, node: Node, predicate: URIRef) -> Node | None:
        values = list(self._graph.objects(node, predicate))
        if len(values) > 1:
            raise MalformedShape(node, f"more than one value for {predicate}")
        return values[0] if values else None

    def _count(self, node: Node, predicate: URIRef) -> int | None:
        value = self._single(node, predicate)
        if value is None:
            return None
        if not isinstance(value, Literal):
            raise MalformedShape(node, f"{predicate} must be an integer literal")
        try:
            count = int(str(value))
        except ValueError:
            raise MalformedShape(node, f"{predicate} must be an integer, got {value!r}") from None
        if count < 0:
            raise MalformedShape(node, f"{predicate} must not be negative")
        return count

    def _iri(self, node: Node, predicate: URIRef) -> URIRef | None:
        value = self._single(node, predicate)
        if value is not None and not isinstance(value, URIRef):
            raise MalformedShape(node, f"{predicate} must be an IRI")
        return value

    def _message(self, node: Node) -> str | None:
        """The untagged or English ``sh:message``, else the first by language tag."""
        values = sorted(
            (v for v in self._graph.objects(node, SH.message) if isinstance(v, Literal)),
            key=lambda v: (v.language not in (None, "en"), v.language or "", str(v)),
        )
        return str(values[0]) if values else None

    def _unknown_components(self, node: Node, known: set[URIRef]) -> None:
        for predicate in sorted(set(self._graph.predicates(node, None))):
            if str(predicate).startswith(str(SH)) and predicate not in known:
                self._warn(f"unsupported constraint component {predicate} on {node} ignored")

    def constraint(self, node: Node) -> PropertyConstraint:
        path = self._single(node, SH.path)
        if path is None:
            raise MalformedShape(node, "property shape without sh:path")
        if not isinstance(path, URIRef):
            raise MalformedShape(node, "only predicate paths are supported")
        self._unknown_components(node, _PROPERTY_COMPONENTS)

        node_kind = NodeKind.ANY
        kind_value = self._iri(node, SH.nodeKind)
        if kind_value is not None:
            if kind_value in _NODE_KINDS:
                node_kind = _NODE_KINDS[kind_value]
            else:
                self._warn(f"node kind {kind_value} on {node} not supported, treated as any")

        severity = Severity.VIOLATION
        severity_value = self._iri(node, SH.severity)
        if severity_value is not None:
            severity = _SEVERITIES.get(severity_value, Severity.VIOLATION)

        try:
            return PropertyConstraint(
                path=path,
                min_count=self._count(node, SH.minCount) or 0,
                max_count=self._count(node, SH.maxCount),
                datatype=self._iri(node, SH.datatype),
                value_class=self._iri(node, SH["class"]),
                node_kind=node_kind,
                severity=severity,
                message=self._message(node),
                node=node,
            )
        except ValueError as exc:
            raise MalformedShape(node, str(exc)) from exc

    def shapes(self) -> list[Shape]:
        graph = self._graph
        shapes: list[Shape] = []

        targeted = set(graph.subjects(SH.targetClass, None))
        referenced = set(graph.objects(None, SH.property))

        for node in sorted(set(graph.subjects(SH.property, None)) | set(graph.subjects(RDF.type, SH.NodeShape)), key=str):
            if node not in targeted:
                raise MalformedShape(node, "shape has no sh:targetClass")
        for node in sorted(set(graph.subjects(SH.path, None)) - referenced, key=str):
            if node not in targeted:
                raise MalformedShape(node, "property shape is not attached to a shape with sh:targetClass")

        for node in sorted(targeted, key=str):
            self._unknown_components(node, _NODE_COMPONENTS | ({SH.path} if (node, SH.path, None) in graph else set()))
            constraints = [self.constraint(ps) for ps in graph.objects(node, SH.property)]
            if (node, SH.path, None) in graph:
                constraints.append(self.constraint(node))
            constraints = tuple(sorted(constraints, key=lambda c: (str(c.path), repr(c))))
            if not constraints:
                raise MalformedShape(node, "shape has no constraints")
            for target in sorted(graph.objects(node, SH.targetClass), key=str):
                if not isinstance(target, URIRef):
                    raise MalformedShape(node, "sh:targetClass must be an IRI")
                shapes.append(Shape(target_class=target, constraints=constraints, node=node))

        return sorted(shapes, key=lambda s: (str(s.target_class), str(s.node)))


def load_shapes(shapes_graph: RdfGraph) -> ShapeSet:
    """Build a ``ShapeSet`` with one ``Shape`` per targeted class of each node shape.

    Unsupported constraint components are logged and listed in
    ``ShapeSet.warnings``.

    Raises:
        MalformedShape: For shapes without a target class or without constraints.
    """
    reader = _ShapeReader(shapes_graph)
    shapes = reader.shapes()
    logger.debug("Loaded %d shapes", len(shapes))
    return ShapeSet(
        shapes=tuple(shapes),
        prefixes=shapes_graph.prefixes,
        warnings=tuple(reader.warnings),
        graph=shapes_graph,
    )


def load_shapes_dir(directory: str | Path) -> ShapeSet:
    """Merge every ``*.ttl`` file of *directory* into one shapes graph and load it."""
    graph = RdfGraph()
    for path in sorted(Path(directory).glob("*.ttl")):
        graph = graph.merge(parse_file(path))
    return load_shapes(graph)
