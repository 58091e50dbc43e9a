"""
shacl.validator
~~~~~~~~~~~~~~~

Evaluate shapes against a data graph with pySHACL and translate its results
graph into a ``ValidationReport``.

Focus nodes of a shape are exactly the subjects typed with its target
class; subclass instances are not included. Saturate with the subclass
rules first to validate those as well.
"""

from __future__ import annotations

import logging
from typing import Iterable

from pyshacl import validate as pyshacl_validate
from rdflib import Graph, URIRef
from rdflib.namespace import RDF
from rdflib.term import Node

from rdfcore import SH, RdfGraph
from .exceptions import UnknownShapeTarget
from .model import NodeKind, PropertyConstraint, Severity, Shape, ShapeSet, ValidationReport, ValidationResult

logger = logging.getLogger(__name__)

# constraint components the loader understands; pySHACL results for any
# other component were announced as ignored when the shapes were loaded
_KINDS = {
    SH.MinCountConstraintComponent: "minCount",
    SH.MaxCountConstraintComponent: "maxCount",
    SH.DatatypeConstraintComponent: "datatype",
    SH.ClassConstraintComponent: "class",
    SH.NodeKindConstraintComponent: "nodeKind",
}
_SEVERITIES = {SH.Violation: Severity.VIOLATION, SH.Warning: Severity.WARNING, SH.Info: Severity.WARNING}


def _message(kind: str, constraint: PropertyConstraint, value: Node | None, count: int) -> str:
    if constraint.message is not None:
        return constraint.message
    if kind == "minCount":
        return f"expected at least {constraint.min_count} value(s), found {count}"
    if kind == "maxCount":
        return f"expected at most {constraint.max_count} value(s), found {count}"
    shown = value.n3() if value is not None else "?"
    if kind == "datatype":
        return f"value {shown} is not of datatype {constraint.datatype}"
    if kind == "class":
        return f"value {shown} is not an instance of {constraint.value_class}"
    if constraint.node_kind is NodeKind.IRI_ONLY:
        return f"value {shown} is not an IRI"
    return f"value {shown} is not a literal"


def _index(shapes: Iterable[Shape]) -> dict[Node, list[tuple[URIRef, PropertyConstraint]]]:
    """Shape graph node of each constraint -> (target class, constraint) pairs."""
    index: dict[Node, list[tuple[URIRef, PropertyConstraint]]] = {}
    for shape in shapes:
        for constraint in shape.constraints:
            index.setdefault(constraint.node, []).append((shape.target_class, constraint))
    return index


def _translate(data: Graph, results: Graph, shapes: Iterable[Shape]) -> list[ValidationResult]:
    index = _index(shapes)
    translated = []
    for node in results.subjects(RDF.type, SH.ValidationResult):
        kind = _KINDS.get(results.value(node, SH.sourceConstraintComponent))
        owners = index.get(results.value(node, SH.sourceShape))
        if kind is None or owners is None:
            continue

        focus = results.value(node, SH.focusNode)
        typed = [constraint for target, constraint in owners if (focus, RDF.type, target) in data]
        if not typed:
            continue
        constraint = typed[0]
        if kind == "nodeKind" and constraint.node_kind is NodeKind.ANY:
            continue

        value = results.value(node, SH.value)
        count = len(set(data.objects(focus, constraint.path)))
        translated.append(ValidationResult(
            focus_node=str(focus),
            path=str(constraint.path),
            constraint_kind=kind,
            message=_message(kind, constraint, value, count),
            severity=_SEVERITIES.get(results.value(node, SH.resultSeverity), constraint.severity),
        ))
    return translated


def _run(data: RdfGraph, shapes_graph: RdfGraph, shapes: tuple[Shape, ...]) -> ValidationReport:
    if not shapes or len(data) == 0:
        return ValidationReport.from_results(())
    _, results, _ = pyshacl_validate(
        data.rdflib_graph,
        shacl_graph=shapes_graph.rdflib_graph,
        inference="none",
        abort_on_first=False,
        allow_warnings=True,
        advanced=False,
        meta_shacl=False,
        debug=False,
    )
    translated = _translate(data.rdflib_graph, results, shapes)
    logger.debug("pySHACL results translated: %d", len(translated))
    return ValidationReport.from_results(translated)


def validate(data: RdfGraph, shapes: ShapeSet) -> ValidationReport:
    """Validate *data* against every shape; results are sorted by focus, path, kind, message."""
    report = _run(data, shapes.graph, shapes.shapes)
    logger.info(
        "Validated %d triples: %d violations, %d warnings",
        len(data),
        len(report.violations),
        len(report.warnings),
    )
    return report


def validate_single_class(data: RdfGraph, shapes: ShapeSet, class_iri: URIRef | str) -> ValidationReport:
    """Validate with only the shapes targeting *class_iri*.

    Raises:
        UnknownShapeTarget: If no shape targets *class_iri*.
    """
    selected = shapes.for_class(URIRef(class_iri))
    if not selected:
        raise UnknownShapeTarget(class_iri)
    return _run(data, shapes.graph, selected)
