from __future__ import annotations

from rdflib import URIRef

from .exceptions import UnknownShapeTarget
from .model import NodeKind, PropertyConstraint, Severity, ShapeSet


def _compact(iri: URIRef, prefixes: dict[str, str]) -> str:
    best = None
    for label, namespace in prefixes.items():
        if str(iri).startswith(namespace) and (best is None or len(namespace) > len(best[1])):
            best = (label, namespace)
    if best is None:
        return f"<{iri}>"
    return f"{best[0]}:{str(iri)[len(best[1]):]}"


def _line(constraint: PropertyConstraint, prefixes: dict[str, str]) -> str:
    upper = "*" if constraint.max_count is None else str(constraint.max_count)
    parts = []
    if constraint.node_kind is NodeKind.IRI_ONLY:
        parts.append("IRI")
    elif constraint.node_kind is NodeKind.LITERAL_ONLY:
        parts.append("Literal")
    if constraint.datatype is not None:
        parts.append(_compact(constraint.datatype, prefixes))
    if constraint.value_class is not None:
        parts.append(f"class {_compact(constraint.value_class, prefixes)}")
    value = " ".join(parts) or "any"
    return f"  {_compact(constraint.path, prefixes)} [{constraint.min_count}..{upper}] {value}"


def shape_as_interface_contract(shapes: ShapeSet, class_iri: URIRef | str) -> str:
    """Render the constraints on *class_iri* as a plain-text interface contract.

    Sections: ``required`` (min >= 1, violation), ``recommended`` (min >= 1,
    warning) and ``optional`` (min 0). Empty sections are left out.

    Raises:
        UnknownShapeTarget: If no shape targets *class_iri*.
    """
    class_iri = URIRef(class_iri)
    selected = shapes.for_class(class_iri)
    if not selected:
        raise UnknownShapeTarget(class_iri)

    prefixes = shapes.prefixes
    sections: dict[str, list[str]] = {"required": [], "recommended": [], "optional": []}
    for shape in selected:
        for constraint in shape.constraints:
            if constraint.min_count == 0:
                section = "optional"
            elif constraint.severity is Severity.WARNING:
                section = "recommended"
            else:
                section = "required"
            sections[section].append(_line(constraint, prefixes))

    lines = [f"class {_compact(class_iri, prefixes)}"]
    for title, entries in sections.items():
        if entries:
            lines.append(f"{title}:")
            lines += sorted(set(entries))
    return "\n".join(lines) + "\n"
