"""Exceptions raised while loading shapes or selecting shapes by class."""

from rdfcore.exceptions import SaasError


class ShaclError(SaasError):
    """Base class for shape errors."""


class MalformedShape(ShaclError):
    def __init__(self, node: object, reason: str) -> None:
        super().__init__(f"Malformed shape {node}: {reason}")
        self.node = node
        self.reason = reason


class UnknownShapeTarget(ShaclError):
    """No loaded shape targets the requested class."""

    def __init__(self, class_iri: object) -> None:
        super().__init__(f"No shape targets class {class_iri}")
        self.class_iri = class_iri
