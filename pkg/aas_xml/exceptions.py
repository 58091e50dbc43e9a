"""Exceptions raised while reading AAS XML documents and AASX containers."""

from rdfcore.exceptions import SaasError


class AasXmlError(SaasError):
    """Base class for ingest errors."""


class XmlSyntax(AasXmlError):
    """The document is not well-formed XML."""

    def __init__(self, line: int, col: int, message: str) -> None:
        super().__init__(f"XML syntax error at line {line}, column {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


class SchemaViolation(AasXmlError):
    """The document is well-formed but misses mandatory AAS structure."""

    def __init__(self, path: str, reason: str) -> None:
        super().__init__(f"{path}: {reason}")
        self.path = path
        self.reason = reason


class NotAnArchive(AasXmlError):
    """The bytes handed to the AASX reader are not a ZIP container."""


class NoEnvironmentFound(AasXmlError):
    """The AASX container holds no aasenv XML entry."""
