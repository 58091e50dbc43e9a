"""Exceptions raised by the RDF parsers and serializers."""

from rdfcore.exceptions import SaasError


class SerializerError(SaasError):
    """Base class for serialization errors."""


class RdfSyntaxError(SerializerError):
    """An N-Triples or Turtle document could not be parsed."""

    def __init__(self, line: int, col: int, reason: str) -> None:
        super().__init__(f"RDF syntax error at line {line}, column {col}: {reason}")
        self.line = line
        self.col = col
        self.reason = reason


class UnserializableTerm(SerializerError):
    """A term cannot be written in the requested format."""

    def __init__(self, term: object, fmt: str) -> None:
        super().__init__(f"Term {term!r} cannot be serialized as {fmt}")
        self.term = term
        self.fmt = fmt
