"""
rdfcore.exceptions
~~~~~~~~~~~~~~~~~~

Root of the exception hierarchy shared by every package in the toolkit.

Each package derives its own base class from ``SaasError`` so the command
line front end can catch everything with a single ``except SaasError``.
"""


class SaasError(Exception):
    """Base class for all errors raised by the toolkit."""


class RdfCoreError(SaasError):
    """Base class for errors raised by the RDF term and graph layer."""


class InvalidIri(RdfCoreError):
    """Raised when a string is not a valid absolute IRI.

    No implicit encoding is attempted. Identifiers that are not native IRIs
    must go through the mapper's identifier policy instead.
    """

    def __init__(self, value: str, reason: str) -> None:
        super().__init__(f"Invalid IRI {value!r}: {reason}")
        self.value = value
        self.reason = reason


class InvalidTriple(RdfCoreError):
    """Raised when a triple violates the RDF abstract syntax."""

    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason
