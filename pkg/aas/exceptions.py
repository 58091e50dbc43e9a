"""Exceptions raised by the AAS domain model."""

from rdfcore.exceptions import SaasError


class AasModelError(SaasError):
    """Base class for AAS domain model errors."""


class AmbiguousReference(AasModelError):
    """Raised when a reference matches more than one entity of the environment.

    Identifiers are foreign keys; two entities sharing one means the input
    document is malformed.
    """

    def __init__(self, value: str, matches: int) -> None:
        super().__init__(f"Reference {value!r} matches {matches} entities")
        self.value = value
        self.matches = matches
