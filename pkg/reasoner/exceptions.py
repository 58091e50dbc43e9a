"""Exceptions raised by the rule loader, the saturation engine and ontology loading."""

from rdfcore.exceptions import SaasError


class ReasonerError(SaasError):
    """Base class for reasoner errors."""


class RuleSyntax(ReasonerError):
    """A rule file does not follow the rule grammar."""

    def __init__(self, line: int, reason: str) -> None:
        super().__init__(f"Rule syntax error at line {line}: {reason}")
        self.line = line
        self.reason = reason


class UnsafeRule(ReasonerError):
    """A conclusion uses a variable that no premise binds."""

    def __init__(self, variable: str) -> None:
        super().__init__(f"Variable ?{variable} occurs in a conclusion but in no premise")
        self.variable = variable


class SaturationLimitExceeded(ReasonerError):
    """The working graph grew beyond the configured triple cap."""

    def __init__(self, limit: int) -> None:
        super().__init__(f"Saturation stopped: more than {limit} triples")
        self.limit = limit


class OntologyFetchError(ReasonerError):
    """The ontology could not be fetched from a remote location."""

    def __init__(self, url: str, reason: str) -> None:
        super().__init__(f"Cannot fetch ontology from {url}: {reason}")
        self.url = url
        self.reason = reason
