from __future__ import annotations

from dataclasses import dataclass

from rdflib import URIRef

from aas import IdType, Identifier, Key
from rdfcore import InvalidIri, make_iri, percent_encode_local
from .config import IdentifierPolicy, PolicyKind


@dataclass(frozen=True)
class Skip:
    """Why an identifier or entity was not mapped."""

    reason: str


def resolve_identifier(identifier: Identifier | Key, policy: IdentifierPolicy) -> URIRef | Skip:
    """Turn an identifier into an IRI under *policy*.

    URI identifiers are adopted verbatim and must be valid; IRDI and custom
    identifiers are skipped under the strict policy or percent-encoded under
    the mint base.
    """
    if identifier.id_type is IdType.URI:
        try:
            return make_iri(identifier.value)
        except InvalidIri as exc:
            return Skip(f"invalid URI identifier: {exc.reason}")

    if policy.kind is PolicyKind.STRICT_SKIP:
        return Skip(f"{identifier.id_type.value} identifier is not a URI")

    return make_iri(policy.base + percent_encode_local(identifier.value))
