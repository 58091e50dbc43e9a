"""
rdfcore.terms
~~~~~~~~~~~~~

Construction helpers for the three RDF term kinds.

The toolkit uses rdflib's term classes directly (``URIRef``, ``Literal``,
``BNode``); this module adds the construction rules the rest of the code
relies on:

- ``make_iri`` accepts only absolute IRIs and never encodes anything.
- ``percent_encode_local`` is the one sanctioned way to turn an arbitrary
  identifier into IRI-safe text.
- ``make_literal`` lowercases language tags and refuses contradictory
  datatype/language combinations.
"""

from __future__ import annotations

import itertools
import re
from urllib.parse import quote

from rdflib import BNode, Literal, URIRef
from rdflib.namespace import RDF, XSD

from .exceptions import InvalidIri, RdfCoreError

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_HEX = frozenset("0123456789abcdefABCDEF")

# RFC 3987 iunreserved (ASCII part) + gen-delims + sub-delims. '%' is handled
# separately because it must introduce a two digit hex escape.
_ASCII_ALLOWED = frozenset(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789"
    "-._~"
    ":/?#[]@"
    "!$&'()*+,;="
)


def _is_ucschar(char: str) -> bool:
    code = ord(char)
    if code < 0xA0:
        return False
    if 0xD800 <= code <= 0xDFFF or 0xFDD0 <= code <= 0xFDEF:
        return False
    return (code & 0xFFFE) != 0xFFFE


def iri_violation(value: str) -> str | None:
    """Return the reason *value* is not an absolute IRI, or ``None`` if it is."""
    if not isinstance(value, str) or not value:
        return "empty value"

    if not _SCHEME_RE.match(value):
        return "missing scheme"

    if value.count("#") > 1:
        return "more than one '#'"

    scheme_end = value.index(":")
    if scheme_end == len(value) - 1:
        return "nothing after the scheme"

    index = 0
    while index < len(value):
        char = value[index]
        if char == "%":
            escape = value[index + 1:index + 3]
            if len(escape) != 2 or not set(escape) <= _HEX:
                return f"malformed percent escape at position {index}"
            index += 3
            continue
        if char == " ":
            return f"raw space at position {index}"
        if char not in _ASCII_ALLOWED and not _is_ucschar(char):
            return f"forbidden character {char!r} at position {index}"
        index += 1

    return None


def make_iri(value: str) -> URIRef:
    """Return an IRI term for *value*.

    Raises
    ------
    InvalidIri
        If *value* is not an absolute IRI. Nothing is repaired or encoded.
    """
    reason = iri_violation(value)
    if reason is not None:
        raise InvalidIri(value, reason)
    return URIRef(value)


def percent_encode_local(value: str) -> str:
    """Percent-encode every character outside ``[A-Za-z0-9._~-]`` (UTF-8)."""
    return quote(value, safe="", encoding="utf-8", errors="strict")


def make_literal(lexical: str, datatype: str | URIRef | None = None, lang: str | None = None) -> Literal:
    """Build a literal term.

    A literal without datatype and language denotes ``xsd:string``. A
    language-tagged literal denotes ``rdf:langString`` and its tag is
    lowercased.
    """
    if lang:
        if datatype is not None and URIRef(datatype) != RDF.langString:
            raise RdfCoreError(f"Literal {lexical!r} cannot carry both a language tag and datatype {datatype}")
        return Literal(lexical, lang=lang.lower())

    if datatype is None or URIRef(datatype) == XSD.string:
        return Literal(lexical)

    return Literal(lexical, datatype=make_iri(str(datatype)))


class BlankNodeFactory:
    """Hands out blank nodes with labels unique to one construction session."""

    def __init__(self, prefix: str = "b") -> None:
        self._prefix = prefix
        self._counter = itertools.count()

    def new(self) -> BNode:
        return BNode(f"{self._prefix}{next(self._counter)}")
