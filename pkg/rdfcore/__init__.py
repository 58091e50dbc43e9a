"""
rdfcore
~~~~~~~

RDF term construction, triple patterns and the ``RdfGraph`` carrier used by
every other package.
"""

from .exceptions import InvalidIri, InvalidTriple, RdfCoreError, SaasError
from .graph import RdfGraph, Triple, TriplePattern, check_triple, graph_insert, graph_match, graph_merge
from .namespaces import CORE_PREFIXES, OWL, RDF, RDFS, SH, SKOS, XSD
from .terms import (
    BlankNodeFactory,
    iri_violation,
    make_iri,
    make_literal,
    percent_encode_local,
)

__all__ = [
    "SaasError",
    "RdfCoreError",
    "InvalidIri",
    "InvalidTriple",
    "RdfGraph",
    "Triple",
    "TriplePattern",
    "check_triple",
    "graph_insert",
    "graph_match",
    "graph_merge",
    "BlankNodeFactory",
    "iri_violation",
    "make_iri",
    "make_literal",
    "percent_encode_local",
    "CORE_PREFIXES",
    "OWL",
    "RDF",
    "RDFS",
    "SH",
    "SKOS",
    "XSD",
]
