"""Namespaces used across the toolkit.

The rami namespace is not defined here. It is pinned in the header of
the bundled ontology and read from there (see ``reasoner.ontology``).
"""

from rdflib import Namespace
from rdflib.namespace import OWL, RDF, RDFS, SKOS, XSD

SH = Namespace("http://www.w3.org/ns/shacl#")

# Prefixes every SAAS graph starts with.
CORE_PREFIXES: dict[str, str] = {
    "rdf": str(RDF),
    "rdfs": str(RDFS),
    "xsd": str(XSD),
    "owl": str(OWL),
    "skos": str(SKOS),
}

__all__ = ["OWL", "RDF", "RDFS", "SKOS", "XSD", "SH", "CORE_PREFIXES"]
