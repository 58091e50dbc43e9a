"""Loading the SAAS ontology and reading facts off it."""

from __future__ import annotations

import logging
from functools import lru_cache
from pathlib import Path

import requests
from rdflib import Literal, URIRef
from rdflib.namespace import OWL, RDF, RDFS, SKOS

from fixtures import bundled_path
from library import read_bytes
from rdfcore import RdfGraph
from serializers import SerializationFormat, parse, parse_file
from .exceptions import OntologyFetchError

logger = logging.getLogger(__name__)

BUNDLED_ONTOLOGY = bundled_path("ontology/rami.ttl")
RAMI_PREFIX = "rami"


@lru_cache(maxsize=1)
def _bundled_ontology() -> RdfGraph:
    return parse(read_bytes(BUNDLED_ONTOLOGY), SerializationFormat.TURTLE)


def fetch_ontology(url: str, timeout: float = 30.0) -> RdfGraph:
    """Download and parse an ontology (Turtle, or N-Triples for ``.nt`` URLs).

    Raises:
        OntologyFetchError: On any transport or HTTP error.
    """
    logger.info("Fetching ontology from %s", url)
    try:
        response = requests.get(url, timeout=timeout, headers={"Accept": "text/turtle, application/n-triples"})
        response.raise_for_status()
    except requests.RequestException as exc:
        raise OntologyFetchError(url, str(exc)) from exc

    fmt = SerializationFormat.NTRIPLES if url.lower().endswith(".nt") else SerializationFormat.TURTLE
    return parse(response.content, fmt)


def load_ontology(path: str | Path | None = None, url: str | None = None) -> RdfGraph:
    """Return the ontology from *url* (explicit only), *path*, or the bundled file."""
    if url:
        return fetch_ontology(url)
    if path:
        return parse_file(path)
    return _bundled_ontology().copy()


def rami_namespace(ontology: RdfGraph | None = None) -> str:
    """The namespace bound to the ``rami`` prefix in *ontology* (bundled by default)."""
    graph = ontology if ontology is not None else _bundled_ontology()
    try:
        return graph.prefixes[RAMI_PREFIX]
    except KeyError:
        raise ValueError("Ontology does not bind the 'rami' prefix") from None


def abstract_classes(ontology: RdfGraph) -> set[URIRef]:
    """Classes annotated ``skos:note "abstract"``."""
    return {s for s, p, o in ontology if p == SKOS.note and isinstance(o, Literal) and str(o) == "abstract"}


def superclasses(ontology: RdfGraph, cls: URIRef) -> set[URIRef]:
    """All transitive ``rdfs:subClassOf`` ancestors of *cls*."""
    seen: set[URIRef] = set()
    frontier = [cls]
    while frontier:
        current = frontier.pop()
        for _, _, parent in ontology.rdflib_graph.triples((current, RDFS.subClassOf, None)):
            if isinstance(parent, URIRef) and parent not in seen:
                seen.add(parent)
                frontier.append(parent)
    return seen


def ontology_properties(ontology: RdfGraph) -> set[URIRef]:
    """Subjects typed as an OWL or RDF property."""
    kinds = {OWL.ObjectProperty, OWL.DatatypeProperty, OWL.AnnotationProperty, RDF.Property}
    return {s for s, p, o in ontology if p == RDF.type and o in kinds and isinstance(s, URIRef)}
