"""
rdfcore.graph
~~~~~~~~~~~~~

``RdfGraph``: a set of triples plus a prefix table.

The triples are kept in an rdflib ``Graph`` (which already has set semantics
and indexed lookup); this wrapper adds triple well-formedness checks, the
insert-reports-novelty contract, prefix-conflict aware merging and variable
aware pattern matching.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from rdflib import BNode, Graph, Literal, URIRef
from rdflib.term import Node, Variable

from .exceptions import InvalidTriple
from .namespaces import CORE_PREFIXES

logger = logging.getLogger(__name__)

Triple = tuple[Node, Node, Node]
PatternTerm = Union[Node, Variable, None]


@dataclass(frozen=True, slots=True)
class TriplePattern:
    """A triple whose positions are concrete terms, variables or ``None`` wildcards.

    A variable occurring twice must bind to the same term in both positions.
    """

    subject: PatternTerm
    predicate: PatternTerm
    object: PatternTerm

    def __post_init__(self) -> None:
        if isinstance(self.predicate, (Literal, BNode)):
            raise InvalidTriple(f"Pattern predicate must be an IRI or variable, got {self.predicate!r}")

    def terms(self) -> tuple[PatternTerm, PatternTerm, PatternTerm]:
        return self.subject, self.predicate, self.object

    def variables(self) -> set[Variable]:
        return {t for t in self.terms() if isinstance(t, Variable)}

    def lookup_key(self, bindings: dict[Variable, Node] | None = None) -> tuple[Node | None, Node | None, Node | None]:
        """Return an rdflib-style ``(s, p, o)`` lookup with ``None`` for unbound positions."""
        bindings = bindings or {}
        key = []
        for term in self.terms():
            if isinstance(term, Variable):
                key.append(bindings.get(term))
            else:
                key.append(term)
        return key[0], key[1], key[2]

    def unify(self, triple: Triple, bindings: dict[Variable, Node] | None = None) -> dict[Variable, Node] | None:
        """Extend *bindings* so this pattern equals *triple*, or return ``None``."""
        result = dict(bindings) if bindings else {}
        for term, value in zip(self.terms(), triple):
            if term is None:
                continue
            if isinstance(term, Variable):
                bound = result.get(term)
                if bound is None:
                    result[term] = value
                elif bound != value:
                    return None
            elif term != value:
                return None
        return result

    def substitute(self, bindings: dict[Variable, Node]) -> Triple:
        """Instantiate the pattern; every variable must be bound."""
        values = []
        for term in self.terms():
            if isinstance(term, Variable):
                values.append(bindings[term])
            else:
                values.append(term)
        return values[0], values[1], values[2]


def check_triple(triple: Triple) -> Triple:
    """Raise ``InvalidTriple`` unless *triple* is valid RDF abstract syntax."""
    if len(triple) != 3:
        raise InvalidTriple(f"A triple has exactly three terms, got {len(triple)}")

    subject, predicate, obj = triple
    if not isinstance(subject, (URIRef, BNode)):
        raise InvalidTriple(f"Subject must be an IRI or blank node, got {subject!r}")
    if not isinstance(predicate, URIRef):
        raise InvalidTriple(f"Predicate must be an IRI, got {predicate!r}")
    if not isinstance(obj, (URIRef, BNode, Literal)):
        raise InvalidTriple(f"Object must be an RDF term, got {obj!r}")
    return triple


class RdfGraph:
    """A deduplicating set of triples with a prefix table.

    Graphs are single-writer. Once built they may be read concurrently.
    """

    def __init__(self, prefixes: dict[str, str] | None = None) -> None:
        self._graph = Graph(bind_namespaces="core")
        self._prefixes: dict[str, str] = {}
        self.warnings: list[str] = []
        for label, namespace in (prefixes if prefixes is not None else CORE_PREFIXES).items():
            self.bind(label, namespace)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_triples(cls, triples: Iterable[Triple], prefixes: dict[str, str] | None = None) -> "RdfGraph":
        graph = cls(prefixes)
        for triple in triples:
            graph.insert(triple)
        return graph

    @classmethod
    def wrap(cls, graph: Graph) -> "RdfGraph":
        """Adopt the triples and prefix bindings of an rdflib graph."""
        wrapped = cls(prefixes={})
        for label, namespace in graph.namespace_manager.namespaces():
            if label and label != "xml" and label not in wrapped._prefixes:
                wrapped.bind(label, str(namespace))
        for triple in graph:
            wrapped.insert(triple)
        return wrapped

    def bind(self, prefix: str, namespace: str) -> None:
        """Bind *prefix*; rebinding a label to another namespace replaces it."""
        self._prefixes[prefix] = str(namespace)
        self._graph.bind(prefix, str(namespace), override=True, replace=True)

    def copy(self) -> "RdfGraph":
        duplicate = RdfGraph(prefixes=self._prefixes)
        for triple in self._graph:
            duplicate._graph.add(triple)
        duplicate.warnings = list(self.warnings)
        return duplicate

    # ------------------------------------------------------------------
    # Operations
    # ------------------------------------------------------------------

    def insert(self, triple: Triple) -> bool:
        """Add *triple*; return ``True`` iff it was not already present."""
        check_triple(triple)
        if triple in self._graph:
            return False
        self._graph.add(triple)
        return True

    def remove(self, pattern: TriplePattern) -> int:
        """Remove every triple matching *pattern*; return how many were removed."""
        matched = self.match(pattern)
        for triple in matched:
            self._graph.remove(triple)
        return len(matched)

    def merge(self, other: "RdfGraph") -> "RdfGraph":
        """Return the union of both graphs.

        Prefix labels bound differently in both graphs keep this graph's
        binding and the conflict is recorded in ``warnings`` of the result.
        """
        merged = self.copy()
        for triple in other._graph:
            merged._graph.add(triple)

        for label, namespace in other._prefixes.items():
            existing = merged._prefixes.get(label)
            if existing is None:
                merged.bind(label, namespace)
            elif existing != namespace:
                message = f"prefix {label!r} kept as <{existing}>, ignored <{namespace}>"
                logger.warning("Prefix conflict while merging graphs: %s", message)
                merged.warnings.append(message)
        return merged

    def match(self, pattern: TriplePattern) -> list[Triple]:
        """Return every triple unifying with *pattern* (order unspecified)."""
        results = []
        for triple in self._graph.triples(pattern.lookup_key()):
            if pattern.unify(triple) is not None:
                results.append(triple)
        return results

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def prefixes(self) -> dict[str, str]:
        return dict(self._prefixes)

    @property
    def rdflib_graph(self) -> Graph:
        """The backing rdflib graph (read-only use: serializers, validators)."""
        return self._graph

    def triples(self) -> set[Triple]:
        return set(self._graph)

    def __len__(self) -> int:
        return len(self._graph)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._graph)

    def __contains__(self, triple: object) -> bool:
        return triple in self._graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RdfGraph):
            return NotImplemented
        return self.triples() == other.triples()

    def __repr__(self) -> str:
        return f"RdfGraph({len(self)} triples, prefixes={sorted(self._prefixes)})"


def graph_insert(graph: RdfGraph, triple: Triple) -> bool:
    return graph.insert(triple)


def graph_merge(graph: RdfGraph, other: RdfGraph) -> RdfGraph:
    return graph.merge(other)


def graph_match(graph: RdfGraph, pattern: TriplePattern) -> list[Triple]:
    return graph.match(pattern)
