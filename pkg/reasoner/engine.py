"""
reasoner.engine
~~~~~~~~~~~~~~~

Semi-naive forward chaining. Each pass matches rule premises against the
triples derived in the previous pass (joined with everything known so far)
and stops when a pass derives nothing new.

The ontology takes part through its ``rdfs:subClassOf``, ``rdf:type`` and
``owl:sameAs`` triples. Those axioms support derivations but are not copied
into the result unless the input already holds them or they are re-derived
as something new, so ``added`` always equals ``len(output) - len(input)``.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import Iterable, Iterator

from rdflib import Literal, URIRef
from rdflib.namespace import OWL, RDF, RDFS
from rdflib.term import Node, Variable

from library import Stopwatch
from rdfcore import RdfGraph, Triple, TriplePattern
from .exceptions import SaturationLimitExceeded
from .patterns import Rule, RuleSet, SaturationStats

logger = logging.getLogger(__name__)

DEFAULT_MAX_TRIPLES = 5_000_000

AXIOM_PREDICATES = frozenset({RDFS.subClassOf, RDF.type, OWL.sameAs})

Bindings = dict[Variable, Node]


def ontology_axioms(ontology: RdfGraph | None) -> set[Triple]:
    """The ontology triples the rules can use."""
    if ontology is None:
        return set()
    return {t for t in ontology if t[1] in AXIOM_PREDICATES}


class _TripleIndex:
    """Set of triples indexed by subject, predicate and object."""

    def __init__(self, triples: Iterable[Triple] = ()) -> None:
        self.triples: set[Triple] = set()
        self._by_s: dict[Node, set[Triple]] = defaultdict(set)
        self._by_p: dict[Node, set[Triple]] = defaultdict(set)
        self._by_o: dict[Node, set[Triple]] = defaultdict(set)
        for triple in triples:
            self.add(triple)

    def add(self, triple: Triple) -> bool:
        if triple in self.triples:
            return False
        self.triples.add(triple)
        s, p, o = triple
        self._by_s[s].add(triple)
        self._by_p[p].add(triple)
        self._by_o[o].add(triple)
        return True

    def __len__(self) -> int:
        return len(self.triples)

    def candidates(self, s: Node | None, p: Node | None, o: Node | None) -> Iterable[Triple]:
        if s is not None and p is not None and o is not None:
            return ((s, p, o),) if (s, p, o) in self.triples else ()
        # smallest bucket among the bound positions
        buckets = []
        if s is not None:
            buckets.append(self._by_s.get(s, ()))
        if p is not None:
            buckets.append(self._by_p.get(p, ()))
        if o is not None:
            buckets.append(self._by_o.get(o, ()))
        if not buckets:
            return self.triples
        return min(buckets, key=len)


def _join(index: _TripleIndex, premises: list[TriplePattern], bindings: Bindings) -> Iterator[Bindings]:
    if not premises:
        yield bindings
        return
    first, rest = premises[0], premises[1:]
    for triple in list(index.candidates(*first.lookup_key(bindings))):
        extended = first.unify(triple, bindings)
        if extended is not None:
            yield from _join(index, rest, extended)


def _admissible(triple: Triple) -> bool:
    subject, predicate, _ = triple
    return not isinstance(subject, Literal) and isinstance(predicate, URIRef)


def _apply(rule: Rule, index: _TripleIndex, delta: _TripleIndex) -> set[Triple]:
    """Conclusions of *rule* using at least one triple of *delta*."""
    derived: set[Triple] = set()
    for position, premise in enumerate(rule.premises):
        others = [p for i, p in enumerate(rule.premises) if i != position]
        for triple in list(delta.candidates(*premise.lookup_key())):
            bindings = premise.unify(triple)
            if bindings is None:
                continue
            for solution in _join(index, others, bindings):
                for conclusion in rule.conclusions:
                    produced = conclusion.substitute(solution)
                    if _admissible(produced) and produced not in index.triples:
                        derived.add(produced)
    return derived


def saturate(
    graph: RdfGraph,
    ruleset: RuleSet,
    ontology: RdfGraph | None = None,
    max_triples: int = DEFAULT_MAX_TRIPLES,
) -> tuple[RdfGraph, SaturationStats]:
    """Materialize the fixpoint of *ruleset* over *graph* plus the ontology axioms.

    Returns a new graph (the input is left untouched) and the run statistics.

    Raises:
        SaturationLimitExceeded: If the working set exceeds *max_triples*.
    """
    axioms = ontology_axioms(ontology)

    with Stopwatch() as watch:
        index = _TripleIndex(graph)
        for axiom in axioms:
            index.add(axiom)
        delta = _TripleIndex(index.triples)
        derived_all: set[Triple] = set()
        passes = 0

        while len(delta):
            passes += 1
            derived: set[Triple] = set()
            for rule in ruleset.rules:
                derived |= _apply(rule, index, delta)

            for triple in derived:
                index.add(triple)
            derived_all |= derived
            logger.debug("Saturation pass %d derived %d triples", passes, len(derived))

            if len(index) > max_triples:
                raise SaturationLimitExceeded(max_triples)
            delta = _TripleIndex(derived)

        result = graph.copy()
        for triple in derived_all:
            result.insert(triple)

    stats = SaturationStats(
        added_triples=len(result) - len(graph),
        passes=passes,
        duration_ms=watch.ms,
    )
    logger.info("Saturated %d triples with %s rules: +%d", len(graph), ruleset.name.value, stats.added_triples)
    return result, stats
