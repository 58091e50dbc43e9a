"""
Brute-force closure used to cross-check the reasoner.

Each rule is written out as nested loops over the whole triple set, with no
indexes, no pattern matching and no delta tracking. Passes repeat until one
adds nothing. Slow on purpose; only for small graphs.

Usage:
  python -m scripts.closure_oracle <graph.ttl|.nt> [sameas|subclass|both]
"""

import sys

from rdflib import Literal, URIRef
from rdflib.namespace import OWL, RDF, RDFS

from rdfcore import RdfGraph
from reasoner import load_ontology, ontology_axioms
from serializers import parse_file


def _sub_class_of_pass(known: set) -> set:
    derived = set()
    for c, p1, d in known:
        if p1 != RDFS.subClassOf:
            continue
        for x, p2, o2 in known:
            # rdfs9
            if p2 == RDF.type and o2 == c:
                derived.add((x, RDF.type, d))
            # rdfs11
            if p2 == RDFS.subClassOf and x == d:
                derived.add((c, RDFS.subClassOf, o2))
    return derived


def _same_as_pass(known: set) -> set:
    derived = set()
    for a, p1, b in known:
        if p1 != OWL.sameAs:
            continue
        derived.add((b, OWL.sameAs, a))
        for s, p2, o in known:
            if p2 == OWL.sameAs and s == b:
                derived.add((a, OWL.sameAs, o))
            if s == a:
                derived.add((b, p2, o))
            if o == a:
                derived.add((s, p2, b))
    return derived


_PASSES = {
    "sameas": (_same_as_pass,),
    "subclass": (_sub_class_of_pass,),
    "both": (_same_as_pass, _sub_class_of_pass),
}


def naive_closure(graph: RdfGraph, ruleset: str = "both", axioms=frozenset()) -> RdfGraph:
    """Return ``graph`` plus everything derivable from ``graph`` and *axioms*, minus the axioms."""
    passes = _PASSES[ruleset]
    known = set(graph) | set(axioms)
    while True:
        new = set()
        for apply in passes:
            for s, p, o in apply(known):
                if isinstance(s, Literal) or not isinstance(p, URIRef):
                    continue
                if (s, p, o) not in known:
                    new.add((s, p, o))
        if not new:
            break
        known |= new

    result = graph.copy()
    for triple in known - set(axioms):
        result.insert(triple)
    return result


def main(argv=None) -> int:
    argv = argv if argv is not None else sys.argv[1:]
    if not argv:
        print(__doc__, file=sys.stderr)
        return 1
    graph = parse_file(argv[0])
    name = argv[1] if len(argv) > 1 else "both"
    if name not in _PASSES:
        print(f"unknown rule set {name!r}", file=sys.stderr)
        return 1
    closed = naive_closure(graph, name, ontology_axioms(load_ontology()))
    print(f"added={len(closed) - len(graph)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
