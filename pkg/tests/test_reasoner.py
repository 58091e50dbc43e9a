import random
import unittest

from rdflib import Literal, URIRef
from rdflib.namespace import OWL, RDF, RDFS

from fixtures import bundled_path
from library import read_bytes
from rdfcore import RdfGraph
from reasoner import (
    RuleSetName,
    RuleSyntax,
    SaturationLimitExceeded,
    UnsafeRule,
    builtin_ruleset,
    format_stats,
    load_ontology,
    load_rules,
    ontology_axioms,
    saturate,
)
from scripts.closure_oracle import naive_closure
from serializers import parse_file

EX = "http://example.org/"
RDFS9 = """
@prefix ex: <http://example.org/> .
# rdfs9
{ ?c rdfs:subClassOf ?d . ?x a ?c . } => { ?x a ?d . } .
"""


def ex(name: str) -> URIRef:
    return URIRef(EX + name)


def _random_graph(rng: random.Random, size: int) -> RdfGraph:
    """Up to *size* triples over ten terms: five nodes, four predicates and one literal."""
    nodes = [ex(f"n{i}") for i in range(5)]
    predicates = [OWL.sameAs, RDF.type, RDFS.subClassOf, ex("p")]
    triples = set()
    for _ in range(size):
        obj = rng.choice(nodes + [Literal("v")])
        triples.add((rng.choice(nodes), rng.choice(predicates), obj))
    return RdfGraph.from_triples(triples)


class TestBuiltinRuleSets(unittest.TestCase):

    def test_sizes(self):
        self.assertEqual(len(builtin_ruleset(RuleSetName.SUB_CLASS_OF)), 2)
        self.assertEqual(len(builtin_ruleset(RuleSetName.SAME_AS)), 4)
        self.assertEqual(len(builtin_ruleset(RuleSetName.BOTH)), 6)

    def test_both_is_union(self):
        both = set(builtin_ruleset("both").rules)
        self.assertEqual(both, set(builtin_ruleset("sameas").rules) | set(builtin_ruleset("subclass").rules))

    def test_custom_is_not_builtin(self):
        with self.assertRaises(ValueError):
            builtin_ruleset(RuleSetName.CUSTOM)


class TestSaturate(unittest.TestCase):

    def test_rdfs9_single_step(self):
        graph = RdfGraph.from_triples([(ex("x"), RDF.type, ex("C"))])
        ontology = RdfGraph.from_triples([(ex("C"), RDFS.subClassOf, ex("D"))])
        result, stats = saturate(graph, builtin_ruleset("subclass"), ontology)
        self.assertEqual(result.triples() - graph.triples(), {(ex("x"), RDF.type, ex("D"))})
        self.assertEqual(stats.added_triples, 1)

    def test_subclass_chain(self):
        chain = [(ex(f"C{i}"), RDFS.subClassOf, ex(f"C{i + 1}")) for i in range(1, 5)]
        result, stats = saturate(RdfGraph.from_triples(chain), builtin_ruleset("subclass"))
        self.assertEqual(stats.added_triples, 6)
        self.assertEqual(len(result), 10)

    def test_sameas_golden(self):
        graph = RdfGraph.from_triples([(ex("a"), OWL.sameAs, ex("b")), (ex("a"), ex("p"), ex("o"))])
        result, stats = saturate(graph, builtin_ruleset("sameas"))
        golden = parse_file(bundled_path("golden/sameas_micro.nt"))
        self.assertEqual(result.triples(), golden.triples())
        self.assertEqual(stats.added_triples, 4)

    def test_added_is_size_difference(self):
        graph = parse_file(bundled_path("rdf/conforming.ttl"))
        result, stats = saturate(graph, builtin_ruleset("both"), load_ontology())
        self.assertEqual(stats.added_triples, len(result) - len(graph))
        self.assertGreater(stats.added_triples, 0)

    def test_input_untouched(self):
        graph = RdfGraph.from_triples([(ex("a"), OWL.sameAs, ex("b"))])
        saturate(graph, builtin_ruleset("sameas"))
        self.assertEqual(len(graph), 1)

    def test_empty_graph_with_bundled_ontology(self):
        result, stats = saturate(RdfGraph(), builtin_ruleset("both"), load_ontology())
        expected = read_bytes(bundled_path("oracle/empty_graph_both.txt")).decode().strip()
        self.assertTrue(format_stats(stats).startswith(expected + " "))
        self.assertEqual(len(result), 19)
        self.assertTrue(all(t[1] == RDFS.subClassOf for t in result))

    def test_empty_everything(self):
        result, stats = saturate(RdfGraph(), builtin_ruleset("both"))
        self.assertEqual((len(result), stats.added_triples, stats.passes), (0, 0, 0))

    def test_literal_subjects_are_never_derived(self):
        graph = RdfGraph.from_triples([(ex("a"), OWL.sameAs, Literal("x"))])
        result, _ = saturate(graph, builtin_ruleset("sameas"))
        self.assertTrue(all(not isinstance(s, Literal) for s, _, _ in result))

    def test_limit(self):
        chain = [(ex(f"C{i}"), RDFS.subClassOf, ex(f"C{i + 1}")) for i in range(10)]
        with self.assertRaises(SaturationLimitExceeded):
            saturate(RdfGraph.from_triples(chain), builtin_ruleset("subclass"), max_triples=12)

    def test_format_stats(self):
        _, stats = saturate(RdfGraph(), builtin_ruleset("subclass"))
        self.assertRegex(format_stats(stats), r"^added=0 passes=0 ms=\d+$")


class TestSaturationProperties(unittest.TestCase):

    def test_matches_oracle(self):
        rng = random.Random(42)
        for _ in range(200):
            graph = _random_graph(rng, rng.randint(0, 50))
            for name in ("sameas", "subclass", "both"):
                ruleset = builtin_ruleset(name)
                result, _ = saturate(graph, ruleset)
                self.assertEqual(result.triples(), naive_closure(graph, name).triples())

    def test_matches_oracle_with_ontology(self):
        rng = random.Random(5)
        ontology = load_ontology()
        shell, asset = URIRef("https://w3id.org/i40/rami#AssetShell"), URIRef("https://w3id.org/i40/rami#Asset")
        for _ in range(5):
            graph = _random_graph(rng, 6)
            graph.insert((ex("n0"), RDF.type, shell))
            graph.insert((ex("n1"), RDF.type, asset))
            ruleset = builtin_ruleset("both")
            result, _ = saturate(graph, ruleset, ontology)
            expected = naive_closure(graph, "both", ontology_axioms(ontology))
            self.assertEqual(result.triples(), expected.triples())

    def test_idempotent(self):
        rng = random.Random(8)
        for _ in range(40):
            graph = _random_graph(rng, rng.randint(1, 20))
            for name in ("sameas", "subclass", "both"):
                once, _ = saturate(graph, builtin_ruleset(name))
                twice, stats = saturate(once, builtin_ruleset(name))
                self.assertEqual(twice.triples(), once.triples())
                self.assertEqual(stats.added_triples, 0)

    def test_monotone(self):
        rng = random.Random(13)
        for _ in range(40):
            small = _random_graph(rng, rng.randint(0, 10))
            large = small.merge(_random_graph(rng, rng.randint(0, 10)))
            for name in ("sameas", "subclass", "both"):
                a, _ = saturate(small, builtin_ruleset(name))
                b, _ = saturate(large, builtin_ruleset(name))
                self.assertLessEqual(a.triples(), b.triples())

    def test_sameas_relation_closed(self):
        rng = random.Random(21)
        for _ in range(40):
            result, _ = saturate(_random_graph(rng, rng.randint(1, 20)), builtin_ruleset("sameas"))
            pairs = {(s, o) for s, p, o in result if p == OWL.sameAs}
            for a, b in pairs:
                # a literal can never become a subject
                if not isinstance(b, Literal):
                    self.assertIn((b, a), pairs)
                for c, d in pairs:
                    if b == c:
                        self.assertIn((a, d), pairs)


class TestLoadRules(unittest.TestCase):

    def test_rdfs9_equals_builtin(self):
        ruleset = load_rules(RDFS9)
        self.assertIs(ruleset.name, RuleSetName.CUSTOM)
        self.assertEqual(ruleset.rules, (builtin_ruleset("subclass").rules[0],))

    def test_empty_file(self):
        self.assertEqual(len(load_rules(b"")), 0)
        self.assertEqual(len(load_rules("# only a comment\n")), 0)

    def test_unsafe_rule(self):
        with self.assertRaises(UnsafeRule) as ctx:
            load_rules("{ ?a owl:sameAs ?b . } => { ?a owl:sameAs ?z . } .")
        self.assertEqual(ctx.exception.variable, "z")

    def test_syntax_error_line(self):
        with self.assertRaises(RuleSyntax) as ctx:
            load_rules("\n\n{ ?a owl:sameAs ?b . } { ?b owl:sameAs ?a . } .")
        self.assertEqual(ctx.exception.line, 3)

    def test_undeclared_prefix(self):
        with self.assertRaises(RuleSyntax):
            load_rules("{ ?a ex:p ?b . } => { ?b ex:p ?a . } .")

    def test_custom_rules_saturate(self):
        rules = load_rules("@prefix ex: <http://example.org/> .\n{ ?a ex:p ?b . } => { ?b ex:p ?a . } .")
        result, stats = saturate(RdfGraph.from_triples([(ex("a"), ex("p"), ex("b"))]), rules)
        self.assertIn((ex("b"), ex("p"), ex("a")), result)
        self.assertEqual(stats.added_triples, 1)


if __name__ == "__main__":
    unittest.main()
