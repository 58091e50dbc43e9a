import json
import random
import unittest

from rdflib import Literal, URIRef
from rdflib.namespace import RDFS, XSD

from aas_xml import parse_environment
from fixtures import bundled_path
from library import read_bytes
from mapper import map_environment
from rdfcore import RdfGraph
from serializers import (
    RdfSyntaxError,
    SerializationFormat,
    format_for_path,
    parse,
    parse_file,
    serialize,
    serialized_sizes,
)

EX = "http://example.org/"
TEXTS = ["plain", "with \"quotes\"", "line\nbreak", "back\\slash", "Größe", "tab\there", ""]
TYPED = [
    Literal("2.5", datatype=XSD.double),
    Literal("-0.125", datatype=XSD.double),
    Literal("true", datatype=XSD.boolean),
    Literal("false", datatype=XSD.boolean),
    Literal("2024-01-31", datatype=XSD.date),
]


def _random_graph(rng: random.Random, size: int) -> RdfGraph:
    graph = RdfGraph()
    graph.bind("ex", EX)
    while len(graph) < size:
        subject = URIRef(f"{EX}s{rng.randint(0, 20)}")
        predicate = URIRef(f"{EX}p{rng.randint(0, 5)}")
        choice = rng.randint(0, 4)
        if choice == 0:
            obj = URIRef(f"{EX}o{rng.randint(0, 20)}")
        elif choice == 1:
            obj = Literal(rng.choice(TEXTS))
        elif choice == 2:
            obj = Literal(rng.choice(TEXTS) or "x", lang=rng.choice(["en", "de", "en-gb"]))
        elif choice == 3:
            obj = Literal(str(rng.randint(-50, 50)), datatype=XSD.integer)
        else:
            obj = rng.choice(TYPED)
        graph.insert((subject, predicate, obj))
    return graph


def _synthetic_graph() -> RdfGraph:
    env = parse_environment(read_bytes(bundled_path("aas/synthetic_env.xml")))
    return map_environment(env)[0]


class TestSerialize(unittest.TestCase):

    def test_empty_ntriples(self):
        self.assertEqual(serialize(RdfGraph(), SerializationFormat.NTRIPLES), b"")

    def test_ntriples_sorted_lf(self):
        data = serialize(_synthetic_graph(), SerializationFormat.NTRIPLES)
        lines = data.split(b"\n")
        self.assertEqual(lines[-1], b"")
        self.assertEqual(lines[:-1], sorted(lines[:-1]))
        self.assertNotIn(b"\r", data)

    def test_nquads_equals_ntriples(self):
        graph = _synthetic_graph()
        self.assertEqual(serialize(graph, SerializationFormat.NQUADS), serialize(graph, SerializationFormat.NTRIPLES))

    def test_shell_turtle(self):
        data = serialize(parse_file(bundled_path("rdf/raspberry_pi_shell.ttl")), SerializationFormat.TURTLE)
        self.assertIn(b"a rami:AssetShell", data)
        self.assertIn(b'rdfs:label "RaspberryPiModel3B+"', data)

    def test_rdfxml_declares_namespaces_on_root(self):
        data = serialize(parse_file(bundled_path("rdf/raspberry_pi_shell.ttl")), SerializationFormat.RDFXML)
        self.assertIn(b'xmlns:rami="https://w3id.org/i40/rami#"', data)
        self.assertNotIn(b"xml:base", data)

    def test_jsonld_shape(self):
        document = json.loads(serialize(parse_file(bundled_path("rdf/raspberry_pi_shell.ttl")), SerializationFormat.JSONLD))
        self.assertEqual(set(document), {"@context", "@graph"})
        self.assertEqual(document["@context"]["rami"], "https://w3id.org/i40/rami#")
        self.assertEqual(len(document["@graph"]), 1)

    def test_jsonld_deterministic(self):
        graph = _synthetic_graph()
        self.assertEqual(serialize(graph, SerializationFormat.JSONLD), serialize(graph.copy(), SerializationFormat.JSONLD))

    def test_small_fixture_sizes(self):
        sizes = serialized_sizes(parse_file(bundled_path("rdf/raspberry_pi_shell.ttl")))
        self.assertGreaterEqual(sizes[SerializationFormat.NQUADS], sizes[SerializationFormat.TURTLE])

    def test_mapped_fixture_size_ordering(self):
        sizes = serialized_sizes(_synthetic_graph())
        self.assertGreaterEqual(sizes[SerializationFormat.NQUADS], sizes[SerializationFormat.TURTLE])
        self.assertGreaterEqual(sizes[SerializationFormat.NQUADS], sizes[SerializationFormat.JSONLD])
        self.assertEqual(set(sizes), set(SerializationFormat))


class TestParse(unittest.TestCase):

    def test_round_trip(self):
        rng = random.Random(2020)
        for _ in range(200):
            graph = _random_graph(rng, rng.randint(1, 12))
            for fmt in (SerializationFormat.NTRIPLES, SerializationFormat.TURTLE):
                with self.subTest(fmt=fmt.flag):
                    self.assertEqual(parse(serialize(graph, fmt), fmt).triples(), graph.triples())

    def test_undefined_prefix(self):
        with self.assertRaises(RdfSyntaxError) as ctx:
            parse(b"ex:a ex:b ex:c .\n", SerializationFormat.TURTLE)
        self.assertGreaterEqual(ctx.exception.line, 1)

    def test_broken_ntriples_line(self):
        doc = b"<http://example.org/a> <http://example.org/b> <http://example.org/c> .\nbroken line\n"
        with self.assertRaises(RdfSyntaxError) as ctx:
            parse(doc, SerializationFormat.NTRIPLES)
        self.assertEqual(ctx.exception.line, 2)

    def test_write_only_formats(self):
        with self.assertRaises(ValueError):
            parse(b"{}", SerializationFormat.JSONLD)

    def test_ontology_has_subclass_axioms(self):
        ontology = parse_file(bundled_path("ontology/rami.ttl"))
        self.assertGreater(sum(1 for t in ontology if t[1] == RDFS.subClassOf), 0)

    def test_format_for_path(self):
        self.assertIs(format_for_path("out/x.ttl"), SerializationFormat.TURTLE)
        self.assertIs(format_for_path("x.NQ"), SerializationFormat.NQUADS)
        with self.assertRaises(ValueError):
            format_for_path("x.csv")


if __name__ == "__main__":
    unittest.main()
