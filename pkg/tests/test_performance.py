import os
import unittest

from aas_xml import load_environments, parse_environment, xml_metrics
from library import Stopwatch
from mapper import MappingConfig, map_environment
from reasoner import builtin_ruleset, load_ontology, saturate
from fixtures import bundled_path
from shacl import load_shapes_dir, validate

LIMIT_MS = 5000

PROPERTY = """
        <aas:submodelElement>
          <aas:property>
            <aas:idShort>Value{i}</aas:idShort>
            <aas:semanticId>
              <aas:keys>
                <aas:key type="GlobalReference" local="false" idType="URI">http://example.org/concepts/value{i}</aas:key>
              </aas:keys>
            </aas:semanticId>
            <aas:valueType>int</aas:valueType>
            <aas:value>{i}</aas:value>
          </aas:property>
        </aas:submodelElement>"""

SUBMODEL = """
    <aas:submodel>
      <aas:idShort>Block{n}</aas:idShort>
      <aas:description><aas:langString lang="en">Block {n}</aas:langString></aas:description>
      <aas:identification idType="URI">http://example.org/aas/submodels/block{n}</aas:identification>
      <aas:kind>Instance</aas:kind>
      <aas:submodelElements>{elements}
      </aas:submodelElements>
    </aas:submodel>"""


def large_environment(submodels: int = 15, properties: int = 25) -> bytes:
    blocks = []
    for n in range(submodels):
        elements = "".join(PROPERTY.format(i=n * properties + i) for i in range(properties))
        blocks.append(SUBMODEL.format(n=n, elements=elements))
    return (
        '<aas:aasenv xmlns:aas="http://www.admin-shell.io/aas/2/0">'
        f"<aas:submodels>{''.join(blocks)}</aas:submodels></aas:aasenv>"
    ).encode("utf-8")


class TestDeskScale(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.doc = large_environment()

    def test_input_size(self):
        self.assertGreaterEqual(xml_metrics(self.doc).node_count, 3000)

    def test_pipeline_within_bounds(self):
        with Stopwatch() as mapping:
            graph, report = map_environment(parse_environment(self.doc), MappingConfig())
        self.assertFalse(report.has_skips)
        self.assertLess(mapping.ms, LIMIT_MS)

        shapes = load_shapes_dir(bundled_path("shapes"))
        with Stopwatch() as validation:
            validate(graph, shapes)
        self.assertLess(validation.ms, LIMIT_MS)

        ontology = load_ontology()
        with Stopwatch() as reasoning:
            saturated, stats = saturate(graph, builtin_ruleset("both"), ontology)
        self.assertLess(reasoning.ms, LIMIT_MS)
        self.assertGreater(stats.added_triples, 0)


@unittest.skipUnless(os.environ.get("SAAS_RASPBERRY_PI_AASX"), "SAAS_RASPBERRY_PI_AASX is not set")
class TestRaspberryPiExample(unittest.TestCase):

    def test_leaves_and_nodes(self):
        nodes = leaves = 0
        for _, doc in load_environments(os.environ["SAAS_RASPBERRY_PI_AASX"]):
            metrics = xml_metrics(doc)
            nodes += metrics.node_count
            leaves += metrics.leaf_count
        self.assertEqual((leaves, nodes), (1161, 2864))


if __name__ == "__main__":
    unittest.main()
