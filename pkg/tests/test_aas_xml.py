import io
import unittest
import zipfile

from lxml import etree

from aas import IdType, Kind, PropertyElement, environment_census
from aas_xml import (
    NoEnvironmentFound,
    NotAnArchive,
    SchemaViolation,
    XmlSyntax,
    extract_aasx,
    parse_environment,
    write_environment,
    xml_metrics,
)
from fixtures import bundled_path
from library import read_bytes

NS2 = 'xmlns:aas="http://www.admin-shell.io/aas/2/0"'


def _fixture(name: str) -> bytes:
    return read_bytes(bundled_path(f"aas/{name}"))


def _zip(entries: dict[str, bytes]) -> bytes:
    buffer = io.BytesIO()
    with zipfile.ZipFile(buffer, "w") as archive:
        for name, data in entries.items():
            archive.writestr(name, data)
    return buffer.getvalue()


def _walk_counts(doc: bytes) -> tuple[int, int]:
    """Second implementation: recursive walk over element children."""
    def walk(element) -> tuple[int, int]:
        children = [c for c in element if isinstance(c.tag, str)]
        nodes, leaves = 1, 0 if children else 1
        for child in children:
            n, l = walk(child)
            nodes += n
            leaves += l
        return nodes, leaves
    return walk(etree.fromstring(doc))


class TestParseEnvironment(unittest.TestCase):

    def test_raspberry_pi_shell(self):
        env = parse_environment(_fixture("raspberry_pi_shell.xml"))
        self.assertEqual(len(env.shells), 1)
        shell = env.shells[0]
        self.assertEqual(shell.id_short, "RaspberryPiModel3B+")
        self.assertIs(shell.identification.id_type, IdType.URI)
        self.assertEqual(shell.identification.value, "http://iais.fraunhofer.de/en/aas/examples/raspberry_pi_3b_plus")

        key = shell.asset_refs[0].target
        self.assertEqual(key.key_type, "Asset")
        self.assertTrue(key.local)
        self.assertEqual(key.value, "http://iais.fraunhofer.de/en/aas/devices/rspbry/755003377")
        self.assertIs(env.assets[0].kind, Kind.INSTANCE)

    def test_empty_aasenv(self):
        env = parse_environment(f"<aas:aasenv {NS2}/>".encode())
        self.assertEqual(environment_census(env).total, 0)

    def test_no_namespace(self):
        env = parse_environment(b"<aasenv><assets><asset><identification idType='URI'>urn:a:b</identification>"
                                b"<kind>Type</kind></asset></assets></aasenv>")
        self.assertIs(env.assets[0].kind, Kind.TYPE)

    def test_synthetic_census(self):
        census = environment_census(parse_environment(_fixture("synthetic_env.xml")))
        self.assertEqual(
            (census.shells, census.assets, census.submodels, census.elements, census.concept_descriptions),
            (1, 1, 3, 14, 3),
        )

    def test_synthetic_details(self):
        env = parse_environment(_fixture("synthetic_env.xml"))
        self.assertEqual(env.shells[0].descriptions, (("EN", "Hydraulic press shell"), ("de", "Schale der Hydraulikpresse")))
        self.assertEqual(len(env.shells[0].submodel_refs), 3)
        self.assertIs(env.submodels[2].identification.id_type, IdType.IRDI)
        max_temp = env.submodels[0].elements[0]
        self.assertIsInstance(max_temp, PropertyElement)
        self.assertEqual((max_temp.value, max_temp.value_type), ("85", "int"))
        cd = env.concept_descriptions[0]
        self.assertEqual(cd.attributes["preferredName"], "Maximum temperature")
        self.assertEqual(cd.attributes["unit"], "degC")
        self.assertEqual(cd.definitions, (("en", "Highest permissible operating temperature"),))

    def test_deterministic(self):
        doc = _fixture("synthetic_env.xml")
        self.assertEqual(parse_environment(doc), parse_environment(doc))

    def test_census_bounded_by_leaves(self):
        for name in ("raspberry_pi_shell.xml", "synthetic_env.xml", "irdi_shell.xml"):
            doc = _fixture(name)
            self.assertLessEqual(environment_census(parse_environment(doc)).total, xml_metrics(doc).leaf_count)

    def test_shell_without_identification(self):
        doc = f"<aas:aasenv {NS2}><aas:assetAdministrationShells><aas:assetAdministrationShell>" \
              f"<aas:idShort>x</aas:idShort></aas:assetAdministrationShell></aas:assetAdministrationShells></aas:aasenv>"
        with self.assertRaises(SchemaViolation) as ctx:
            parse_environment(doc.encode())
        self.assertIn("identification", ctx.exception.reason)

    def test_asset_without_kind(self):
        doc = f"<aas:aasenv {NS2}><aas:assets><aas:asset><aas:identification idType='URI'>urn:a:b" \
              f"</aas:identification></aas:asset></aas:assets></aas:aasenv>"
        with self.assertRaises(SchemaViolation):
            parse_environment(doc.encode())

    def test_mixed_content(self):
        doc = f"<aas:aasenv {NS2}><aas:assets><aas:asset><aas:identification idType='URI'>urn:<aas:b/>x" \
              f"</aas:identification><aas:kind>Instance</aas:kind></aas:asset></aas:assets></aas:aasenv>"
        with self.assertRaises(SchemaViolation) as ctx:
            parse_environment(doc.encode())
        self.assertEqual(ctx.exception.reason, "mixed content in value node")

    def test_malformed_xml(self):
        with self.assertRaises(XmlSyntax) as ctx:
            parse_environment(b"<aasenv>\n<assets>\n</aasenv>")
        self.assertGreaterEqual(ctx.exception.line, 1)

    def test_wrong_root(self):
        with self.assertRaises(SchemaViolation):
            parse_environment(b"<root/>")

    def test_invalid_uri_identification_is_kept(self):
        doc = f"<aas:aasenv {NS2}><aas:assets><aas:asset><aas:identification idType='URI'>http://ex.org/bad asset" \
              f"</aas:identification><aas:kind>Instance</aas:kind></aas:asset></aas:assets></aas:aasenv>"
        identification = parse_environment(doc.encode()).assets[0].identification
        self.assertEqual(identification.value, "http://ex.org/bad asset")
        self.assertIsNotNone(identification.uri_violation())

    def test_unknown_children_kept_as_extras(self):
        doc = f"<aas:aasenv {NS2}><aas:assets><aas:asset><aas:identification idType='URI'>urn:a:b" \
              f"</aas:identification><aas:kind>Instance</aas:kind><aas:administration/></aas:asset>" \
              f"</aas:assets></aas:aasenv>"
        self.assertIn("administration", parse_environment(doc.encode()).assets[0].extras)


class TestXmlMetrics(unittest.TestCase):

    def test_small_tree(self):
        metrics = xml_metrics(b"<a><b/><c>t</c></a>")
        self.assertEqual((metrics.node_count, metrics.leaf_count), (3, 2))

    def test_single_root(self):
        metrics = xml_metrics(b"<a/>")
        self.assertEqual((metrics.node_count, metrics.leaf_count), (1, 1))

    def test_comments_are_not_nodes(self):
        metrics = xml_metrics(b"<a><!-- c --><?pi x?><b/></a>")
        self.assertEqual((metrics.node_count, metrics.leaf_count), (2, 1))

    def test_agrees_with_walk(self):
        for name in ("raspberry_pi_shell.xml", "synthetic_env.xml", "irdi_shell.xml"):
            doc = _fixture(name)
            metrics = xml_metrics(doc)
            self.assertEqual((metrics.node_count, metrics.leaf_count), _walk_counts(doc))
            self.assertLessEqual(metrics.leaf_count, metrics.node_count)

    def test_malformed(self):
        with self.assertRaises(XmlSyntax):
            xml_metrics(b"<a><b></a>")


class TestExtractAasx(unittest.TestCase):

    def test_single_environment(self):
        archive = _zip({"aasx/env/env.aas.xml": _fixture("raspberry_pi_shell.xml")})
        found = extract_aasx(archive)
        self.assertEqual([name for name, _ in found], ["aasx/env/env.aas.xml"])

    def test_unrelated_xml_is_ignored(self):
        archive = _zip({
            "[Content_Types].xml": b"<Types xmlns='http://schemas.openxmlformats.org/package/2006/content-types'/>",
            "aasx/env.xml": _fixture("synthetic_env.xml"),
            "aasx/files/manual.pdf": b"%PDF-1.4",
        })
        self.assertEqual(len(extract_aasx(archive)), 1)

    def test_archive_order(self):
        archive = _zip({"b.xml": _fixture("irdi_shell.xml"), "a.xml": _fixture("raspberry_pi_shell.xml")})
        self.assertEqual([name for name, _ in extract_aasx(archive)], ["b.xml", "a.xml"])

    def test_not_a_zip(self):
        with self.assertRaises(NotAnArchive):
            extract_aasx(b"definitely not a zip")

    def test_no_environment(self):
        with self.assertRaises(NoEnvironmentFound):
            extract_aasx(_zip({"other.xml": b"<other/>"}))


class TestWriter(unittest.TestCase):

    def test_census_preserved(self):
        for name in ("raspberry_pi_shell.xml", "synthetic_env.xml", "irdi_shell.xml"):
            env = parse_environment(_fixture(name))
            again = parse_environment(write_environment(env))
            self.assertEqual(environment_census(again), environment_census(env))


if __name__ == "__main__":
    unittest.main()
