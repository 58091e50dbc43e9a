import unittest

from pydantic import ValidationError

from aas import (
    AasEnvironment,
    AdministrationShell,
    AmbiguousReference,
    Asset,
    CollectionElement,
    IdType,
    Identifier,
    Key,
    Kind,
    PropertyElement,
    Reference,
    Scope,
    Submodel,
    check_environment,
    environment_census,
    resolve_local,
)

ASSET_ID = "http://iais.fraunhofer.de/en/aas/devices/rspbry/755003377"


def _uri(value: str) -> Identifier:
    return Identifier(value=value, id_type=IdType.URI)


def _asset(value: str = ASSET_ID, id_short: str = "Pi") -> Asset:
    return Asset(identification=_uri(value), id_short=id_short, kind=Kind.INSTANCE)


def _ref(key_type: str, value: str, local: bool = True) -> Reference:
    return Reference(keys=(Key(key_type=key_type, local=local, id_type=IdType.URI, value=value),))


class TestIdentifier(unittest.TestCase):

    def test_scope_follows_id_type(self):
        self.assertEqual(_uri("urn:x:y").scope, Scope.GLOBAL)
        self.assertEqual(Identifier(value="0173-1#01", id_type=IdType.IRDI).scope, Scope.GLOBAL)
        self.assertEqual(Identifier(value="my id", id_type=IdType.CUSTOM).scope, Scope.LOCAL)

    def test_invalid_uri_is_kept(self):
        identifier = _uri("26-04-07-02")
        self.assertEqual(identifier.value, "26-04-07-02")
        self.assertIsNotNone(identifier.uri_violation())
        self.assertIsNone(_uri("urn:x:y").uri_violation())
        self.assertIsNone(Identifier(value="a b", id_type=IdType.CUSTOM).uri_violation())

    def test_unknown_id_type_attribute_is_custom(self):
        self.assertIs(IdType.from_attribute("idShort"), IdType.CUSTOM)
        self.assertIs(IdType.from_attribute(" URI "), IdType.URI)

    def test_reference_needs_a_key(self):
        with self.assertRaises(ValidationError):
            Reference(keys=())


class TestResolveLocal(unittest.TestCase):

    def test_found(self):
        env = AasEnvironment(assets=(_asset(),))
        self.assertEqual(resolve_local(env, _ref("Asset", ASSET_ID)), env.assets[0])

    def test_absent(self):
        env = AasEnvironment(assets=(_asset(),))
        self.assertIsNone(resolve_local(env, _ref("Asset", "http://example.org/none")))

    def test_kind_must_match_key_type(self):
        env = AasEnvironment(assets=(_asset(),))
        self.assertIsNone(resolve_local(env, _ref("Submodel", ASSET_ID)))

    def test_ambiguous(self):
        env = AasEnvironment(assets=(_asset(id_short="A"), _asset(id_short="B")))
        with self.assertRaises(AmbiguousReference):
            resolve_local(env, _ref("Asset", ASSET_ID))

    def test_last_key_is_the_target(self):
        env = AasEnvironment(assets=(_asset(),))
        ref = Reference(keys=(
            Key(key_type="Submodel", id_type=IdType.URI, value="http://example.org/sm"),
            Key(key_type="Asset", id_type=IdType.URI, value=ASSET_ID),
        ))
        self.assertEqual(resolve_local(env, ref), env.assets[0])

    def test_every_unknown_value_is_not_found(self):
        env = AasEnvironment(
            assets=(_asset(),),
            submodels=(Submodel(identification=_uri("http://example.org/sm"), id_short="S"),),
        )
        for key_type in ("Asset", "Submodel", "AssetAdministrationShell", "ConceptDescription"):
            for value in ("http://example.org/x", "urn:a:b", ASSET_ID + "/child"):
                self.assertIsNone(resolve_local(env, _ref(key_type, value)))


class TestCensus(unittest.TestCase):

    def test_empty(self):
        census = environment_census(AasEnvironment())
        self.assertEqual(census.total, 0)
        self.assertEqual(census.elements, 0)

    def test_collection_counts_itself(self):
        props = tuple(PropertyElement(id_short=f"p{i}", value=str(i)) for i in range(3))
        sm = Submodel(
            identification=_uri("http://example.org/sm"),
            elements=(CollectionElement(id_short="c", children=props),),
        )
        self.assertEqual(environment_census(AasEnvironment(submodels=(sm,))).elements, 4)

    def test_stable_under_reordering(self):
        a, b = _asset("http://example.org/a", "A"), _asset("http://example.org/b", "B")
        self.assertEqual(
            environment_census(AasEnvironment(assets=(a, b))),
            environment_census(AasEnvironment(assets=(b, a))),
        )


class TestCheckEnvironment(unittest.TestCase):

    def test_clean_environment(self):
        shell = AdministrationShell(
            identification=_uri("http://example.org/shell"),
            id_short="Shell",
            asset_refs=(_ref("Asset", ASSET_ID),),
        )
        self.assertEqual(check_environment(AasEnvironment(shells=(shell,), assets=(_asset(),))), [])

    def test_unresolved_local_reference(self):
        shell = AdministrationShell(
            identification=_uri("http://example.org/shell"),
            asset_refs=(_ref("Asset", "http://example.org/missing"),),
        )
        warnings = check_environment(AasEnvironment(shells=(shell,)))
        self.assertEqual(len(warnings), 1)
        self.assertIn("does not resolve", warnings[0])

    def test_non_local_reference_is_not_checked(self):
        shell = AdministrationShell(
            identification=_uri("http://example.org/shell"),
            asset_refs=(_ref("Asset", "http://example.org/missing", local=False),),
        )
        self.assertEqual(check_environment(AasEnvironment(shells=(shell,))), [])

    def test_duplicate_sibling_id_shorts(self):
        sm = Submodel(
            identification=_uri("http://example.org/sm"),
            elements=(PropertyElement(id_short="x"), PropertyElement(id_short="x")),
        )
        warnings = check_environment(AasEnvironment(submodels=(sm,)))
        self.assertEqual(warnings, ["submodels[0]: idShort 'x' used 2 times"])

    def test_invalid_uri_identification_warns(self):
        env = AasEnvironment(assets=(_asset(), _asset("http://example.org/bad asset", "Bad")))
        warnings = check_environment(env)
        self.assertEqual(len(warnings), 1)
        self.assertTrue(warnings[0].startswith("assets[1]: idType URI but 'http://example.org/bad asset'"))


if __name__ == "__main__":
    unittest.main()
