"""
aas_xml.parser
~~~~~~~~~~~~~~

Parse an ``aasenv`` XML document into an ``AasEnvironment``.

Element matching is on namespace IRI plus local name: every AAS element must
live in the namespace of the root ``aasenv`` element (serialization 1.0, 2.0
or no namespace at all). IEC 61360 data specification content is matched by
local name only. Prefixes carry no meaning.
"""

from __future__ import annotations

import logging
from typing import Callable, Iterator

from lxml import etree
from pydantic import ValidationError as PydanticValidationError

from aas import (
    AasEnvironment,
    AdministrationShell,
    Asset,
    BlobElement,
    CollectionElement,
    ConceptDescription,
    FileElement,
    IdType,
    Identifier,
    Key,
    Kind,
    OperationElement,
    PropertyElement,
    Reference,
    ReferenceElement,
    Submodel,
)
from library import clean_text
from .exceptions import SchemaViolation, XmlSyntax

logger = logging.getLogger(__name__)

_REFERABLE_CHILDREN = {"idShort", "description", "category", "parent"}
_IDENTIFIABLE_CHILDREN = _REFERABLE_CHILDREN | {"identification"}
_ELEMENT_CHILDREN = _REFERABLE_CHILDREN | {"semanticId", "kind"}

_ELEMENT_TYPES = {"property", "submodelElementCollection", "file", "blob", "referenceElement", "operation"}


def parse_xml(doc: bytes) -> etree._Element:
    """Parse *doc* with entity resolution and network access disabled.

    Raises:
        XmlSyntax: If the document is not well-formed.
    """
    parser = etree.XMLParser(
        resolve_entities=False,
        no_network=True,
        remove_comments=True,
        remove_pis=True,
    )
    try:
        root = etree.fromstring(doc, parser)
    except etree.XMLSyntaxError as exc:
        line, col = exc.position if exc.position else (1, 0)
        raise XmlSyntax(line, col, exc.msg or "malformed document") from exc
    except ValueError as exc:
        raise XmlSyntax(1, 0, str(exc)) from exc
    if root is None:
        raise XmlSyntax(1, 0, "empty document")
    return root


def local_name(element: etree._Element) -> str:
    return etree.QName(element).localname


def _namespace(element: etree._Element) -> str | None:
    return etree.QName(element).namespace


class _EnvironmentReader:
    """Walks one aasenv tree. Every matched element must share the root namespace."""

    def __init__(self, root: etree._Element) -> None:
        self._ns = _namespace(root)

    # ------------------------------------------------------------------
    # Element helpers
    # ------------------------------------------------------------------

    def _is(self, element: etree._Element, name: str) -> bool:
        return _namespace(element) == self._ns and local_name(element) == name

    def _children(self, element: etree._Element, name: str) -> list[etree._Element]:
        return [child for child in element if self._is(child, name)]

    def _child(self, element: etree._Element, name: str, path: str, required: bool = False) -> etree._Element | None:
        found = self._children(element, name)
        if len(found) > 1:
            raise SchemaViolation(f"{path}/{name}", f"expected at most one <{name}>, found {len(found)}")
        if not found:
            if required:
                raise SchemaViolation(path, f"missing mandatory <{name}>")
            return None
        return found[0]

    @staticmethod
    def _text(element: etree._Element, path: str) -> str:
        """Trimmed text of a value-bearing node; element content is rejected."""
        if len(element):
            mixed = clean_text(element.text) or any(clean_text(child.tail) for child in element)
            reason = "mixed content in value node" if mixed else "expected text, found child elements"
            raise SchemaViolation(path, reason)
        return clean_text(element.text) or ""

    def _child_text(self, element: etree._Element, name: str, path: str) -> str | None:
        child = self._child(element, name, path)
        return None if child is None else self._text(child, f"{path}/{name}")

    def _extras(self, element: etree._Element, known: set[str]) -> dict[str, str]:
        extras: dict[str, str] = {}
        for child in element:
            name = local_name(child)
            if _namespace(child) == self._ns and name in known:
                continue
            key = name
            counter = 2
            while key in extras:
                key = f"{name}[{counter}]"
                counter += 1
            extras[key] = etree.tostring(child, encoding="unicode", with_tail=False)
        return extras

    # ------------------------------------------------------------------
    # Shared AAS structures
    # ------------------------------------------------------------------

    def _descriptions(self, element: etree._Element, path: str) -> tuple[tuple[str, str], ...]:
        description = self._child(element, "description", path)
        if description is None:
            return ()
        return self._lang_strings(description, f"{path}/description")

    def _lang_strings(self, element: etree._Element, path: str) -> tuple[tuple[str, str], ...]:
        strings = []
        for index, child in enumerate(c for c in element if local_name(c) == "langString"):
            text = self._text(child, f"{path}/langString[{index}]")
            if text:
                strings.append(((child.get("lang") or "").strip(), text))
        return tuple(strings)

    def _identification(self, element: etree._Element, path: str) -> Identifier:
        node = self._child(element, "identification", path, required=True)
        node_path = f"{path}/identification"
        value = self._text(node, node_path)
        if not value:
            raise SchemaViolation(node_path, "identification is empty")
        return Identifier(value=value, id_type=IdType.from_attribute(node.get("idType")))

    def _reference(self, element: etree._Element, path: str) -> Reference:
        keys_node = self._child(element, "keys", path, required=True)
        keys = []
        for index, key in enumerate(self._children(keys_node, "key")):
            key_path = f"{path}/keys/key[{index}]"
            try:
                keys.append(
                    Key(
                        key_type=(key.get("type") or "").strip(),
                        local=(key.get("local") or "").strip().lower() == "true",
                        id_type=IdType.from_attribute(key.get("idType")),
                        value=self._text(key, key_path),
                    )
                )
            except PydanticValidationError as exc:
                raise SchemaViolation(key_path, exc.errors()[0]["msg"]) from exc
        if not keys:
            raise SchemaViolation(path, "reference without keys")
        return Reference(keys=tuple(keys))

    def _optional_reference(self, element: etree._Element, name: str, path: str) -> Reference | None:
        node = self._child(element, name, path)
        return None if node is None else self._reference(node, f"{path}/{name}")

    def _kind(self, element: etree._Element, path: str, required: bool) -> Kind:
        nodes = self._children(element, "kind")
        if len(nodes) > 1:
            raise SchemaViolation(f"{path}/kind", "kind must be present exactly once")
        if not nodes:
            if required:
                raise SchemaViolation(path, "missing mandatory <kind>")
            return Kind.INSTANCE
        try:
            return Kind.from_text(self._text(nodes[0], f"{path}/kind"))
        except ValueError as exc:
            raise SchemaViolation(f"{path}/kind", str(exc)) from exc

    def _referable(self, element: etree._Element, path: str) -> dict:
        return {
            "id_short": self._child_text(element, "idShort", path) or "",
            "descriptions": self._descriptions(element, path),
        }

    def _grouped(self, root: etree._Element, container: str, item: str) -> Iterator[tuple[str, etree._Element]]:
        index = 0
        for group in self._children(root, container):
            for element in self._children(group, item):
                yield f"aasenv/{container}/{item}[{index}]", element
                index += 1

    # ------------------------------------------------------------------
    # Identifiables
    # ------------------------------------------------------------------

    def shell(self, element: etree._Element, path: str) -> AdministrationShell:
        asset_refs = [
            self._reference(node, f"{path}/assetRef[{i}]") for i, node in enumerate(self._children(element, "assetRef"))
        ]
        submodel_refs = []
        for group in self._children(element, "submodelRefs"):
            for node in self._children(group, "submodelRef"):
                submodel_refs.append(self._reference(node, f"{path}/submodelRefs/submodelRef[{len(submodel_refs)}]"))

        return AdministrationShell(
            identification=self._identification(element, path),
            asset_refs=tuple(asset_refs),
            submodel_refs=tuple(submodel_refs),
            extras=self._extras(element, _IDENTIFIABLE_CHILDREN | {"assetRef", "submodelRefs"}),
            **self._referable(element, path),
        )

    def asset(self, element: etree._Element, path: str) -> Asset:
        return Asset(
            identification=self._identification(element, path),
            kind=self._kind(element, path, required=True),
            extras=self._extras(element, _IDENTIFIABLE_CHILDREN | {"kind"}),
            **self._referable(element, path),
        )

    def submodel(self, element: etree._Element, path: str) -> Submodel:
        elements, skipped = [], {}
        for group in self._children(element, "submodelElements"):
            parsed, unknown = self._element_list(group, f"{path}/submodelElements")
            elements += parsed
            skipped.update(unknown)

        extras = self._extras(element, _IDENTIFIABLE_CHILDREN | {"kind", "semanticId", "submodelElements"})
        extras.update(skipped)
        return Submodel(
            identification=self._identification(element, path),
            kind=self._kind(element, path, required=False),
            elements=tuple(elements),
            extras=extras,
            **self._referable(element, path),
        )

    def concept_description(self, element: etree._Element, path: str) -> ConceptDescription:
        definitions: list[tuple[str, str]] = []
        attributes: dict[str, str] = {}

        for content in element.iter():
            if not isinstance(content.tag, str) or local_name(content) != "dataSpecificationIEC61360":
                continue
            for field in content:
                name = local_name(field)
                field_path = f"{path}/dataSpecificationIEC61360/{name}"
                lang_strings = [c for c in field if local_name(c) == "langString"]
                if name == "definition":
                    definitions += self._lang_strings(field, field_path)
                elif lang_strings:
                    strings = self._lang_strings(field, field_path)
                    if strings:
                        attributes.setdefault(name, strings[0][1])
                elif len(field) == 0:
                    value = clean_text(field.text)
                    if value:
                        attributes.setdefault(name, value)
                else:
                    logger.debug("Ignoring structured data specification field %s", field_path)

        return ConceptDescription(
            identification=self._identification(element, path),
            definitions=tuple(definitions),
            attributes=attributes,
            extras=self._extras(element, _IDENTIFIABLE_CHILDREN | {"embeddedDataSpecification", "isCaseOf"}),
            **self._referable(element, path),
        )

    # ------------------------------------------------------------------
    # Submodel elements
    # ------------------------------------------------------------------

    def _element_list(self, container: etree._Element, path: str) -> tuple[list, dict[str, str]]:
        """Parse the ``submodelElement`` wrappers of *container*.

        Returns the parsed elements and, keyed by path, the serialized XML of
        element types outside the supported subset.
        """
        elements, unknown = [], {}
        for index, wrapper in enumerate(self._children(container, "submodelElement")):
            wrapper_path = f"{path}/submodelElement[{index}]"
            concrete = [child for child in wrapper if isinstance(child.tag, str)]
            if len(concrete) != 1:
                raise SchemaViolation(wrapper_path, f"expected exactly one element, found {len(concrete)}")
            node = concrete[0]
            name = local_name(node)
            if _namespace(node) != self._ns or name not in _ELEMENT_TYPES:
                logger.warning("Unsupported submodel element <%s> at %s kept as extra", name, wrapper_path)
                unknown[f"{wrapper_path}/{name}"] = etree.tostring(node, encoding="unicode", with_tail=False)
                continue
            elements.append(self._element(node, name, f"{wrapper_path}/{name}"))
        return elements, unknown

    def _element(self, node: etree._Element, name: str, path: str):
        builder: Callable = getattr(self, f"_{name}")
        common = {
            **self._referable(node, path),
            "semantic_id": self._optional_reference(node, "semanticId", path),
        }
        return builder(node, path, common)

    def _property(self, node, path, common) -> PropertyElement:
        return PropertyElement(
            value=self._child_text(node, "value", path),
            value_type=self._value_type(node, path),
            extras=self._extras(node, _ELEMENT_CHILDREN | {"value", "valueType"}),
            **common,
        )

    def _value_type(self, node: etree._Element, path: str) -> str | None:
        value_type = self._child(node, "valueType", path)
        if value_type is None:
            return None
        if len(value_type) == 0:
            return clean_text(value_type.text)
        # 1.0 documents nest the type name (valueType/dataObjectType/name)
        for descendant in value_type.iter():
            if isinstance(descendant.tag, str) and local_name(descendant) == "name" and len(descendant) == 0:
                return clean_text(descendant.text)
        return None

    def _submodelElementCollection(self, node, path, common) -> CollectionElement:
        children, unknown = [], {}
        value = self._child(node, "value", path)
        if value is not None:
            children, unknown = self._element_list(value, f"{path}/value")
        extras = self._extras(node, _ELEMENT_CHILDREN | {"value", "ordered", "allowDuplicates"})
        extras.update(unknown)
        return CollectionElement(children=tuple(children), extras=extras, **common)

    def _file(self, node, path, common) -> FileElement:
        return FileElement(
            mime_type=self._child_text(node, "mimeType", path) or "",
            path=self._child_text(node, "value", path),
            extras=self._extras(node, _ELEMENT_CHILDREN | {"mimeType", "value"}),
            **common,
        )

    def _blob(self, node, path, common) -> BlobElement:
        return BlobElement(
            mime_type=self._child_text(node, "mimeType", path) or "",
            value=self._child_text(node, "value", path),
            extras=self._extras(node, _ELEMENT_CHILDREN | {"mimeType", "value"}),
            **common,
        )

    def _referenceElement(self, node, path, common) -> ReferenceElement:
        return ReferenceElement(
            target=self._optional_reference(node, "value", path),
            extras=self._extras(node, _ELEMENT_CHILDREN | {"value"}),
            **common,
        )

    def _operation(self, node, path, common) -> OperationElement:
        def variables(name: str) -> tuple:
            parsed = []
            for index, variable in enumerate(self._children(node, name)):
                for holder in self._wrapper_holders(variable):
                    elements, _ = self._element_list(holder, f"{path}/{name}[{index}]")
                    parsed += elements
            return tuple(parsed)

        return OperationElement(
            in_params=variables("inputVariable"),
            out_params=variables("outputVariable"),
            extras=self._extras(node, _ELEMENT_CHILDREN | {"inputVariable", "outputVariable", "inoutputVariable"}),
            **common,
        )

    def _wrapper_holders(self, element: etree._Element) -> Iterator[etree._Element]:
        """Yield the nearest descendants (or *element* itself) holding ``submodelElement`` wrappers."""
        if self._children(element, "submodelElement"):
            yield element
            return
        for child in element:
            if isinstance(child.tag, str):
                yield from self._wrapper_holders(child)

    # ------------------------------------------------------------------
    # Entry point
    # ------------------------------------------------------------------

    def environment(self, root: etree._Element) -> AasEnvironment:
        if local_name(root) != "aasenv":
            raise SchemaViolation("/", f"root element is <{local_name(root)}>, expected <aasenv>")

        return AasEnvironment(
            shells=tuple(self.shell(e, p) for p, e in self._grouped(root, "assetAdministrationShells", "assetAdministrationShell")),
            assets=tuple(self.asset(e, p) for p, e in self._grouped(root, "assets", "asset")),
            submodels=tuple(self.submodel(e, p) for p, e in self._grouped(root, "submodels", "submodel")),
            concept_descriptions=tuple(
                self.concept_description(e, p) for p, e in self._grouped(root, "conceptDescriptions", "conceptDescription")
            ),
        )


def parse_environment(doc: bytes) -> AasEnvironment:
    """Parse an aasenv document.

    Raises:
        XmlSyntax: If *doc* is not well-formed XML.
        SchemaViolation: If mandatory AAS structure is missing or malformed.
    """
    root = parse_xml(doc)
    env = _EnvironmentReader(root).environment(root)
    logger.debug(
        "Parsed aasenv: %d shells, %d assets, %d submodels, %d concept descriptions",
        len(env.shells),
        len(env.assets),
        len(env.submodels),
        len(env.concept_descriptions),
    )
    return env
