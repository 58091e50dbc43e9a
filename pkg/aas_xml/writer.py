"""
aas_xml.writer
~~~~~~~~~~~~~~

Serialize an ``AasEnvironment`` back to a 2.0 aasenv document. Used by the
test suite to check that parsing preserves entity counts; the output is not
meant to be a complete AAS serialization (``extras`` are not written back).
"""

from __future__ import annotations

from lxml import etree

from aas import (
    AasEnvironment,
    BlobElement,
    CollectionElement,
    ConceptDescription,
    FileElement,
    Identifiable,
    OperationElement,
    PropertyElement,
    Reference,
    ReferenceElement,
)

AAS_NS = "http://www.admin-shell.io/aas/2/0"
IEC61360_NS = "http://www.admin-shell.io/IEC61360/2/0"

_NSMAP = {"aas": AAS_NS, "IEC61360": IEC61360_NS}


def _aas(parent: etree._Element, name: str, text: str | None = None, **attributes: str) -> etree._Element:
    element = etree.SubElement(parent, f"{{{AAS_NS}}}{name}", **attributes)
    if text is not None:
        element.text = text
    return element


def _lang_strings(parent: etree._Element, strings, namespace: str = AAS_NS) -> None:
    for lang, text in strings:
        etree.SubElement(parent, f"{{{namespace}}}langString", lang=lang).text = text


def _referable(parent: etree._Element, entity) -> None:
    _aas(parent, "idShort", entity.id_short)
    if entity.descriptions:
        _lang_strings(_aas(parent, "description"), entity.descriptions)


def _identifiable(parent: etree._Element, entity: Identifiable) -> None:
    _aas(parent, "identification", entity.identification.value, idType=entity.identification.id_type.value)
    _referable(parent, entity)


def _reference(parent: etree._Element, name: str, ref: Reference) -> None:
    keys = _aas(_aas(parent, name), "keys")
    for key in ref.keys:
        _aas(
            keys,
            "key",
            key.value,
            type=key.key_type,
            local="true" if key.local else "false",
            idType=key.id_type.value,
        )


def _elements(parent: etree._Element, elements) -> None:
    for element in elements:
        wrapper = _aas(parent, "submodelElement")
        if isinstance(element, PropertyElement):
            node = _aas(wrapper, "property")
        elif isinstance(element, CollectionElement):
            node = _aas(wrapper, "submodelElementCollection")
        elif isinstance(element, FileElement):
            node = _aas(wrapper, "file")
        elif isinstance(element, BlobElement):
            node = _aas(wrapper, "blob")
        elif isinstance(element, ReferenceElement):
            node = _aas(wrapper, "referenceElement")
        else:
            node = _aas(wrapper, "operation")

        _referable(node, element)
        if element.semantic_id is not None:
            _reference(node, "semanticId", element.semantic_id)

        if isinstance(element, PropertyElement):
            if element.value_type is not None:
                _aas(node, "valueType", element.value_type)
            if element.value is not None:
                _aas(node, "value", element.value)
        elif isinstance(element, CollectionElement):
            _elements(_aas(node, "value"), element.children)
        elif isinstance(element, (FileElement, BlobElement)):
            _aas(node, "mimeType", element.mime_type)
            value = element.path if isinstance(element, FileElement) else element.value
            if value is not None:
                _aas(node, "value", value)
        elif isinstance(element, ReferenceElement):
            if element.target is not None:
                _reference(node, "value", element.target)
        elif isinstance(element, OperationElement):
            for name, params in (("inputVariable", element.in_params), ("outputVariable", element.out_params)):
                if params:
                    _elements(_aas(_aas(node, name), "value"), params)


def _concept_description(parent: etree._Element, cd: ConceptDescription) -> None:
    node = _aas(parent, "conceptDescription")
    _identifiable(node, cd)
    if not (cd.definitions or cd.attributes):
        return
    content = _aas(_aas(node, "embeddedDataSpecification"), "dataSpecificationContent")
    spec = etree.SubElement(content, f"{{{IEC61360_NS}}}dataSpecificationIEC61360")
    for name, value in cd.attributes.items():
        etree.SubElement(spec, f"{{{IEC61360_NS}}}{name}").text = value
    if cd.definitions:
        _lang_strings(etree.SubElement(spec, f"{{{IEC61360_NS}}}definition"), cd.definitions, IEC61360_NS)


def write_environment(env: AasEnvironment) -> bytes:
    """Render *env* as UTF-8 aasenv XML."""
    root = etree.Element(f"{{{AAS_NS}}}aasenv", nsmap=_NSMAP)

    shells = _aas(root, "assetAdministrationShells")
    for shell in env.shells:
        node = _aas(shells, "assetAdministrationShell")
        _identifiable(node, shell)
        for ref in shell.asset_refs:
            _reference(node, "assetRef", ref)
        if shell.submodel_refs:
            group = _aas(node, "submodelRefs")
            for ref in shell.submodel_refs:
                _reference(group, "submodelRef", ref)

    assets = _aas(root, "assets")
    for asset in env.assets:
        node = _aas(assets, "asset")
        _identifiable(node, asset)
        _aas(node, "kind", asset.kind.value)

    submodels = _aas(root, "submodels")
    for submodel in env.submodels:
        node = _aas(submodels, "submodel")
        _identifiable(node, submodel)
        _aas(node, "kind", submodel.kind.value)
        _elements(_aas(node, "submodelElements"), submodel.elements)

    cds = _aas(root, "conceptDescriptions")
    for cd in env.concept_descriptions:
        _concept_description(cds, cd)

    return etree.tostring(root, xml_declaration=True, encoding="UTF-8", pretty_print=True)
