"""
mapper.mapper
~~~~~~~~~~~~~

Lift an ``AasEnvironment`` into the SAAS RDF graph.

One mapping function per entity kind produces that entity's triples, or a
``Skip`` when the entity cannot be given a global IRI. ``map_environment``
inserts everything into one graph; a triple produced more than once is
stored once and counted in ``collapsed_duplicates``.

Collections get no subject of their own: their elements map onto the
subject of the enclosing submodel. No blank nodes are produced.
"""

from __future__ import annotations

import logging
from typing import Container, Iterable

from rdflib import Namespace, URIRef
from rdflib.namespace import RDF, RDFS, SKOS

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
    OperationElement,
    PropertyElement,
    ReferenceElement,
    Submodel,
    SubmodelElement,
    check_environment,
)
from library import camel_case
from rdfcore import RdfGraph, Triple, iri_violation, make_iri, make_literal
from reasoner.ontology import abstract_classes, load_ontology, ontology_properties, superclasses
from .config import MappingConfig
from .datatypes import typed_literal
from .identifiers import Skip, resolve_identifier
from .report import MappingReport

logger = logging.getLogger(__name__)


def _rami(cfg: MappingConfig) -> Namespace:
    return Namespace(cfg.rami_namespace)


def _annotations(subject: URIRef, id_short: str, descriptions) -> list[Triple]:
    triples = []
    if id_short:
        triples.append((subject, RDFS.label, make_literal(id_short)))
    for lang, text in descriptions:
        triples.append((subject, RDFS.comment, make_literal(text, lang=lang or None)))
    return triples


def _subject(identification: Identifier, cfg: MappingConfig) -> URIRef | Skip:
    return resolve_identifier(identification, cfg.identifier_policy)


# -------------------------------------------------------------------
# Shells and assets
# -------------------------------------------------------------------
def map_shell(
    shell: AdministrationShell,
    cfg: MappingConfig,
    report: MappingReport | None = None,
    path: str = "shells[0]",
) -> list[Triple] | Skip:
    """Type, label, comments, and one link per asset and submodel reference.

    References whose target cannot be resolved to an IRI are left out and
    recorded in *report*.
    """
    subject = _subject(shell.identification, cfg)
    if isinstance(subject, Skip):
        return subject

    rami = _rami(cfg)
    triples: list[Triple] = [(subject, RDF.type, rami.AssetShell)]
    triples += _annotations(subject, shell.id_short, shell.descriptions)

    links = [(rami.hasAsset, "assetRef", ref) for ref in shell.asset_refs]
    links += [(rami.hasSubmodel, "submodelRef", ref) for ref in shell.submodel_refs]
    counters: dict[str, int] = {}
    for predicate, label, ref in links:
        index = counters.get(label, 0)
        counters[label] = index + 1
        target = resolve_identifier(ref.target, cfg.identifier_policy)
        if isinstance(target, Skip):
            if report is not None:
                report.skip(f"{path}/{label}[{index}]", target.reason)
            continue
        triples.append((subject, predicate, target))
    return triples


def map_asset(asset: Asset, cfg: MappingConfig) -> list[Triple] | Skip:
    """Type, label, comments and kind; nothing else of an asset is mapped."""
    subject = _subject(asset.identification, cfg)
    if isinstance(subject, Skip):
        return subject

    rami = _rami(cfg)
    triples: list[Triple] = [(subject, RDF.type, rami.Asset)]
    triples += _annotations(subject, asset.id_short, asset.descriptions)
    triples.append((subject, rami.kind, make_literal(asset.kind.value)))
    return triples


# -------------------------------------------------------------------
# Submodels
# -------------------------------------------------------------------
class _ElementMapper:
    def __init__(self, subject: URIRef, cfg: MappingConfig, report: MappingReport | None) -> None:
        self._subject = subject
        self._cfg = cfg
        self._report = report
        self.triples: list[Triple] = []

    def _skip(self, path: str, reason: str) -> None:
        logger.debug("Skipping %s: %s", path, reason)
        if self._report is not None:
            self._report.skip(path, reason)

    def _warn(self, message: str) -> None:
        if self._report is not None:
            self._report.warnings.append(message)

    def _predicate(self, element: SubmodelElement, path: str) -> URIRef | None:
        if element.semantic_id is None:
            self._skip(path, "no semanticId to use as predicate")
            return None
        predicate = resolve_identifier(element.semantic_id.target, self._cfg.identifier_policy)
        if isinstance(predicate, Skip):
            self._skip(path, f"semanticId: {predicate.reason}")
            return None
        return predicate

    def map(self, elements: Iterable[SubmodelElement], parent: str) -> None:
        for index, element in enumerate(elements):
            path = f"{parent}/{element.id_short or f'{element.element_type}[{index}]'}"

            if isinstance(element, CollectionElement):
                if element.children:
                    self._warn(f"{path}: collection flattened onto {self._subject}")
                self.map(element.children, path)
            elif isinstance(element, PropertyElement):
                self._property(element, path)
            elif isinstance(element, FileElement):
                self._file(element, path)
            elif isinstance(element, ReferenceElement):
                self._reference(element, path)
            elif isinstance(element, BlobElement):
                self._skip(path, "blob content is not mapped")
            elif isinstance(element, OperationElement):
                self._skip(path, "operations carry no invocation semantics")

    def _property(self, element: PropertyElement, path: str) -> None:
        predicate = self._predicate(element, path)
        if predicate is None:
            return
        if element.value is None or element.value == "":
            self._skip(path, "property has no value")
            return
        literal, warning = typed_literal(element.value, element.value_type)
        if warning:
            self._warn(f"{path}: {warning}")
        self.triples.append((self._subject, predicate, literal))
        self.triples.append((predicate, RDF.type, RDF.Property))

    def _file(self, element: FileElement, path: str) -> None:
        predicate = self._predicate(element, path)
        if predicate is None:
            return
        if not element.path:
            self._skip(path, "file has no value")
            return
        if iri_violation(element.path) is None:
            target = make_iri(element.path)
        else:
            target = resolve_identifier(Identifier(value=element.path, id_type=IdType.CUSTOM), self._cfg.identifier_policy)
            if isinstance(target, Skip):
                self._skip(path, "file path is not an absolute IRI")
                return
        self.triples.append((self._subject, predicate, target))

    def _reference(self, element: ReferenceElement, path: str) -> None:
        predicate = self._predicate(element, path)
        if predicate is None:
            return
        if element.target is None:
            self._skip(path, "reference element has no target")
            return
        target = resolve_identifier(element.target.target, self._cfg.identifier_policy)
        if isinstance(target, Skip):
            self._skip(path, f"target: {target.reason}")
            return
        self.triples.append((self._subject, predicate, target))


def map_submodel(
    submodel: Submodel,
    cfg: MappingConfig,
    report: MappingReport | None = None,
    path: str = "submodels[0]",
) -> list[Triple] | Skip:
    """Type, label, comments, kind, and one triple per mappable element.

    Each property with a URI semanticId ``P`` and a value becomes
    ``(submodel, P, value)`` plus ``(P, rdf:type, rdf:Property)``.
    """
    subject = _subject(submodel.identification, cfg)
    if isinstance(subject, Skip):
        return subject

    rami = _rami(cfg)
    triples: list[Triple] = [(subject, RDF.type, rami.Submodel)]
    triples += _annotations(subject, submodel.id_short, submodel.descriptions)
    triples.append((subject, rami.kind, make_literal(submodel.kind.value)))

    elements = _ElementMapper(subject, cfg, report)
    elements.map(submodel.elements, path)
    return triples + elements.triples


# -------------------------------------------------------------------
# Concept descriptions
# -------------------------------------------------------------------
def map_concept_description(
    cd: ConceptDescription,
    cfg: MappingConfig,
    already_emitted: Container[Triple] | None = None,
    report: MappingReport | None = None,
    known_properties: set[URIRef] | None = None,
) -> list[Triple] | Skip:
    """Type, label, one comment per definition and one triple per attribute.

    Attribute predicates are ``rami:<camelCase name>``. Triples already in
    *already_emitted* are left out of the result and counted as collapsed
    duplicates in *report*.
    """
    subject = _subject(cd.identification, cfg)
    if isinstance(subject, Skip):
        return subject

    rami = _rami(cfg)
    triples: list[Triple] = [(subject, RDF.type, rami.ConceptDescription)]
    triples += _annotations(subject, cd.id_short, cd.definitions)

    for name in sorted(cd.attributes):
        local = camel_case(name)
        if not local:
            continue
        predicate = rami[local]
        if known_properties is not None and predicate not in known_properties and report is not None:
            report.warnings.append(f"attribute {name!r} has no ontology property, minted {predicate}")
        triples.append((subject, predicate, make_literal(cd.attributes[name])))

    if already_emitted is not None:
        kept = [t for t in triples if t not in already_emitted]
        if report is not None:
            report.collapsed_duplicates += len(triples) - len(kept)
        triples = kept
    return triples


# -------------------------------------------------------------------
# Environment
# -------------------------------------------------------------------
class _Collector:
    def __init__(self, graph: RdfGraph, report: MappingReport) -> None:
        self.graph = graph
        self.report = report

    def add(self, path: str, produced: list[Triple] | Skip) -> None:
        if isinstance(produced, Skip):
            logger.debug("Skipping %s: %s", path, produced.reason)
            self.report.skip(path, produced.reason)
            return
        for triple in produced:
            if self.graph.insert(triple):
                self.report.emitted_triples += 1
            else:
                self.report.collapsed_duplicates += 1


def _abstract_notes(graph: RdfGraph, ontology: RdfGraph, cfg: MappingConfig) -> list[Triple]:
    rami = cfg.rami_namespace
    used = {o for _, p, o in graph if p == RDF.type and isinstance(o, URIRef) and str(o).startswith(rami)}
    abstract = abstract_classes(ontology)

    triples: list[Triple] = []
    for cls in sorted(used):
        for member in sorted({cls} | superclasses(ontology, cls)):
            for _, _, parent in sorted(ontology.rdflib_graph.triples((member, RDFS.subClassOf, None))):
                triples.append((member, RDFS.subClassOf, parent))
            if member in abstract:
                triples.append((member, SKOS.note, make_literal("abstract")))
    return triples


def map_environment(env: AasEnvironment, cfg: MappingConfig | None = None) -> tuple[RdfGraph, MappingReport]:
    """Map every member of *env*; failures become report entries, never exceptions."""
    cfg = cfg or MappingConfig()
    ontology = load_ontology(cfg.ontology_path)

    graph = RdfGraph()
    graph.bind("rami", cfg.rami_namespace)
    report = MappingReport(warnings=check_environment(env))
    collector = _Collector(graph, report)

    for index, shell in enumerate(env.shells):
        path = f"shells[{index}]"
        collector.add(path, map_shell(shell, cfg, report, path))

    for index, asset in enumerate(env.assets):
        collector.add(f"assets[{index}]", map_asset(asset, cfg))

    for index, submodel in enumerate(env.submodels):
        path = f"submodels[{index}]"
        collector.add(path, map_submodel(submodel, cfg, report, path))

    known = ontology_properties(ontology)
    for index, cd in enumerate(env.concept_descriptions):
        produced = map_concept_description(cd, cfg, graph, report, known)
        collector.add(f"conceptDescriptions[{index}]", produced)

    if cfg.emit_abstract_notes:
        collector.add("ontology", _abstract_notes(graph, ontology, cfg))

    logger.info(
        "Mapped environment: %d triples, %d skipped, %d duplicates collapsed",
        report.emitted_triples,
        len(report.skipped_entities),
        report.collapsed_duplicates,
    )
    return graph, report
