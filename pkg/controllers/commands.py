"""
controllers.commands
~~~~~~~~~~~~~~~~~~~~

One handler per subcommand. Handlers return an ``ExitCode``; fatal errors
propagate to ``run_command``.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from rdflib import URIRef

from aas import AasEnvironment
from aas_xml import XmlMetrics, load_environments, parse_environment, xml_metrics
from library import Stopwatch, write_bytes, write_text
from mapper import IdentifierPolicy, MappingConfig, MappingReport, map_environment
from rdfcore import RdfGraph
from reasoner import RuleSetName, builtin_ruleset, format_stats, load_ontology, load_rules, saturate
from serializers import SerializationFormat, parse_file, serialize, serialized_sizes
from settings import Settings
from shacl import load_shapes_dir, shape_as_interface_contract, validate, validate_single_class
from .exit_codes import ExitCode
from .pipeline_stats import PipelineStats

logger = logging.getLogger(__name__)


def _policy(args: argparse.Namespace, settings: Settings) -> IdentifierPolicy:
    return IdentifierPolicy.parse(args.policy or settings.policy)


def _formats(flags: list[str] | None, default: list[SerializationFormat]) -> list[SerializationFormat]:
    if not flags:
        return default
    # Keep the first occurrence of each flag.
    return list(dict.fromkeys(SerializationFormat.from_flag(flag) for flag in flags))


def _read_environment(path: Path) -> tuple[AasEnvironment, XmlMetrics, int]:
    """Parse every aasenv document of *path* into one environment.

    Returns the environment, the summed XML metrics and the summed size in
    bytes of the XML documents.
    """
    shells, assets, submodels, cds = [], [], [], []
    nodes = leaves = size = 0
    for name, doc in load_environments(path):
        logger.info("Reading %s (%d bytes)", name, len(doc))
        env = parse_environment(doc)
        shells += env.shells
        assets += env.assets
        submodels += env.submodels
        cds += env.concept_descriptions
        metrics = xml_metrics(doc)
        nodes += metrics.node_count
        leaves += metrics.leaf_count
        size += len(doc)

    env = AasEnvironment(
        shells=tuple(shells), assets=tuple(assets), submodels=tuple(submodels), concept_descriptions=tuple(cds)
    )
    return env, XmlMetrics(node_count=nodes, leaf_count=leaves), size


def _map(path: Path, cfg: MappingConfig) -> tuple[RdfGraph, MappingReport, PipelineStats]:
    env, metrics, size = _read_environment(path)
    with Stopwatch() as watch:
        graph, report = map_environment(env, cfg)
    stats = PipelineStats(xml_metrics=metrics, input_bytes=size, triples=len(graph), map_ms=watch.ms)
    return graph, report, stats


def _mapping_exit(report: MappingReport) -> ExitCode:
    for line in report.skip_lines():
        logger.warning(line)
    return ExitCode.SKIPPED if report.has_skips else ExitCode.OK


def cmd_map(args: argparse.Namespace, settings: Settings) -> ExitCode:
    """Map ``args.input`` and write one file per format plus ``<stem>.report.txt``."""
    source = Path(args.input)
    cfg = MappingConfig(identifier_policy=_policy(args, settings), ontology_path=settings.ontology)
    formats = _formats(args.format, [SerializationFormat.TURTLE])

    graph, report, _ = _map(source, cfg)

    out_dir = Path(args.out) if args.out else source.parent
    for fmt in formats:
        target = write_bytes(out_dir / f"{source.stem}{fmt.extension}", serialize(graph, fmt))
        print(f"Wrote {target}")
    write_text(out_dir / f"{source.stem}.report.txt", report.summary())
    return _mapping_exit(report)


def cmd_reason(args: argparse.Namespace, settings: Settings) -> ExitCode:
    """Saturate ``args.input`` and print the stats line."""
    graph = parse_file(args.input)
    if args.rules_file:
        ruleset = load_rules(Path(args.rules_file).read_bytes())
    else:
        ruleset = builtin_ruleset(RuleSetName(args.rules))
    ontology = load_ontology(path=args.ontology or settings.ontology, url=args.ontology_url)
    max_triples = args.max_triples or settings.max_triples

    saturated, stats = saturate(graph, ruleset, ontology, max_triples=max_triples)

    if args.out:
        out = Path(args.out)
        fmt = SerializationFormat.NTRIPLES if out.suffix.lower() in (".nt", ".nq") else SerializationFormat.TURTLE
        write_bytes(out, serialize(saturated, fmt))
    print(format_stats(stats))
    return ExitCode.OK


def _class_iri(text: str, prefixes: dict[str, str]) -> URIRef:
    """Expand ``prefix:Local`` against *prefixes*; anything else is taken as an IRI."""
    prefix, sep, local = text.partition(":")
    if sep and prefix in prefixes and not local.startswith("//"):
        return URIRef(prefixes[prefix] + local)
    return URIRef(text)


def cmd_validate(args: argparse.Namespace, settings: Settings) -> ExitCode:
    """Print the validation report (or the interface contract) for ``args.data``."""
    shapes = load_shapes_dir(args.shapes or settings.shapes)
    for warning in shapes.warnings:
        logger.warning("Shapes: %s", warning)

    if args.contract:
        if not args.target_class:
            print("--contract needs --class", file=sys.stderr)
            return ExitCode.FATAL
        print(shape_as_interface_contract(shapes, _class_iri(args.target_class, shapes.prefixes)), end="")
        return ExitCode.OK

    data = parse_file(args.data)
    if args.target_class:
        report = validate_single_class(data, shapes, _class_iri(args.target_class, shapes.prefixes))
    else:
        report = validate(data, shapes)

    print(report.to_text(), end="")
    return ExitCode.VIOLATIONS if report.violations else ExitCode.OK


def cmd_stats(args: argparse.Namespace, settings: Settings) -> ExitCode:
    """Map and serialize ``args.input`` in memory and print one metrics record."""
    cfg = MappingConfig(identifier_policy=_policy(args, settings), ontology_path=settings.ontology)
    formats = _formats(args.formats, list(SerializationFormat))

    graph, report, stats = _map(Path(args.input), cfg)
    stats = stats.model_copy(update={"format_bytes": serialized_sizes(graph, formats)})

    print(stats.to_record())
    for line in stats.timing_lines():
        print(line)
    return _mapping_exit(report)
