"""Parsers for the two readable formats, N-Triples and Turtle."""

from __future__ import annotations

import logging
from pathlib import Path

from rdflib import Graph
from rdflib.plugins.parsers.notation3 import BadSyntax
from rdflib.plugins.parsers.ntriples import ParseError

from library import read_bytes
from rdfcore import RdfGraph
from .exceptions import RdfSyntaxError
from .formats import SerializationFormat, format_for_path

logger = logging.getLogger(__name__)


def _bad_syntax_position(exc: BadSyntax) -> tuple[int, int]:
    text = getattr(exc, "_str", b"")
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    offset = getattr(exc, "_i", 0) or 0
    col = offset - (text.rfind("\n", 0, offset) + 1)
    return exc.lines + 1, max(col, 0)


def _failing_ntriples_line(text: str) -> int:
    """Locate the first line rdflib rejects; N-Triples errors carry no position."""
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            Graph(bind_namespaces="none").parse(data=line, format="nt")
        except (ParseError, ValueError):
            return number
    return 1


def parse(doc: bytes, fmt: SerializationFormat) -> RdfGraph:
    """Parse *doc*; *fmt* must be N-Triples, N-Quads or Turtle.

    Raises:
        RdfSyntaxError: With line and column of the first error.
        ValueError: If *fmt* is write-only.
    """
    if not fmt.parsable:
        raise ValueError(f"{fmt.flag} is write-only; parse N-Triples or Turtle instead")

    try:
        text = doc.decode("utf-8") if isinstance(doc, bytes) else doc
    except UnicodeDecodeError as exc:
        raise RdfSyntaxError(1, exc.start, "document is not UTF-8") from exc
    graph = Graph(bind_namespaces="none")
    try:
        graph.parse(data=text, format="nt" if fmt is not SerializationFormat.TURTLE else "turtle")
    except BadSyntax as exc:
        line, col = _bad_syntax_position(exc)
        raise RdfSyntaxError(line, col, getattr(exc, "_why", str(exc))) from exc
    except ParseError as exc:
        raise RdfSyntaxError(_failing_ntriples_line(text), 0, str(exc)) from exc
    except ValueError as exc:
        # rdflib rejects some malformed terms with ValueError
        raise RdfSyntaxError(1, 0, str(exc)) from exc

    result = RdfGraph.wrap(graph)
    logger.debug("Parsed %d triples as %s", len(result), fmt.flag)
    return result


def parse_file(path: str | Path) -> RdfGraph:
    """Parse a ``.nt``, ``.nq`` or ``.ttl`` file."""
    return parse(read_bytes(path), format_for_path(path))
