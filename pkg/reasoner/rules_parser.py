"""
reasoner.rules_parser
~~~~~~~~~~~~~~~~~~~~~

Loader for rule files. The grammar is the rule subset of N3::

    # comment
    @prefix ex: <http://example.org/> .
    { ?c rdfs:subClassOf ?d . ?x a ?c . } => { ?x a ?d . } .

Terms are Turtle-style: ``<iri>``, ``prefix:local``, ``"literal"`` with an
optional ``@lang`` or ``^^datatype``, integers, ``a`` for ``rdf:type`` and
``?name`` variables. ``rdf``, ``rdfs`` and ``owl`` are predeclared. A rule
may span several lines.
"""

from __future__ import annotations

import logging
import re
from typing import Iterator, NamedTuple

from rdflib import Literal, URIRef
from rdflib.namespace import OWL, RDF, RDFS, XSD
from rdflib.term import Variable

from rdfcore import InvalidIri, InvalidTriple, TriplePattern, make_iri, make_literal
from .exceptions import RuleSyntax
from .patterns import Rule, RuleSet, RuleSetName

logger = logging.getLogger(__name__)

DEFAULT_PREFIXES = {"rdf": str(RDF), "rdfs": str(RDFS), "owl": str(OWL)}

_NAME = r"[A-Za-z_][\w-]*(?:\.[\w-]+)*"
_LOCAL = r"(?:[\w-]+(?:\.[\w-]+)*)?"

_TOKEN_RE = re.compile(
    rf"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<iri><[^<>"{{}}|^`\\\s]*>)
  | (?P<literal>"(?:[^"\\\n]|\\.)*"(?:@[A-Za-z]+(?:-[A-Za-z0-9]+)*|\^\^(?:<[^<>\s]*>|(?:{_NAME})?:{_LOCAL}))?)
  | (?P<implies>=>)
  | (?P<prefix>@prefix)
  | (?P<var>\?[A-Za-z_]\w*)
  | (?P<number>[+-]?\d+)
  | (?P<a>a(?![\w:.-]))
  | (?P<pname>(?:{_NAME})?:{_LOCAL})
  | (?P<punct>[{{}}.])
    """,
    re.VERBOSE,
)

_ESCAPES = {"\\": "\\", '"': '"', "n": "\n", "t": "\t", "r": "\r"}


class _Token(NamedTuple):
    kind: str
    text: str
    line: int


def _tokenize(text: str) -> Iterator[_Token]:
    line, position = 1, 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise RuleSyntax(line, f"unexpected character {text[position]!r}")
        kind = match.lastgroup
        if kind == "nl":
            line += 1
        elif kind not in ("ws", "comment"):
            yield _Token(kind, match.group(), line)
        position = match.end()


class _RuleReader:
    def __init__(self, text: str) -> None:
        self._tokens = list(_tokenize(text))
        self._index = 0
        self._prefixes = dict(DEFAULT_PREFIXES)

    def _peek(self) -> _Token | None:
        return self._tokens[self._index] if self._index < len(self._tokens) else None

    def _line(self) -> int:
        token = self._peek()
        if token is not None:
            return token.line
        return self._tokens[-1].line if self._tokens else 1

    def _next(self, expected: str | None = None) -> _Token:
        token = self._peek()
        if token is None:
            raise RuleSyntax(self._line(), f"unexpected end of file{f', expected {expected!r}' if expected else ''}")
        if expected is not None and token.text != expected:
            raise RuleSyntax(token.line, f"expected {expected!r}, found {token.text!r}")
        self._index += 1
        return token

    # ------------------------------------------------------------------

    def _expand(self, pname: str, line: int) -> URIRef:
        prefix, _, local = pname.partition(":")
        if prefix not in self._prefixes:
            raise RuleSyntax(line, f"undeclared prefix {prefix!r}")
        try:
            return make_iri(self._prefixes[prefix] + local)
        except InvalidIri as exc:
            raise RuleSyntax(line, str(exc)) from exc

    def _literal(self, token: _Token) -> Literal:
        body, suffix = re.match(r'"((?:[^"\\]|\\.)*)"(.*)', token.text).groups()
        lexical = re.sub(r"\\(.)", lambda m: _ESCAPES.get(m.group(1), m.group(1)), body)
        if suffix.startswith("@"):
            return make_literal(lexical, lang=suffix[1:])
        if suffix.startswith("^^"):
            datatype = suffix[2:]
            iri = self._iri(datatype, token.line) if datatype.startswith("<") else self._expand(datatype, token.line)
            return make_literal(lexical, datatype=iri)
        return make_literal(lexical)

    def _iri(self, text: str, line: int) -> URIRef:
        try:
            return make_iri(text[1:-1])
        except InvalidIri as exc:
            raise RuleSyntax(line, str(exc)) from exc

    def _term(self):
        token = self._next()
        if token.kind == "iri":
            return self._iri(token.text, token.line)
        if token.kind == "pname":
            return self._expand(token.text, token.line)
        if token.kind == "var":
            return Variable(token.text[1:])
        if token.kind == "a":
            return RDF.type
        if token.kind == "literal":
            return self._literal(token)
        if token.kind == "number":
            return Literal(token.text, datatype=XSD.integer)
        raise RuleSyntax(token.line, f"expected a term, found {token.text!r}")

    def _graph(self) -> tuple[TriplePattern, ...]:
        self._next("{")
        patterns = []
        while (token := self._peek()) is not None and token.text != "}":
            line = token.line
            terms = (self._term(), self._term(), self._term())
            try:
                patterns.append(TriplePattern(*terms))
            except InvalidTriple as exc:
                raise RuleSyntax(line, str(exc)) from exc
            if (token := self._peek()) is not None and token.text == ".":
                self._next(".")
            elif token is None or token.text != "}":
                raise RuleSyntax(self._line(), "expected '.' or '}' after a pattern")
        self._next("}")
        return tuple(patterns)

    def _prefix_declaration(self) -> None:
        self._next("@prefix")
        label = self._next()
        if label.kind != "pname" or not label.text.endswith(":"):
            raise RuleSyntax(label.line, f"expected a prefix label, found {label.text!r}")
        namespace = self._next()
        if namespace.kind != "iri":
            raise RuleSyntax(namespace.line, f"expected a namespace IRI, found {namespace.text!r}")
        self._prefixes[label.text[:-1]] = str(self._iri(namespace.text, namespace.line))
        self._next(".")

    def rules(self) -> list[Rule]:
        rules = []
        while (token := self._peek()) is not None:
            if token.kind == "prefix":
                self._prefix_declaration()
                continue
            line = token.line
            premises = self._graph()
            self._next("=>")
            conclusions = self._graph()
            self._next(".")
            if not premises or not conclusions:
                raise RuleSyntax(line, "a rule needs at least one premise and one conclusion")
            rules.append(Rule(premises=premises, conclusions=conclusions, name=f"line-{line}"))
        return rules


def load_rules(doc: bytes | str) -> RuleSet:
    """Parse a rule file into a custom ``RuleSet``.

    Raises:
        RuleSyntax: On grammar errors, with the offending line.
        UnsafeRule: If a conclusion variable is bound by no premise.
    """
    try:
        text = doc.decode("utf-8") if isinstance(doc, bytes) else doc
    except UnicodeDecodeError as exc:
        raise RuleSyntax(1, "rule file is not UTF-8") from exc

    rules = _RuleReader(text).rules()
    logger.debug("Loaded %d rules", len(rules))
    return RuleSet(RuleSetName.CUSTOM, tuple(rules))
