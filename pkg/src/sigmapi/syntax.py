"""Surface syntax: lexer, type/term parsers, and the declaration file format.

Term files are UTF-8 with ``#`` line comments: an optional graph header

    graph { node x; node y; edge k : x -> y; }

followed by declarations

    term name : TYPE -> TYPE = TERM ;

Type syntax: ``0``, ``1``, identifiers for generators, ``+``, ``*`` (tighter,
both right-associative), parentheses.  Term syntax: ``!``, ``?``, prefix
``p0/p1`` and ``s0/s1``, ``< , >``, ``{ , }``, ``@edge`` or ``@edge.edge`` for
generator paths (``@node`` is the empty path), ``id:T``, and ``;`` for cut.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .graph import Edge, GeneratorGraph, EMPTY_GRAPH
from .terms import (
    BANG,
    QUEST,
    Cotuple,
    Cut,
    GenArrow,
    Id,
    Inj,
    Proj,
    Term,
    Tuple,
    format_term,
    infer,
    TypedTerm,
)
from .types import Gen, ObjectType, Prod, Sum, ONE, ZERO, format_type


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int):
        self.line = line
        self.col = col
        super().__init__(f"{message} (line {line}, column {col})")


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+|\#[^\n]*)
      | (?P<arrow>->)
      | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<sym>[01!?<>{}(),;:+*@=.])
    """,
    re.VERBOSE,
)

_KEYWORDS = {"term", "graph", "node", "edge", "id"}
_TERM_WORDS = {"p0", "p1", "s0", "s1", "id"}


@dataclass
class _Token:
    kind: str  # 'ident' | 'sym' | 'arrow' | 'eof'
    text: str
    line: int
    col: int


def _lex(text: str) -> list[_Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        chunk = m.group()
        if kind != "ws":
            tokens.append(_Token(kind, chunk, line, m.start() - line_start + 1))
        line += chunk.count("\n")
        if "\n" in chunk:
            line_start = m.start() + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


@dataclass
class Declaration:
    name: str
    dom: ObjectType
    cod: ObjectType
    term: Term  # raw; run through infer/eliminate as needed


@dataclass
class Module:
    graph: GeneratorGraph = EMPTY_GRAPH
    decls: dict[str, Declaration] = field(default_factory=dict)

    def typed(self, name: str) -> TypedTerm:
        d = self.decls[name]
        return infer(d.term, d.dom, d.cod, self.graph)


class _Parser:
    def __init__(self, tokens: list[_Token], graph: GeneratorGraph = EMPTY_GRAPH):
        self.toks = tokens
        self.i = 0
        self.graph = graph

    # -- token plumbing -------------------------------------------------
    def peek(self, ahead: int = 0) -> _Token:
        return self.toks[min(self.i + ahead, len(self.toks) - 1)]

    def next(self) -> _Token:
        tok = self.toks[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.next()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}",
                             tok.line, tok.col)
        return tok

    def fail(self, message: str):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.col)

    # -- types -----------------------------------------------------------
    def type_(self) -> ObjectType:
        left = self.prod()
        if self.peek().text == "+":
            self.next()
            return Sum(left, self.type_())
        return left

    def prod(self) -> ObjectType:
        left = self.type_atom()
        if self.peek().text == "*":
            self.next()
            return Prod(left, self.prod())
        return left

    def type_atom(self) -> ObjectType:
        tok = self.next()
        if tok.text == "0":
            return ZERO
        if tok.text == "1":
            return ONE
        if tok.text == "(":
            t = self.type_()
            self.expect(")")
            return t
        if tok.kind == "ident" and tok.text not in _KEYWORDS:
            return Gen(tok.text)
        raise ParseError(f"expected a type, found {tok.text or 'end of input'!r}",
                         tok.line, tok.col)

    # -- terms -----------------------------------------------------------
    def term(self) -> Term:
        t = self.prefix_term()
        while self.peek().text == ";" and self._starts_term(self.peek(1)):
            self.next()
            t = Cut(t, self.prefix_term())
        return t

    @staticmethod
    def _starts_term(tok: _Token) -> bool:
        if tok.kind == "ident":
            return tok.text in _TERM_WORDS
        return tok.text in ("!", "?", "<", "{", "(", "@")

    def prefix_term(self) -> Term:
        tok = self.peek()
        if tok.kind == "ident" and tok.text in ("p0", "p1", "s0", "s1"):
            self.next()
            index = int(tok.text[1])
            body = self.prefix_term()
            return Proj(index, body) if tok.text[0] == "p" else Inj(index, body)
        return self.atom_term()

    def atom_term(self) -> Term:
        tok = self.next()
        match tok.text:
            case "!":
                return BANG
            case "?":
                return QUEST
            case "<":
                left = self.term()
                self.expect(",")
                right = self.term()
                self.expect(">")
                return Tuple(left, right)
            case "{":
                left = self.term()
                self.expect(",")
                right = self.term()
                self.expect("}")
                return Cotuple(left, right)
            case "(":
                t = self.term()
                self.expect(")")
                return t
            case "id":
                self.expect(":")
                return Id(self.type_())
            case "@":
                return self.gen_path(tok)
        raise ParseError(f"expected a term, found {tok.text or 'end of input'!r}",
                         tok.line, tok.col)

    def gen_path(self, at: _Token) -> Term:
        names = [self.ident("generator path")]
        while self.peek().text == ".":
            self.next()
            names.append(self.ident("generator path"))
        first = names[0]
        if self.graph.has_node(first):
            if len(names) > 1:
                raise ParseError(f"{first!r} is a node; @node takes no path", at.line, at.col)
            return GenArrow(first, ())
        try:
            src = self.graph.edge(first).src
            self.graph.walk(src, tuple(names))
        except (KeyError, ValueError) as exc:
            raise ParseError(str(exc), at.line, at.col) from None
        return GenArrow(src, tuple(names))

    def ident(self, what: str) -> str:
        tok = self.next()
        if tok.kind != "ident":
            raise ParseError(f"expected an identifier in {what}", tok.line, tok.col)
        return tok.text

    # -- files -----------------------------------------------------------
    def module(self) -> Module:
        graph = EMPTY_GRAPH
        if self.peek().text == "graph":
            graph = self.graph_block()
        self.graph = graph
        decls: dict[str, Declaration] = {}
        while self.peek().kind != "eof":
            d = self.declaration()
            if d.name in decls:
                self.fail(f"duplicate term name {d.name!r}")
            decls[d.name] = d
        return Module(graph, decls)

    def graph_block(self) -> GeneratorGraph:
        self.expect("graph")
        self.expect("{")
        nodes: list[str] = []
        edges: list[Edge] = []
        while self.peek().text != "}":
            tok = self.next()
            if tok.text == "node":
                nodes.append(self.ident("node declaration"))
                self.expect(";")
            elif tok.text == "edge":
                name = self.ident("edge declaration")
                self.expect(":")
                src = self.ident("edge declaration")
                self.expect("->")
                dst = self.ident("edge declaration")
                self.expect(";")
                edges.append(Edge(name, src, dst))
            else:
                raise ParseError("expected 'node' or 'edge'", tok.line, tok.col)
        self.expect("}")
        try:
            return GeneratorGraph(frozenset(nodes), tuple(edges))
        except ValueError as exc:
            self.fail(str(exc))

    def declaration(self) -> Declaration:
        self.expect("term")
        name = self.ident("term declaration")
        if name in _KEYWORDS or name in _TERM_WORDS:
            self.fail(f"{name!r} is reserved")
        self.expect(":")
        dom = self.type_()
        tok = self.next()
        if tok.kind != "arrow":
            raise ParseError("expected '->' in term declaration", tok.line, tok.col)
        cod = self.type_()
        self.expect("=")
        body = self.term()
        self.expect(";")
        return Declaration(name, dom, cod, body)


def parse_type(text: str) -> ObjectType:
    p = _Parser(_lex(text))
    t = p.type_()
    if p.peek().kind != "eof":
        p.fail("trailing input after type")
    return t


def parse_term(text: str, graph: GeneratorGraph = EMPTY_GRAPH) -> Term:
    """Parse a single (possibly raw) term; generator paths are resolved
    against ``graph``."""
    p = _Parser(_lex(text), graph)
    t = p.term()
    if p.peek().kind != "eof":
        p.fail("trailing input after term")
    return t


def parse_module(text: str) -> Module:
    return _Parser(_lex(text)).module()


def format_module(module: Module) -> str:
    lines = []
    g = module.graph
    if g.nodes:
        inner = [f"node {n};" for n in sorted(g.nodes)]
        inner += [f"edge {e.name} : {e.src} -> {e.dst};" for e in g.edges]
        lines.append("graph { " + " ".join(inner) + " }")
    for d in module.decls.values():
        lines.append(
            f"term {d.name} : {format_type(d.dom)} -> {format_type(d.cod)} "
            f"= {format_term(d.term)} ;"
        )
    return "\n".join(lines) + "\n"
