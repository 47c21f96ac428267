"""Reader and writer for the knowledge-base text format.

::

    % comment
    a ; b :- c, not d.      rule (facts omit ':-')
    #clause a | -b.         ontology clause, '-' negates
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from hmknf.kb import ATOM_NAME, Atom, KnowledgeBase, Rule
from hmknf.ontology import ClausalOntology, Clause, Literal


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message


@dataclass(frozen=True)
class KbDocument:
    source: str
    kb: KnowledgeBase
    rule_locations: tuple[tuple[int, int], ...] = field(default=())
    clause_locations: tuple[tuple[int, int], ...] = field(default=())


_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<newline>\n)
  | (?P<comment>%[^\n]*)
  | (?P<directive>\#[A-Za-z]+)
  | (?P<if>:-)
  | (?P<word>[A-Za-z0-9_]+)
  | (?P<punct>[;,.|\-])
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(line, pos - line_start + 1, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind == "newline":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.names: dict[str, int] = {}
        self.rules: list[tuple[list[str], list[str], list[str]]] = []
        self.rule_locs: list[tuple[int, int]] = []
        self.clauses: list[list[tuple[str, bool]]] = []
        self.clause_locs: list[tuple[int, int]] = []

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, message: str, tok: _Tok | None = None):
        tok = tok or self.tok
        raise ParseError(tok.line, tok.col, message)

    def advance(self) -> _Tok:
        tok = self.tok
        self.i += 1
        return tok

    def atom(self) -> str:
        tok = self.tok
        if tok.kind != "word":
            self.fail(f"expected an atom, found {tok.text or 'end of input'!r}")
        if not ATOM_NAME.match(tok.text) or tok.text == "not":
            self.fail(f"malformed atom {tok.text!r}")
        return self.advance().text

    def terminator(self):
        tok = self.tok
        if tok.kind == "punct" and tok.text == ".":
            self.advance()
            return
        prev = self.toks[self.i - 1]
        if tok.kind == "eof" or tok.line != prev.line:
            self.fail("missing terminator '.'", _Tok("eof", "", prev.line, prev.col + len(prev.text)))
        self.fail(f"unexpected {tok.text!r}")

    def parse(self):
        while self.tok.kind != "eof":
            if self.tok.kind == "directive":
                self.clause()
            else:
                self.rule()

    def rule(self):
        start = self.tok
        head: list[str] = []
        if start.kind == "if":
            self.fail("rule with an empty head")
        head.append(self.atom())
        while self.tok.kind == "punct" and self.tok.text == ";":
            self.advance()
            head.append(self.atom())
        pos: list[str] = []
        neg: list[str] = []
        if self.tok.kind == "if":
            self.advance()
            while True:
                if self.tok.kind == "word" and self.tok.text == "not" and self.toks[self.i + 1].kind == "word":
                    self.advance()
                    neg.append(self.atom())
                else:
                    pos.append(self.atom())
                if self.tok.kind == "punct" and self.tok.text == ",":
                    self.advance()
                    continue
                break
        self.terminator()
        self.rules.append((head, pos, neg))
        self.rule_locs.append((start.line, start.col))

    def clause(self):
        start = self.advance()
        if start.text != "#clause":
            self.fail(f"unknown directive {start.text!r}", start)
        lits: list[tuple[str, bool]] = []
        while True:
            positive = True
            if self.tok.kind == "punct" and self.tok.text == "-":
                self.advance()
                positive = False
            at = self.tok
            name = self.atom()
            for other, pol in lits:
                if other == name and pol != positive:
                    self.fail(f"tautological clause: {name!r} occurs with both polarities", at)
            lits.append((name, positive))
            if self.tok.kind == "punct" and self.tok.text == "|":
                self.advance()
                continue
            break
        self.terminator()
        self.clauses.append(lits)
        self.clause_locs.append((start.line, start.col))


def parse_kb(text: str) -> KbDocument:
    p = _Parser(text)
    p.parse()
    index: dict[str, int] = {}

    def intern(name: str) -> int:
        return index.setdefault(name, len(index))

    # rule atoms first so that KA(K) occupies the low ids
    rules = tuple(
        Rule(
            frozenset(map(intern, head)),
            frozenset(map(intern, pos)),
            frozenset(map(intern, neg)),
        )
        for head, pos, neg in p.rules
    )
    clauses = tuple(
        Clause(frozenset(Literal(intern(name), positive) for name, positive in lits)) for lits in p.clauses
    )
    atoms = tuple(Atom(i, name) for name, i in index.items())
    kb = KnowledgeBase(rules, ClausalOntology(clauses), atoms)
    return KbDocument(text, kb, tuple(p.rule_locs), tuple(p.clause_locs))


def serialize_kb(kb: KnowledgeBase) -> str:
    lines = []
    for r in kb.rules:
        head = " ; ".join(kb.names(r.head))
        body = kb.names(r.body_pos) + [f"not {n}" for n in kb.names(r.body_neg)]
        lines.append(f"{head} :- {', '.join(body)}." if body else f"{head}.")
    for c in kb.ontology.clauses:
        lits = sorted(c.literals, key=lambda l: (kb.name_of(l.atom), not l.positive))
        lines.append("#clause " + " | ".join(("" if l.positive else "-") + kb.name_of(l.atom) for l in lits) + ".")
    return "\n".join(lines) + ("\n" if lines else "")
