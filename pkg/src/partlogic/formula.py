"""Partition-logic formulas: AST, parser, printer and the two evaluators.

Grammar, loosest binding first::

    formula  := additive [ "->" formula ]          right associative
    additive := conj { "|" conj }  |  conj { "+" conj }
    conj     := atom { "&" atom }
    atom     := NAME | "0" | "1" | "(" formula ")"
              | op"<TF string>" "(" [ formula { "," formula } ] ")"

``|`` and ``+`` share a level and cannot be mixed without parentheses.
The Unicode spellings ``∧ ∨ ⊕ → ⇒`` are accepted as aliases.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Mapping, Union

from .boolops import AND, IMP, OR, XOR, TruthTable, apply, table_from_string
from .core import Partition, Universe
from .errors import (
    ArityError,
    MethodUnsupportedError,
    PartitionLogicError,
    TableError,
    UnboundVariableError,
    UniverseMismatchError,
    FormulaSyntaxError,
)

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

INFIX = {str(OR): "|", str(AND): "&", str(IMP): "->", str(XOR): "+"}
_SYMBOL_TABLE = {"|": OR, "&": AND, "->": IMP, "+": XOR}
BLOCK_CONNECTIVES = frozenset({str(OR), str(AND), str(IMP)})


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not NAME_RE.fullmatch(self.name):
            raise ValueError(f"invalid variable name {self.name!r}")

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class ConstTop:
    """The discrete partition ``1``."""

    def __str__(self) -> str:
        return "1"


@dataclass(frozen=True)
class ConstBottom:
    """The indiscrete partition ``0``."""

    def __str__(self) -> str:
        return "0"


@dataclass(frozen=True)
class Apply:
    table: TruthTable
    args: tuple["Formula", ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) != self.table.arity:
            raise ArityError(f"table {self.table} has arity {self.table.arity}, given {len(self.args)} arguments")

    def __str__(self) -> str:
        return to_text(self)


Formula = Union[Var, ConstTop, ConstBottom, Apply]


def join(a: Formula, b: Formula) -> Apply:
    return Apply(OR, (a, b))


def meet(a: Formula, b: Formula) -> Apply:
    return Apply(AND, (a, b))


def implies(a: Formula, b: Formula) -> Apply:
    return Apply(IMP, (a, b))


def xor(a: Formula, b: Formula) -> Apply:
    return Apply(XOR, (a, b))


# -- lexing and parsing ------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<table>op"(?P<tf>[^"]*)")
  | (?P<arrow>->|→|⇒)
  | (?P<and>&|∧)
  | (?P<or>\||∨)
  | (?P<xor>\+|⊕)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<comma>,)
  | (?P<const>[01](?![A-Za-z0-9_]))
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)
_CANON = {"arrow": "->", "and": "&", "or": "|", "xor": "+"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind == "tf":
            kind = "table"
        if kind != "ws":
            value = m.group("tf") if kind == "table" else _CANON.get(kind, m.group())
            tokens.append(Token(kind, value, pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        shown = repr(tok.text) if tok.kind != "eof" else "end of input"
        return FormulaSyntaxError(f"{message}, found {shown}", tok.pos, self.text)

    def expect(self, kind: str) -> Token:
        tok = self.tok
        if tok.kind != kind:
            raise self.error(f"expected {kind!r}")
        self.i += 1
        return tok

    def parse(self) -> Formula:
        result = self.implication()
        if self.tok.kind != "eof":
            raise self.error("unexpected token")
        return result

    def implication(self) -> Formula:
        left = self.additive()
        if self.tok.kind == "arrow":
            self.i += 1
            return Apply(IMP, (left, self.implication()))
        return left

    def additive(self) -> Formula:
        left = self.conj()
        op = None
        while self.tok.kind in ("or", "xor"):
            tok = self.tok
            if op is not None and tok.text != op:
                raise self.error("'|' and '+' cannot be mixed without parentheses", tok)
            op = tok.text
            self.i += 1
            left = Apply(_SYMBOL_TABLE[op], (left, self.conj()))
        return left

    def conj(self) -> Formula:
        left = self.atom()
        while self.tok.kind == "and":
            self.i += 1
            left = Apply(AND, (left, self.atom()))
        return left

    def atom(self) -> Formula:
        tok = self.tok
        if tok.kind == "name":
            self.i += 1
            return Var(tok.text)
        if tok.kind == "const":
            self.i += 1
            return ConstTop() if tok.text == "1" else ConstBottom()
        if tok.kind == "lpar":
            self.i += 1
            inner = self.implication()
            self.expect("rpar")
            return inner
        if tok.kind == "table":
            return self.application()
        raise self.error("expected a variable, constant, '(' or op\"...\"")

    def application(self) -> Formula:
        tok = self.expect("table")
        s = tok.text
        arity = max(len(s) - 1, 0).bit_length()
        if not s or len(s) != 1 << arity:
            raise FormulaSyntaxError(f"truth table {s!r} does not have a power-of-two length", tok.pos, self.text)
        try:
            table = table_from_string(arity, s)
        except TableError as exc:
            raise FormulaSyntaxError(str(exc), tok.pos, self.text) from None
        self.expect("lpar")
        args: list[Formula] = []
        if self.tok.kind != "rpar":
            args.append(self.implication())
            while self.tok.kind == "comma":
                self.i += 1
                args.append(self.implication())
        self.expect("rpar")
        if len(args) != arity:
            raise ArityError(f"op\"{s}\" at position {tok.pos} takes {arity} arguments, given {len(args)}")
        return Apply(table, tuple(args))


def parse(text: str) -> Formula:
    return _Parser(text).parse()


def to_text(formula: Formula) -> str:
    """Fully parenthesized canonical text; ``parse(to_text(f)) == f``."""
    if isinstance(formula, Var):
        return formula.name
    if isinstance(formula, ConstTop):
        return "1"
    if isinstance(formula, ConstBottom):
        return "0"
    key = str(formula.table)
    if formula.table.arity == 2 and key in INFIX:
        a, b = formula.args
        return f"({to_text(a)} {INFIX[key]} {to_text(b)})"
    return f'op"{key}"(' + ", ".join(to_text(a) for a in formula.args) + ")"


def subformulas(formula: Formula) -> Iterator[Formula]:
    yield formula
    if isinstance(formula, Apply):
        for a in formula.args:
            yield from subformulas(a)


def variables(formula: Formula) -> list[str]:
    """Free variables in order of first occurrence, left to right."""
    seen: dict[str, None] = {}
    for sub in subformulas(formula):
        if isinstance(sub, Var):
            seen.setdefault(sub.name)
    return list(seen)


def depth(formula: Formula) -> int:
    if isinstance(formula, Apply) and formula.args:
        return 1 + max(depth(a) for a in formula.args)
    return 0


def uses_only_block_connectives(formula: Formula) -> bool:
    return all(
        str(sub.table) in BLOCK_CONNECTIVES and sub.table.arity == 2
        for sub in subformulas(formula)
        if isinstance(sub, Apply)
    )


# -- evaluation --------------------------------------------------------------


def eval_truth(formula: Formula, valuation: Mapping[str, bool]) -> bool:
    if isinstance(formula, Var):
        try:
            return bool(valuation[formula.name])
        except KeyError:
            raise UnboundVariableError(formula.name) from None
    if isinstance(formula, ConstTop):
        return True
    if isinstance(formula, ConstBottom):
        return False
    return formula.table(*(eval_truth(a, valuation) for a in formula.args))


@dataclass(frozen=True)
class Assignment:
    """Partitions bound to variable names, all on one universe."""

    universe: Universe
    bindings: Mapping[str, Partition]

    def __post_init__(self):
        for name, p in self.bindings.items():
            if p.universe != self.universe:
                raise UniverseMismatchError(f"binding {name!r} is not on the assignment's universe")

    def __getitem__(self, name: str) -> Partition:
        try:
            return self.bindings[name]
        except KeyError:
            raise UnboundVariableError(name) from None

    def describe(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.bindings.items())


METHODS = ("graph", "closure", "blocks")


def eval_partition(
    formula: Formula,
    assignment: Assignment,
    method: str = "graph",
    memo: dict | None = None,
) -> Partition:
    """Evaluate bottom-up with the chosen construction.

    ``memo`` may be a dict shared across calls; it caches results keyed by
    connective and argument rgs and never changes the answer.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "blocks" and not uses_only_block_connectives(formula):
        raise MethodUnsupportedError("the blocks method only covers |, & and ->")
    return _eval(formula, assignment, method, memo)


def _eval(formula: Formula, a: Assignment, method: str, memo: dict | None) -> Partition:
    if isinstance(formula, Var):
        return a[formula.name]
    if isinstance(formula, ConstTop):
        return Partition.discrete(a.universe)
    if isinstance(formula, ConstBottom):
        return Partition.indiscrete(a.universe)
    args = [_eval(x, a, method, memo) for x in formula.args]
    if memo is None:
        return apply(formula.table, args, method, a.universe)
    key = (formula.table.rows, method, a.universe.size, tuple(p.rgs for p in args))
    hit = memo.get(key)
    if hit is None:
        hit = apply(formula.table, args, method, a.universe)
        memo[key] = hit
    elif hit.universe != a.universe:
        hit = Partition(a.universe, hit.rgs)
    return hit


# -- corpus files ------------------------------------------------------------


@dataclass
class CorpusEntry:
    name: str
    text: str
    line: int
    formula: Formula | None = None
    error: PartitionLogicError | None = None


def parse_corpus(text: str) -> list[CorpusEntry]:
    """Read ``name: formula`` lines; ``#`` starts a comment.

    Unparsable lines become entries carrying the error instead of raising.
    """
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            err = FormulaSyntaxError("expected 'name: formula'", 0, line)
            entries.append(CorpusEntry(f"line{lineno}", line, lineno, error=err))
            continue
        name, body = (x.strip() for x in line.split(":", 1))
        entry = CorpusEntry(name or f"line{lineno}", body, lineno)
        try:
            entry.formula = parse(body)
        except PartitionLogicError as exc:
            entry.error = exc
        entries.append(entry)
    return entries


def load_corpus(path: str | Path) -> list[CorpusEntry]:
    return parse_corpus(Path(path).read_text(encoding="utf-8"))
