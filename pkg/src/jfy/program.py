"""Rule-language frontend: parse, pretty-print, ground, lower to frames.

Syntax::

    head :- lit, ..., lit.     % rule; body literals comma-separated
    head.                      % fact, sugar for `head :- true.`
    #open pred/arity.          % declare a predicate open
    % comment, to end of line

A literal is ``true``, ``false``, or an atom, optionally prefixed with
``not``.  Atoms are ``pred`` or ``pred(term, ...)``; a term starting
with an uppercase letter or underscore is a variable, anything else
(identifier or integer) is a constant.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Union

from .errors import EmptyDomainError, NotGroundError, OpenAsHeadError, ParseError
from .facts import FALSE, TRUE, SymbolTable, negate
from .frame import JustificationFrame, Rule, build_frame, complement


@dataclass(frozen=True, slots=True)
class PredAtom:
    pred: str
    args: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class BodyLit:
    """One body literal; ``item`` is a bool for the true/false keywords."""

    item: Union[PredAtom, bool]
    negated: bool = False


@dataclass(frozen=True, slots=True)
class ProgramRule:
    head: PredAtom
    body: tuple[BodyLit, ...]


@dataclass(frozen=True, slots=True)
class Program:
    rules: tuple[ProgramRule, ...]
    opens: frozenset[tuple[str, int]]


_TRUE_BODY = (BodyLit(True),)


def is_variable(term: str) -> bool:
    return bool(term) and (term[0].isupper() or term[0] == "_")


def atom_text(atom: PredAtom) -> str:
    """Canonical printable form, no spaces: ``pred(a,b)``."""
    if not atom.args:
        return atom.pred
    return f"{atom.pred}({','.join(atom.args)})"


# ---------------------------------------------------------------- tokenizer

@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # IDENT | VAR | INT | PUNCT | ERROR | EOF
    text: str
    line: int
    col: int


_PUNCT_TWO = (":-",)
_PUNCT_ONE = ",.()/#"


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        two = text[i : i + 2]
        if two in _PUNCT_TWO:
            tokens.append(_Token("PUNCT", two, line, start_col))
            i += 2
            col += 2
            continue
        if ch in _PUNCT_ONE:
            tokens.append(_Token("PUNCT", ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = "VAR" if is_variable(word) else "IDENT"
            tokens.append(_Token(kind, word, line, start_col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        tokens.append(_Token("ERROR", ch, line, start_col))
        i += 1
        col += 1
    tokens.append(_Token("EOF", "", line, col))
    return tokens


# ------------------------------------------------------------------- parser

class _Bail(Exception):
    """Internal: unwind to the statement loop for error recovery."""


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0
        self.errors: list[tuple[int, int, str]] = []

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def fail(self, tok: _Token, msg: str) -> None:
        self.errors.append((tok.line, tok.col, msg))
        raise _Bail

    def expect_punct(self, text: str) -> None:
        tok = self.peek()
        if tok.kind == "PUNCT" and tok.text == text:
            self.advance()
            return
        shown = tok.text or "end of input"
        self.fail(tok, f"expected {text!r}, found {shown!r}")

    def synchronize(self) -> None:
        # skip to just past the next '.' so later statements still parse
        while True:
            tok = self.advance()
            if tok.kind == "EOF" or (tok.kind == "PUNCT" and tok.text == "."):
                return

    def program(self) -> Program:
        rules: list[ProgramRule] = []
        opens: set[tuple[str, int]] = set()
        while self.peek().kind != "EOF":
            try:
                if self.peek().kind == "PUNCT" and self.peek().text == "#":
                    opens.add(self.directive())
                else:
                    rules.append(self.rule())
            except _Bail:
                self.synchronize()
        if self.errors:
            raise ParseError(self.errors)
        return Program(tuple(rules), frozenset(opens))

    def directive(self) -> tuple[str, int]:
        self.expect_punct("#")
        tok = self.advance()
        if tok.kind != "IDENT" or tok.text != "open":
            self.fail(tok, f"expected 'open' after '#', found {tok.text!r}")
        name = self.advance()
        if name.kind != "IDENT":
            self.fail(name, "expected a predicate name")
        self.expect_punct("/")
        arity = self.advance()
        if arity.kind != "INT":
            self.fail(arity, "expected an arity")
        self.expect_punct(".")
        return (name.text, int(arity.text))

    def rule(self) -> ProgramRule:
        head = self.atom()
        tok = self.peek()
        if tok.kind == "PUNCT" and tok.text == ":-":
            self.advance()
            body = [self.literal()]
            while self.peek().kind == "PUNCT" and self.peek().text == ",":
                self.advance()
                body.append(self.literal())
            self.expect_punct(".")
            return ProgramRule(head, tuple(body))
        self.expect_punct(".")
        return ProgramRule(head, _TRUE_BODY)

    def literal(self) -> BodyLit:
        negated = False
        tok = self.peek()
        if tok.kind == "IDENT" and tok.text == "not":
            self.advance()
            negated = True
            tok = self.peek()
        if tok.kind == "IDENT" and tok.text in ("true", "false"):
            self.advance()
            return BodyLit(tok.text == "true", negated)
        return BodyLit(self.atom(), negated)

    def atom(self) -> PredAtom:
        tok = self.advance()
        if tok.kind != "IDENT":
            shown = tok.text or "end of input"
            self.fail(tok, f"expected an atom, found {shown!r}")
        if tok.text in ("not", "true", "false"):
            self.fail(tok, f"{tok.text!r} cannot start an atom")
        if not (self.peek().kind == "PUNCT" and self.peek().text == "("):
            return PredAtom(tok.text)
        self.advance()
        args = [self.term()]
        while self.peek().kind == "PUNCT" and self.peek().text == ",":
            self.advance()
            args.append(self.term())
        self.expect_punct(")")
        return PredAtom(tok.text, tuple(args))

    def term(self) -> str:
        tok = self.advance()
        if tok.kind in ("IDENT", "VAR", "INT"):
            return tok.text
        shown = tok.text or "end of input"
        self.fail(tok, f"expected a term, found {shown!r}")
        raise AssertionError  # unreachable


def parse(text: str) -> Program:
    """Parse source text; raises ``ParseError`` carrying every recovered
    error with its 1-based line and column."""
    return _Parser(_tokenize(text)).program()


def parse_ground_atom(text: str) -> PredAtom:
    """Parse a single ground atom such as ``edge(a,b)``."""
    parser = _Parser(_tokenize(text))
    try:
        atom = parser.atom()
    except _Bail:
        raise ParseError(parser.errors) from None
    tail = parser.peek()
    if tail.kind != "EOF":
        raise ParseError([(tail.line, tail.col, f"unexpected {tail.text!r} after atom")])
    if any(is_variable(a) for a in atom.args):
        raise ParseError([(1, 1, f"atom {atom_text(atom)} is not ground")])
    return atom


# ----------------------------------------------------------- pretty-printer

def _literal_text(lit: BodyLit) -> str:
    if isinstance(lit.item, bool):
        base = "true" if lit.item else "false"
    else:
        base = atom_text(lit.item)
    return f"not {base}" if lit.negated else base


def pretty(program: Program) -> str:
    """Render back to source; ``parse(pretty(p))`` is structurally ``p``."""
    lines = [f"#open {pred}/{arity}." for pred, arity in sorted(program.opens)]
    for rule in program.rules:
        if rule.body == _TRUE_BODY:
            lines.append(f"{atom_text(rule.head)}.")
        else:
            body = ", ".join(_literal_text(lit) for lit in rule.body)
            lines.append(f"{atom_text(rule.head)} :- {body}.")
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------- grounding

def constants_of(program: Program) -> tuple[str, ...]:
    """All constants occurring in the program's rules, sorted."""
    consts: set[str] = set()
    for rule in program.rules:
        atoms = [rule.head] + [
            lit.item for lit in rule.body if isinstance(lit.item, PredAtom)
        ]
        for atom in atoms:
            consts.update(t for t in atom.args if not is_variable(t))
    return tuple(sorted(consts))


def _rule_variables(rule: ProgramRule) -> tuple[str, ...]:
    vs: set[str] = set()
    atoms = [rule.head] + [
        lit.item for lit in rule.body if isinstance(lit.item, PredAtom)
    ]
    for atom in atoms:
        vs.update(t for t in atom.args if is_variable(t))
    return tuple(sorted(vs))


def _substitute(atom: PredAtom, binding: dict[str, str]) -> PredAtom:
    if not atom.args:
        return atom
    return PredAtom(atom.pred, tuple(binding.get(t, t) for t in atom.args))


def ground(program: Program, domain: Optional[Iterable[str]] = None) -> Program:
    """Naive grounding: every rule is instantiated for every combination
    of domain constants over its variables.  The domain defaults to the
    constants occurring in the program."""
    if domain is None:
        domain_t = constants_of(program)
    else:
        domain_t = tuple(sorted(set(domain)))
    out: list[ProgramRule] = []
    seen: set[ProgramRule] = set()

    def emit(rule: ProgramRule) -> None:
        if rule not in seen:
            seen.add(rule)
            out.append(rule)

    for rule in program.rules:
        vs = _rule_variables(rule)
        if not vs:
            emit(rule)
            continue
        if not domain_t:
            raise EmptyDomainError(
                f"rule for {atom_text(rule.head)} has variables but the domain is empty"
            )
        for combo in product(domain_t, repeat=len(vs)):
            binding = dict(zip(vs, combo))
            head = _substitute(rule.head, binding)
            body = tuple(
                BodyLit(
                    lit.item if isinstance(lit.item, bool) else _substitute(lit.item, binding),
                    lit.negated,
                )
                for lit in rule.body
            )
            emit(ProgramRule(head, body))
    return Program(tuple(out), program.opens)


# ----------------------------------------------------------------- lowering

def to_frame(
    program: Program, symbols: Optional[SymbolTable] = None
) -> JustificationFrame:
    """Lower a ground program to a complemented justification frame.

    Rule-less non-open atoms become ``x <- {f}``; every defined fact then
    gets dual rules for its negation.  Raises ``NotGroundError`` on
    variables and ``OpenAsHeadError`` when an open predicate heads a rule.
    """
    if symbols is None:
        symbols = SymbolTable()
    open_preds = program.opens

    def is_open(atom: PredAtom) -> bool:
        return (atom.pred, len(atom.args)) in open_preds

    lowered: list[Rule] = []
    defined_names: set[str] = set()
    arity_of: dict[str, tuple[str, int]] = {}

    def intern(atom: PredAtom):
        if any(is_variable(t) for t in atom.args):
            raise NotGroundError(f"{atom_text(atom)} contains variables")
        name = atom_text(atom)
        arity_of.setdefault(name, (atom.pred, len(atom.args)))
        return symbols.literal(name)

    for rule in program.rules:
        if is_open(rule.head):
            raise OpenAsHeadError(
                f"open predicate {rule.head.pred}/{len(rule.head.args)} used as a rule head"
            )
        head = intern(rule.head)
        body = set()
        for lit in rule.body:
            if isinstance(lit.item, bool):
                base = TRUE if lit.item else FALSE
            else:
                base = intern(lit.item)
            body.add(negate(base) if lit.negated else base)
        lowered.append(Rule(head, frozenset(body)))
        defined_names.add(atom_text(rule.head))

    for name in symbols.names():
        meta = arity_of.get(name)
        if meta is None or name in defined_names or meta in open_preds:
            continue
        lowered.append(Rule(symbols.literal(name), frozenset({FALSE})))

    return complement(build_frame(lowered, symbols))
