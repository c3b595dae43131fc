"""Justification frames: validated rule sets over a fact space.

A frame fixes which facts are *defined* (appear as some rule head) and
which are *open* (everything else in the vocabulary, both polarities of
every mentioned atom).  Rules have non-empty bodies and non-logical
heads; duplicates are dropped, first occurrence wins.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Optional

from .errors import (
    ComplementTooLargeError,
    EmptyBodyError,
    LogicalHeadError,
    NotDefinedError,
    NotOpenError,
    UnknownFactError,
)
from .facts import Fact, Literal, Logical, SymbolTable, fact_key, negate

#: Hard ceiling on dual bodies produced when complementing one head.
COMPLEMENT_CAP = 10_000


@dataclass(frozen=True)
class Rule:
    """``head <- body``; the body is a non-empty set of facts."""

    head: Literal
    body: frozenset[Fact]

    def sorted_body(self) -> tuple[Fact, ...]:
        return tuple(sorted(self.body, key=fact_key))


def rule_text(rule: Rule, symbols: SymbolTable) -> str:
    body = ", ".join(sorted(symbols.fact_text(b) for b in rule.body))
    return f"{symbols.fact_text(rule.head)} <- {{{body}}}"


class JustificationFrame:
    """Rules plus the defined/open split they induce.

    Build through :func:`build_frame`, which validates; the constructor
    trusts its input.
    """

    __slots__ = ("symbols", "rules", "defined", "opens", "_by_head", "__weakref__")

    def __init__(self, symbols: SymbolTable, rules: tuple[Rule, ...]):
        self.symbols = symbols
        self.rules = rules
        by_head: dict[Literal, list[Rule]] = {}
        for rule in rules:
            by_head.setdefault(rule.head, []).append(rule)
        self._by_head = {h: tuple(rs) for h, rs in by_head.items()}
        self.defined = frozenset(self._by_head)
        vocabulary: set[Literal] = set()
        for rule in rules:
            vocabulary.add(rule.head)
            vocabulary.add(negate(rule.head))  # type: ignore[arg-type]
            for b in rule.body:
                if isinstance(b, Literal):
                    vocabulary.add(b)
                    vocabulary.add(negate(b))  # type: ignore[arg-type]
        self.opens = frozenset(vocabulary - self.defined)

    def rules_for(self, head: Literal) -> tuple[Rule, ...]:
        """Rules with this head, in declaration order; empty if undefined."""
        return self._by_head.get(head, ())

    def literal_facts(self) -> tuple[Literal, ...]:
        """Every non-logical fact of the vocabulary, in fact_key order."""
        return tuple(sorted(self.defined | self.opens, key=fact_key))

    def defined_sorted(self) -> tuple[Literal, ...]:
        return tuple(sorted(self.defined, key=fact_key))

    def opens_sorted(self) -> tuple[Literal, ...]:
        return tuple(sorted(self.opens, key=fact_key))

    def positive_atoms(self) -> tuple[int, ...]:
        """Atom ids of the vocabulary, ascending."""
        return tuple(sorted({f.atom for f in self.defined | self.opens}))

    def describe(self) -> str:
        lines = [rule_text(r, self.symbols) for r in self.rules]
        lines.append(
            "opens: " + ", ".join(self.symbols.fact_text(o) for o in self.opens_sorted())
        )
        return "\n".join(lines)


def build_frame(rules: Iterable[Rule], symbols: SymbolTable) -> JustificationFrame:
    """Validate and assemble a frame.

    Raises ``LogicalHeadError`` if a head is a truth value,
    ``EmptyBodyError`` on an empty body.  Duplicate (head, body) pairs
    collapse to their first occurrence.
    """
    seen: set[tuple[Fact, frozenset[Fact]]] = set()
    kept: list[Rule] = []
    for rule in rules:
        if isinstance(rule.head, Logical):
            raise LogicalHeadError(f"rule head {rule.head!r} is a logical fact")
        if not rule.body:
            raise EmptyBodyError(f"rule for {symbols.fact_text(rule.head)} has an empty body")
        key = (rule.head, rule.body)
        if key in seen:
            continue
        seen.add(key)
        kept.append(rule)
    return JustificationFrame(symbols, tuple(kept))


def complement(
    frame: JustificationFrame,
    heads: Optional[Iterable[Literal]] = None,
    max_bodies: int = COMPLEMENT_CAP,
) -> JustificationFrame:
    """Extend the frame with dual rules for the negations of ``heads``.

    The duals of a defined fact x arise from selection functions: pick
    one body element from every rule for x, negate each pick, and the
    picks form one body of ~x.  Every combination is emitted, duplicates
    collapse, and rules the frame already has are not re-added.  Heads
    default to the defined facts of positive polarity.

    Raises ``ComplementTooLargeError`` before materializing anything if
    a single head would need more than ``max_bodies`` selections.
    """
    if heads is None:
        head_list = [h for h in frame.defined_sorted() if not h.negative]
    else:
        head_list = list(heads)

    new_rules: list[Rule] = list(frame.rules)
    present: set[tuple[Literal, frozenset[Fact]]] = {
        (r.head, r.body) for r in frame.rules
    }
    for head in head_list:
        own = frame.rules_for(head)
        if not own:
            raise NotDefinedError(
                f"{frame.symbols.fact_text(head)} is not defined; nothing to complement"
            )
        required = 1
        for rule in own:
            required *= len(rule.body)
            if required > max_bodies:
                raise ComplementTooLargeError(
                    frame.symbols.fact_text(head), required, max_bodies
                )
        dual_head = negate(head)
        assert isinstance(dual_head, Literal)
        for picks in product(*(rule.sorted_body() for rule in own)):
            body = frozenset(negate(p) for p in picks)
            key = (dual_head, body)
            if key in present:
                continue
            present.add(key)
            new_rules.append(Rule(dual_head, body))
    return JustificationFrame(frame.symbols, tuple(new_rules))


def resolve_fact(frame: JustificationFrame, text: str) -> Fact:
    """Parse a printable fact name ("p", "~edge(a,b)") against the frame.

    Raises ``UnknownFactError`` when the atom is not in the vocabulary.
    """
    text = text.strip()
    negative = text.startswith("~")
    if negative:
        text = text[1:].strip()
    atom = frame.symbols.lookup(text)
    if atom is None:
        raise UnknownFactError(f"unknown fact {text!r}")
    return Literal(atom, negative)


def resolve_open_assignment(
    frame: JustificationFrame, mapping: Mapping[str, bool]
) -> dict[Literal, bool]:
    """Resolve an opens file ({"edge(a,b)": true, ...}) against the frame.

    Keys must name positive facts that are open; raises
    ``UnknownFactError`` or ``NotOpenError`` otherwise.
    """
    out: dict[Literal, bool] = {}
    for name, value in mapping.items():
        fact = resolve_fact(frame, name)
        if fact.negative:
            raise NotOpenError(f"answer positive facts only, not {name!r}")
        if fact not in frame.opens:
            raise NotOpenError(f"{name!r} is not an open fact of this program")
        if not isinstance(value, bool):
            raise UnknownFactError(f"value for {name!r} must be true or false")
        out[fact] = value
    return out
