"""The fact space: four logical truth values plus signed literals.

Facts come in two kinds.  A ``Logical`` fact is one of the truth values
t, f, u, i regarded as a member of the space; a ``Literal`` is an
interned atom together with a polarity.  Negation is involutive: it
swaps t and f, fixes u and i, and flips a literal's polarity.

Two partial orders live on the truth values.  The truth order ranks
falsity below and truth above, with u and i incomparable between them:

    f  <=t  u, i  <=t  t

The information order ranks by how much is known, with u at the bottom
and i (both told true and told false) at the top:

    u  <=k  f, t  <=k  i
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union


class Value(enum.Enum):
    """The four logical truth values."""

    TRUE = "t"
    FALSE = "f"
    UNKNOWN = "u"
    INCONSISTENT = "i"


class Sign(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"


@dataclass(frozen=True, slots=True)
class Logical:
    """A truth value viewed as a fact; always a sink in any justification."""

    value: Value

    def __repr__(self) -> str:
        return self.value.value


@dataclass(frozen=True, slots=True)
class Literal:
    """A signed occurrence of an interned atom."""

    atom: int
    negative: bool = False

    def __repr__(self) -> str:
        return f"~a{self.atom}" if self.negative else f"a{self.atom}"


Fact = Union[Logical, Literal]

TRUE = Logical(Value.TRUE)
FALSE = Logical(Value.FALSE)
UNKNOWN = Logical(Value.UNKNOWN)
INCONSISTENT = Logical(Value.INCONSISTENT)

#: All four logical facts, in display order.
LOGICALS = (TRUE, FALSE, UNKNOWN, INCONSISTENT)

_NEGATED = {
    Value.TRUE: Value.FALSE,
    Value.FALSE: Value.TRUE,
    Value.UNKNOWN: Value.UNKNOWN,
    Value.INCONSISTENT: Value.INCONSISTENT,
}


def negate(x: Fact) -> Fact:
    """Involutive negation on facts."""
    if isinstance(x, Logical):
        return Logical(_NEGATED[x.value])
    return Literal(x.atom, not x.negative)


def sign(x: Fact) -> Optional[Sign]:
    """Polarity of a literal; logical facts carry none."""
    if isinstance(x, Logical):
        return None
    return Sign.NEGATIVE if x.negative else Sign.POSITIVE


def _transitive_reflexive(covers: set[tuple[Value, Value]]) -> frozenset[tuple[Value, Value]]:
    pairs = {(v, v) for v in Value} | covers
    changed = True
    while changed:
        changed = False
        for a, b in list(pairs):
            for c, d in list(pairs):
                if b is c and (a, d) not in pairs:
                    pairs.add((a, d))
                    changed = True
    return frozenset(pairs)


_V = Value
TRUTH_LEQ = _transitive_reflexive(
    {(_V.FALSE, _V.UNKNOWN), (_V.FALSE, _V.INCONSISTENT),
     (_V.UNKNOWN, _V.TRUE), (_V.INCONSISTENT, _V.TRUE)}
)
INFORMATION_LEQ = _transitive_reflexive(
    {(_V.UNKNOWN, _V.FALSE), (_V.UNKNOWN, _V.TRUE),
     (_V.FALSE, _V.INCONSISTENT), (_V.TRUE, _V.INCONSISTENT)}
)

_ORDERS = {"truth": TRUTH_LEQ, "information": INFORMATION_LEQ}


def leq(order: str, a: Value, b: Value) -> bool:
    """Whether ``a <= b`` in the named order ("truth" or "information")."""
    try:
        pairs = _ORDERS[order]
    except KeyError:
        raise ValueError(f"unknown order {order!r}") from None
    return (a, b) in pairs


_VALUE_RANK = {v: i for i, v in enumerate(_V)}


def fact_key(x: Fact) -> tuple[int, int, int]:
    """Total order on facts: logical values first, then atoms by intern id,
    positive polarity before negative.  Used everywhere determinism matters."""
    if isinstance(x, Logical):
        return (0, _VALUE_RANK[x.value], 0)
    return (1, x.atom, int(x.negative))


class SymbolTable:
    """Interns atom names to dense ids; ids follow first-intern order."""

    def __init__(self) -> None:
        self._ids: dict[str, int] = {}
        self._names: list[str] = []

    def __len__(self) -> int:
        return len(self._names)

    def intern(self, name: str) -> int:
        aid = self._ids.get(name)
        if aid is None:
            aid = len(self._names)
            self._ids[name] = aid
            self._names.append(name)
        return aid

    def lookup(self, name: str) -> Optional[int]:
        return self._ids.get(name)

    def name(self, atom: int) -> str:
        return self._names[atom]

    def names(self) -> tuple[str, ...]:
        return tuple(self._names)

    def literal(self, name: str, negative: bool = False) -> Literal:
        return Literal(self.intern(name), negative)

    def fact_text(self, x: Fact) -> str:
        """Printable form: atom name, ``~``-prefixed when negative; t/f/u/i."""
        if isinstance(x, Logical):
            return x.value.value
        prefix = "~" if x.negative else ""
        return prefix + self._names[x.atom]
