"""Branch evaluations: how a walk through a justification earns a value.

A branch starts at a defined fact and follows chosen rules.  Finite
branches end in an open or logical fact (a sink); infinite branches
cycle through defined facts forever.  Each evaluation maps a branch to
a fact, and for every evaluation here that image is an open or a
logical value:

* well-founded    - finite: the sink; infinite: t when the tail is all
                    negative, f when all positive, u when signs mix.
* stable          - the first element whose sign differs from the
                    branch's start, if any; otherwise a finite branch
                    yields its last element, and an infinite same-sign
                    branch yields f (positive) or t (negative).
* Kripke-Kleene   - finite: the sink; infinite: u.
* completion      - every branch yields its second element.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .facts import FALSE, TRUE, UNKNOWN, Fact, Sign, sign


class BranchEvaluation(enum.Enum):
    WELL_FOUNDED = "wf"
    STABLE = "stable"
    KRIPKE_KLEENE = "kk"
    COMPLETION = "sp"

    @classmethod
    def from_name(cls, name: str) -> "BranchEvaluation":
        for member in cls:
            if member.value == name:
                return member
        raise ValueError(f"unknown branch evaluation {name!r}")


@dataclass(frozen=True, slots=True)
class FiniteEndingIn:
    sink: Fact


@dataclass(frozen=True, slots=True)
class InfinitePositiveTail:
    pass


@dataclass(frozen=True, slots=True)
class InfiniteNegativeTail:
    pass


@dataclass(frozen=True, slots=True)
class InfiniteMixed:
    pass


@dataclass(frozen=True, slots=True)
class FirstSignSwitch:
    fact: Fact


@dataclass(frozen=True, slots=True)
class SameSignFinite:
    sink: Fact


@dataclass(frozen=True, slots=True)
class SameSignInfinite:
    branch_sign: Sign


@dataclass(frozen=True, slots=True)
class SecondElement:
    fact: Fact


BranchClass = Union[
    FiniteEndingIn,
    InfinitePositiveTail,
    InfiniteNegativeTail,
    InfiniteMixed,
    FirstSignSwitch,
    SameSignFinite,
    SameSignInfinite,
    SecondElement,
]

_BE = BranchEvaluation


def value_of_class(be: BranchEvaluation, cls: BranchClass) -> Fact:
    """The fact a branch of this class evaluates to.

    Raises ``ValueError`` when the class cannot arise under the
    evaluation (e.g. a sign switch under well-founded reading).
    """
    if be in (_BE.WELL_FOUNDED, _BE.KRIPKE_KLEENE):
        if isinstance(cls, FiniteEndingIn):
            return cls.sink
        if be is _BE.KRIPKE_KLEENE:
            if isinstance(cls, (InfinitePositiveTail, InfiniteNegativeTail, InfiniteMixed)):
                return UNKNOWN
        else:
            if isinstance(cls, InfinitePositiveTail):
                return FALSE
            if isinstance(cls, InfiniteNegativeTail):
                return TRUE
            if isinstance(cls, InfiniteMixed):
                return UNKNOWN
    elif be is _BE.STABLE:
        if isinstance(cls, FirstSignSwitch):
            return cls.fact
        if isinstance(cls, SameSignFinite):
            return cls.sink
        if isinstance(cls, SameSignInfinite):
            return FALSE if cls.branch_sign is Sign.POSITIVE else TRUE
    elif be is _BE.COMPLETION:
        if isinstance(cls, SecondElement):
            return cls.fact
    raise ValueError(f"branch class {cls!r} cannot arise under {be.value}")


def classify_finite(be: BranchEvaluation, nodes: tuple[Fact, ...]) -> BranchClass:
    """Classify a finite branch given as its node sequence (start first,
    sink last; at least two nodes)."""
    if len(nodes) < 2:
        raise ValueError("a branch has at least two elements")
    if be in (_BE.WELL_FOUNDED, _BE.KRIPKE_KLEENE):
        return FiniteEndingIn(nodes[-1])
    if be is _BE.COMPLETION:
        return SecondElement(nodes[1])
    start_sign = sign(nodes[0])
    for fact in nodes[1:]:
        s = sign(fact)
        if s is not None and s is not start_sign:
            return FirstSignSwitch(fact)
    return SameSignFinite(nodes[-1])


def classify_lasso(
    be: BranchEvaluation, nodes: tuple[Fact, ...], loop_start: int
) -> BranchClass:
    """Classify the infinite branch ``nodes[:loop_start]`` followed by
    ``nodes[loop_start:]`` repeated forever."""
    if not 0 <= loop_start < len(nodes):
        raise ValueError("loop_start out of range")
    cycle = nodes[loop_start:]
    if be is _BE.COMPLETION:
        if len(nodes) > 1:
            return SecondElement(nodes[1])
        return SecondElement(cycle[0])  # self-loop on the start
    if be in (_BE.WELL_FOUNDED, _BE.KRIPKE_KLEENE):
        signs = {sign(f) for f in cycle}
        if signs == {Sign.POSITIVE}:
            return InfinitePositiveTail()
        if signs == {Sign.NEGATIVE}:
            return InfiniteNegativeTail()
        return InfiniteMixed()
    # stable: scan one unrolling past the stem, enough to meet every element
    start_sign = sign(nodes[0])
    for fact in (nodes + cycle)[1:]:
        s = sign(fact)
        if s is not None and s is not start_sign:
            return FirstSignSwitch(fact)
    assert start_sign is not None
    return SameSignInfinite(start_sign)


def value_of_finite(be: BranchEvaluation, nodes: tuple[Fact, ...]) -> Fact:
    return value_of_class(be, classify_finite(be, nodes))


def value_of_lasso(
    be: BranchEvaluation, nodes: tuple[Fact, ...], loop_start: int
) -> Fact:
    return value_of_class(be, classify_lasso(be, nodes, loop_start))
