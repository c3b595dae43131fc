"""Semantics as fixpoints of the support operator.

The base interpretation holds t plus every answered open at its
answered polarity.  Well-founded and Kripke-Kleene models are least
fixpoints of the extended support operator over that base: a fact ends
up in the fixpoint exactly when it is decided, and the three-valued
model reads "true" for atoms in it, "false" for atoms whose negation is
in it, "unknown" otherwise.

Stable and supported models are total candidates (one polarity per
defined atom) accepted when each of their defined facts is supported in
them.  Every fixpoint and accepted model is checked for defects: no
fact may be supported together with its negation.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Optional

from .branching import BranchEvaluation
from .errors import DefectDetectedError
from .facts import TRUE, Fact, Literal, fact_key, negate
from .frame import JustificationFrame
from .justification import support_set

_BE = BranchEvaluation

#: atom name -> "true" | "false" | "unknown"
ThreeValued = dict[str, str]


def support_operator(
    frame: JustificationFrame, be: BranchEvaluation, interpretation: Iterable[Fact]
) -> frozenset[Literal]:
    """One application: the defined facts supported in the interpretation."""
    return support_set(frame, be, interpretation)


def extended_lfp(
    frame: JustificationFrame, be: BranchEvaluation, base: Iterable[Fact]
) -> frozenset[Fact]:
    """Least fixpoint of ``I -> I ∪ supported(I)`` above ``base``."""
    current = frozenset(base)
    while True:
        nxt = current | support_set(frame, be, current)
        if nxt == current:
            return current
        current = nxt


def opens_interpretation(
    frame: JustificationFrame, assignment: Optional[Mapping[Literal, bool]] = None
) -> frozenset[Fact]:
    """The base interpretation an opens assignment induces: t plus each
    answered open at its polarity."""
    base: set[Fact] = {TRUE}
    for fact, value in (assignment or {}).items():
        base.add(fact if value else negate(fact))
    return frozenset(base)


def _defects(frame: JustificationFrame, facts: Iterable[Fact]) -> list[str]:
    holding = set(facts)
    out = []
    for f in sorted(holding, key=fact_key):
        if isinstance(f, Literal) and not f.negative and negate(f) in holding:
            out.append(frame.symbols.fact_text(f))
    return out


def _check_defects(frame: JustificationFrame, facts: Iterable[Fact]) -> None:
    bad = _defects(frame, facts)
    if bad:
        raise DefectDetectedError(bad)


def three_valued(frame: JustificationFrame, decided: Iterable[Fact]) -> ThreeValued:
    """Read a three-valued model off a set of decided facts, over every
    atom of the frame's vocabulary."""
    holding = set(decided)
    out: ThreeValued = {}
    for atom in frame.positive_atoms():
        pos = Literal(atom)
        name = frame.symbols.name(atom)
        if pos in holding:
            out[name] = "true"
        elif negate(pos) in holding:
            out[name] = "false"
        else:
            out[name] = "unknown"
    return out


def wf_model(
    frame: JustificationFrame,
    opens_assignment: Optional[Mapping[Literal, bool]] = None,
) -> ThreeValued:
    decided = extended_lfp(
        frame, _BE.WELL_FOUNDED, opens_interpretation(frame, opens_assignment)
    )
    _check_defects(frame, decided)
    return three_valued(frame, decided)


def kk_model(
    frame: JustificationFrame,
    opens_assignment: Optional[Mapping[Literal, bool]] = None,
) -> ThreeValued:
    decided = extended_lfp(
        frame, _BE.KRIPKE_KLEENE, opens_interpretation(frame, opens_assignment)
    )
    _check_defects(frame, decided)
    return three_valued(frame, decided)


def _total_candidates(
    frame: JustificationFrame,
    opens_assignment: Optional[Mapping[Literal, bool]],
):
    """Total interpretations: one polarity per defined atom, answered
    opens fixed at their polarity, unanswered opens absent.  Ascending
    binary order over the defined atoms, so enumeration is stable."""
    fixed = opens_interpretation(frame, opens_assignment)
    defined_pos = sorted(
        {Literal(d.atom) for d in frame.defined}, key=fact_key
    )
    n = len(defined_pos)
    for bits in range(1 << n):
        candidate = set(fixed)
        for i, pos in enumerate(defined_pos):
            candidate.add(pos if bits >> i & 1 else negate(pos))
        yield frozenset(candidate)


def _propagate(
    frame: JustificationFrame,
    be: BranchEvaluation,
    fixed: frozenset[Fact],
) -> Optional[tuple[set[Fact], list[Literal]]]:
    """Split the defined atoms into forced facts and genuinely free ones.

    Support is monotone in the interpretation, so a polarity that is
    unsupported under the most generous interpretation (every remaining
    polarity present) cannot hold in any total model: its atom is forced
    the other way.  Returns None when some atom loses both polarities.
    """
    free = sorted({Literal(d.atom) for d in frame.defined}, key=fact_key)
    forced: set[Fact] = set()
    while True:
        upper = set(fixed) | forced
        for pos in free:
            upper.add(pos)
            upper.add(negate(pos))
        supported = support_set(frame, be, upper)
        still_free = []
        for pos in free:
            pos_ok = pos in supported
            neg_ok = negate(pos) in supported
            if pos_ok and neg_ok:
                still_free.append(pos)
            elif pos_ok:
                forced.add(pos)
            elif neg_ok:
                forced.add(negate(pos))
            else:
                return None
        if len(still_free) == len(free):
            return forced, still_free
        free = still_free


def _models(
    frame: JustificationFrame,
    be: BranchEvaluation,
    opens_assignment: Optional[Mapping[Literal, bool]],
) -> list[frozenset[Fact]]:
    fixed = opens_interpretation(frame, opens_assignment)
    narrowed = _propagate(frame, be, fixed)
    if narrowed is None:
        return []
    forced, free = narrowed
    models = []
    for bits in range(1 << len(free)):
        candidate = set(fixed) | forced
        for i, pos in enumerate(free):
            candidate.add(pos if bits >> i & 1 else negate(pos))
        supported = support_set(frame, be, candidate)
        if all(f in supported for f in candidate if f in frame.defined):
            _check_defects(frame, supported)
            models.append(frozenset(candidate))
    models.sort(key=lambda m: true_atom_names(frame, m))
    return models


def stable_models(
    frame: JustificationFrame,
    opens_assignment: Optional[Mapping[Literal, bool]] = None,
) -> list[frozenset[Fact]]:
    """Total interpretations whose defined facts are all stably supported."""
    return _models(frame, _BE.STABLE, opens_assignment)


def supported_models(
    frame: JustificationFrame,
    opens_assignment: Optional[Mapping[Literal, bool]] = None,
) -> list[frozenset[Fact]]:
    """Total interpretations whose defined facts all have a rule body
    inside them."""
    return _models(frame, _BE.COMPLETION, opens_assignment)


def true_atom_names(frame: JustificationFrame, model: Iterable[Fact]) -> tuple[str, ...]:
    """Positive atoms holding in a model, sorted by name."""
    return tuple(
        sorted(
            frame.symbols.name(f.atom)
            for f in model
            if isinstance(f, Literal) and not f.negative
        )
    )
