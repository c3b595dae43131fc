"""Explanations, counterfactual relevance, and decision sessions.

An explanation is the reachable part of a witnessing justification: the
graph a user can follow to see *why* a fact is supported.  Relevance is
counterfactual: an unanswered open matters to a query exactly when
flipping its answer, in at least one completion of the others, changes
the query's decided status.

A session tracks answered opens and queries; every step returns a fresh
state whose views carry each query's status, its relevant opens while
undecided, and an explanation graph once the fact (or its negation) is
supported under the answers given so far.
"""
from __future__ import annotations

import json
import weakref
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

from .branching import BranchEvaluation
from .errors import (
    NotOpenError,
    NotSupportedError,
    TooManyOpensError,
    UnknownFactError,
)
from .facts import Fact, Literal, fact_key, negate
from .frame import JustificationFrame
from .justification import (
    Justification,
    branch_values,
    supports,
    supports_bruteforce,
)
from .semantics import (
    extended_lfp,
    opens_interpretation,
    stable_models,
    supported_models,
)

_BE = BranchEvaluation

#: refusal threshold for sweeping completions of unanswered opens
MAX_SWEEP_OPENS = 16


@dataclass(frozen=True)
class Explanation:
    root: Fact
    evaluation: BranchEvaluation
    witness: Justification
    nodes: tuple[Fact, ...]
    edges: tuple[tuple[Fact, Fact], ...]
    # Values assigned to the witness's branch classes, in fact order.
    values: tuple[Fact, ...]
    symbols_snapshot: tuple[str, ...]

    def _text(self, fact: Fact) -> str:
        if isinstance(fact, Literal):
            prefix = "~" if fact.negative else ""
            return prefix + self.symbols_snapshot[fact.atom]
        return repr(fact)

    def node_names(self) -> tuple[str, ...]:
        return tuple(self._text(n) for n in self.nodes)

    def edge_names(self) -> tuple[tuple[str, str], ...]:
        return tuple((self._text(a), self._text(b)) for a, b in self.edges)

    def root_name(self) -> str:
        return self._text(self.root)


def explain(
    frame: JustificationFrame,
    be: BranchEvaluation,
    interpretation: Iterable[Fact],
    x: Fact,
) -> Explanation:
    """The reachable graph of the first witnessing justification.

    Raises ``NotSupportedError`` when no justification maps every
    branch from ``x`` into the interpretation.
    """
    ok, witness = supports_bruteforce(frame, be, interpretation, x)
    if not ok or witness is None:
        raise NotSupportedError(
            f"{frame.symbols.fact_text(x)} is not supported here"
        )
    nodes: set[Fact] = {x}
    edges: set[tuple[Fact, Fact]] = set()
    frontier: list[Fact] = [x]
    while frontier:
        node = frontier.pop()
        rule = witness.choice.get(node) if isinstance(node, Literal) else None
        if node not in frame.defined or rule is None:
            continue
        for member in rule.body:
            edges.add((node, member))
            if member not in nodes:
                nodes.add(member)
                frontier.append(member)
    values = branch_values(frame, witness, be, x)
    return Explanation(
        root=x,
        evaluation=be,
        witness=witness,
        nodes=tuple(sorted(nodes, key=fact_key)),
        edges=tuple(sorted(edges, key=lambda e: (fact_key(e[0]), fact_key(e[1])))),
        values=tuple(sorted(values, key=fact_key)),
        symbols_snapshot=frame.symbols.names(),
    )


def export_dot(explanation: Explanation) -> str:
    """Graphviz digraph; byte-stable for a given explanation."""
    lines = ["digraph justification {"]
    root = explanation.root_name()
    lines.append(f'  "{root}" [penwidth=2];')
    for name in explanation.node_names():
        if name != root:
            lines.append(f'  "{name}";')
    for a, b in explanation.edge_names():
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(explanation: Explanation) -> str:
    """Key-sorted JSON with root, nodes, and edges; byte-stable."""
    return json.dumps(explanation_payload(explanation), sort_keys=True)


def explanation_payload(explanation: Explanation) -> dict:
    return {
        "edges": [list(e) for e in explanation.edge_names()],
        "nodes": list(explanation.node_names()),
        "root": explanation.root_name(),
    }


# --------------------------------------------------------------- relevance

_STATUS_CACHE: "weakref.WeakKeyDictionary[JustificationFrame, dict]" = (
    weakref.WeakKeyDictionary()
)


def _decided_facts(
    frame: JustificationFrame,
    be: BranchEvaluation,
    assignment: Mapping[Literal, bool],
):
    """Memoized semantic core per (frame, evaluation, assignment)."""
    cache = _STATUS_CACHE.setdefault(frame, {})
    key = (be, frozenset(assignment.items()))
    if key not in cache:
        if be in (_BE.WELL_FOUNDED, _BE.KRIPKE_KLEENE):
            cache[key] = extended_lfp(frame, be, opens_interpretation(frame, assignment))
        elif be is _BE.STABLE:
            cache[key] = stable_models(frame, assignment)
        else:
            cache[key] = supported_models(frame, assignment)
    return cache[key]


def status_under(
    frame: JustificationFrame,
    be: BranchEvaluation,
    assignment: Mapping[Literal, bool],
    query: Fact,
) -> str:
    """Three-valued status of a fact under one opens assignment.

    Well-founded and Kripke-Kleene read the least fixpoint; stable and
    supported semantics read the skeptical verdict across their models
    (no models at all reads "unknown")."""
    result = _decided_facts(frame, be, assignment)
    if be in (_BE.WELL_FOUNDED, _BE.KRIPKE_KLEENE):
        if query in result:
            return "true"
        if negate(query) in result:
            return "false"
        return "unknown"
    if not result:
        return "unknown"
    if all(query in m for m in result):
        return "true"
    negated = negate(query)
    if all(negated in m for m in result):
        return "false"
    return "unknown"


def answerable_opens(frame: JustificationFrame) -> tuple[Literal, ...]:
    """The positive open facts, in fact order — what a user may answer."""
    return tuple(o for o in frame.opens_sorted() if not o.negative)


def _sweep(
    frame: JustificationFrame,
    be: BranchEvaluation,
    answered: Mapping[Literal, bool],
    query: Fact,
    max_opens: int,
) -> tuple[tuple[Literal, ...], dict[int, str]]:
    """Status of the query in every completion of the unanswered opens,
    keyed by the completion's bit pattern."""
    unanswered = tuple(o for o in answerable_opens(frame) if o not in answered)
    if len(unanswered) > max_opens:
        raise TooManyOpensError(
            f"{len(unanswered)} unanswered opens exceed the sweep limit of {max_opens}"
        )
    statuses: dict[int, str] = {}
    for bits in range(1 << len(unanswered)):
        full = dict(answered)
        for i, o in enumerate(unanswered):
            full[o] = bool(bits >> i & 1)
        statuses[bits] = status_under(frame, be, full, query)
    return unanswered, statuses


def decided(
    frame: JustificationFrame,
    be: BranchEvaluation,
    answered: Mapping[Literal, bool],
    query: Fact,
    max_opens: int = MAX_SWEEP_OPENS,
) -> str:
    """The status every completion of the unanswered opens agrees on,
    or "open" when completions disagree."""
    if be in (_BE.WELL_FOUNDED, _BE.KRIPKE_KLEENE):
        # the fixpoint grows with its base, so a partial-answer verdict
        # already binds every completion
        partial = status_under(frame, be, answered, query)
        if partial in ("true", "false"):
            return partial
    _, statuses = _sweep(frame, be, answered, query, max_opens)
    values = set(statuses.values())
    if len(values) == 1:
        return values.pop()
    return "open"


def relevant_opens(
    frame: JustificationFrame,
    be: BranchEvaluation,
    answered: Mapping[Literal, bool],
    query: Fact,
    max_opens: int = MAX_SWEEP_OPENS,
) -> tuple[Literal, ...]:
    """Unanswered opens whose answer can still change the verdict:
    flipping the open in some completion of the others changes the
    query's status."""
    unanswered, statuses = _sweep(frame, be, answered, query, max_opens)
    relevant = []
    for i, o in enumerate(unanswered):
        mask = 1 << i
        if any(
            statuses[bits] != statuses[bits ^ mask]
            for bits in statuses
            if not bits & mask
        ):
            relevant.append(o)
    return tuple(relevant)


# ----------------------------------------------------------------- sessions

@dataclass(frozen=True)
class Answer:
    fact: Literal
    value: bool


@dataclass(frozen=True)
class Retract:
    fact: Literal


@dataclass(frozen=True)
class AddQuery:
    fact: Fact


Action = Union[Answer, Retract, AddQuery]


@dataclass(frozen=True)
class QueryView:
    fact: Fact
    status: str
    relevant: tuple[Literal, ...]
    explanation: Optional[Explanation]


@dataclass(frozen=True)
class SessionState:
    frame: JustificationFrame
    evaluation: BranchEvaluation
    answered: tuple[tuple[Literal, bool], ...]
    queries: tuple[Fact, ...]
    views: tuple[QueryView, ...]

    def answered_map(self) -> dict[Literal, bool]:
        return dict(self.answered)


def _check_open(frame: JustificationFrame, fact: Fact) -> Literal:
    if not isinstance(fact, Literal) or fact.negative:
        raise NotOpenError("answers target positive open facts")
    if fact not in frame.opens:
        raise NotOpenError(
            f"{frame.symbols.fact_text(fact)} is not an open fact of this program"
        )
    return fact


def _build_views(
    frame: JustificationFrame,
    be: BranchEvaluation,
    answered: dict[Literal, bool],
    queries: tuple[Fact, ...],
) -> tuple[QueryView, ...]:
    views = []
    for q in queries:
        status = decided(frame, be, answered, q)
        relevant: tuple[Literal, ...] = ()
        if status == "open":
            relevant = relevant_opens(frame, be, answered, q)
        explanation = None
        # Witness against the extended lfp of the answers so far, with
        # unanswered opens pessimistically absent in both polarities.
        if be in (_BE.WELL_FOUNDED, _BE.KRIPKE_KLEENE):
            interpretation = _decided_facts(frame, be, dict(answered))
        else:
            interpretation = extended_lfp(
                frame, be, opens_interpretation(frame, answered)
            )
        for target in (q, negate(q)):
            if target in frame.defined and supports(frame, be, interpretation, target):
                explanation = explain(frame, be, interpretation, target)
                break
        views.append(QueryView(q, status, relevant, explanation))
    return tuple(views)


def new_session(
    frame: JustificationFrame,
    evaluation: BranchEvaluation = _BE.WELL_FOUNDED,
    queries: Iterable[Fact] = (),
    answered: Optional[Mapping[Literal, bool]] = None,
) -> SessionState:
    answered_map: dict[Literal, bool] = {}
    for fact, value in (answered or {}).items():
        answered_map[_check_open(frame, fact)] = bool(value)
    query_list: list[Fact] = []
    for q in queries:
        _check_query(frame, q)
        if q not in query_list:
            query_list.append(q)
    return _assemble(frame, evaluation, answered_map, tuple(query_list))


def _check_query(frame: JustificationFrame, fact: Fact) -> None:
    if not isinstance(fact, Literal):
        raise UnknownFactError("queries are atoms, not logical values")
    if fact not in frame.defined and fact not in frame.opens:
        raise UnknownFactError(
            f"{frame.symbols.fact_text(fact)} is not in this program's vocabulary"
        )


def _assemble(
    frame: JustificationFrame,
    be: BranchEvaluation,
    answered: dict[Literal, bool],
    queries: tuple[Fact, ...],
) -> SessionState:
    ordered = tuple(sorted(answered.items(), key=lambda kv: fact_key(kv[0])))
    views = _build_views(frame, be, answered, queries)
    return SessionState(frame, be, ordered, queries, views)


def session_step(state: SessionState, action: Action) -> SessionState:
    """Apply one action and recompute every view."""
    frame = state.frame
    answered = state.answered_map()
    queries = state.queries
    if isinstance(action, Answer):
        answered[_check_open(frame, action.fact)] = bool(action.value)
    elif isinstance(action, Retract):
        _check_open(frame, action.fact)
        answered.pop(action.fact, None)
    elif isinstance(action, AddQuery):
        _check_query(frame, action.fact)
        if action.fact not in queries:
            queries = queries + (action.fact,)
    else:
        raise TypeError(f"unknown session action {action!r}")
    return _assemble(frame, state.evaluation, answered, queries)
