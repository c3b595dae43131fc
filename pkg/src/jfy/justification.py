"""Justifications: chosen rules, their branches, and support.

A justification picks at most one rule per defined fact and is viewed
as a graph: an edge from each mapped fact to every body element of its
chosen rule.  It is *locally complete* for a start fact when every
defined fact reachable from the start has a chosen rule.

``branch_values`` never enumerates branches; it reads the values off
the reachable graph with strongly-connected-component and sign
analysis.  ``enumerate_branch_prefixes`` exists for diagnostics and for
validating that analysis against concrete paths.

A fact x is *supported* in interpretation I when some locally complete
justification maps every branch from x into I.  ``supports_bruteforce``
searches justifications directly and yields a witness;
``supports`` decides the same question by fixpoint computation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .branching import BranchEvaluation
from .errors import (
    NotDefinedError,
    NotLocallyCompleteError,
    SearchSpaceTooLargeError,
    StartUnmappedError,
)
from .facts import FALSE, TRUE, UNKNOWN, Fact, Literal, fact_key
from .frame import JustificationFrame, Rule

_BE = BranchEvaluation


@dataclass(eq=True)
class Justification:
    """At most one rule per defined fact.  Treated as immutable."""

    choice: dict[Literal, Rule]

    def mapped(self) -> tuple[Literal, ...]:
        return tuple(sorted(self.choice, key=fact_key))


@dataclass(frozen=True)
class BranchPrefix:
    """A maximal directed path from the start: either it reached a sink
    (a genuine finite branch) or it was cut at the length limit."""

    nodes: tuple[Fact, ...]
    ends_in_sink: bool


# ------------------------------------------------------------ graph helpers

def strongly_connected(
    nodes: Iterable[Fact], successors: Mapping[Fact, tuple[Fact, ...]]
) -> list[tuple[Fact, ...]]:
    """Tarjan's algorithm, iterative; deterministic component order."""
    index: dict[Fact, int] = {}
    low: dict[Fact, int] = {}
    on_stack: set[Fact] = set()
    stack: list[Fact] = []
    components: list[tuple[Fact, ...]] = []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        work: list[tuple[Fact, int]] = [(root, 0)]
        while work:
            node, next_child = work[-1]
            if next_child == 0:
                index[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack.add(node)
            descended = False
            succ = successors.get(node, ())
            for i in range(next_child, len(succ)):
                s = succ[i]
                if s not in index:
                    work[-1] = (node, i + 1)
                    work.append((s, 0))
                    descended = True
                    break
                if s in on_stack:
                    low[node] = min(low[node], index[s])
            if descended:
                continue
            if low[node] == index[node]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.append(w)
                    if w == node:
                        break
                components.append(tuple(component))
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
    return components


def _has_cycle(
    nodes: Iterable[Fact], successors: Mapping[Fact, tuple[Fact, ...]]
) -> bool:
    node_list = list(nodes)
    for comp in strongly_connected(node_list, successors):
        if len(comp) > 1:
            return True
        n = comp[0]
        if n in successors.get(n, ()):
            return True
    return False


@dataclass
class _Reach:
    nodes: tuple[Fact, ...]
    successors: dict[Fact, tuple[Fact, ...]]
    sinks: tuple[Fact, ...]
    holes: tuple[Literal, ...]


def _reach(
    frame: JustificationFrame, justification: Justification, start: Fact
) -> _Reach:
    if start not in frame.defined or start not in justification.choice:
        raise StartUnmappedError(
            f"{frame.symbols.fact_text(start)} has no chosen rule"
        )
    seen: set[Fact] = set()
    successors: dict[Fact, tuple[Fact, ...]] = {}
    sinks: list[Fact] = []
    holes: list[Literal] = []
    frontier = [start]
    seen.add(start)
    while frontier:
        node = frontier.pop()
        if node not in frame.defined:
            sinks.append(node)
            continue
        rule = justification.choice.get(node)
        if rule is None:
            holes.append(node)  # reachable defined fact without a rule
            continue
        succ = tuple(sorted(rule.body, key=fact_key))
        successors[node] = succ
        for s in succ:
            if s not in seen:
                seen.add(s)
                frontier.append(s)
    return _Reach(
        tuple(sorted(seen, key=fact_key)),
        successors,
        tuple(sorted(sinks, key=fact_key)),
        tuple(sorted(holes, key=fact_key)),
    )


def is_locally_complete(
    frame: JustificationFrame, justification: Justification, start: Fact
) -> bool:
    """Whether every defined fact reachable from ``start`` has a rule.

    Raises ``StartUnmappedError`` when the start itself has none.
    """
    return not _reach(frame, justification, start).holes


# ------------------------------------------------------------ branch values

def branch_values(
    frame: JustificationFrame,
    justification: Justification,
    be: BranchEvaluation,
    start: Fact,
) -> frozenset[Fact]:
    """The set of values taken by the branches leaving ``start``.

    Computed symbolically from the reachable graph: sinks cover finite
    branches, cycle and sign structure covers infinite ones.  Requires
    local completeness.
    """
    graph = _reach(frame, justification, start)
    if graph.holes:
        names = ", ".join(frame.symbols.fact_text(h) for h in graph.holes)
        raise NotLocallyCompleteError(f"unmapped defined facts reachable: {names}")

    if be is _BE.COMPLETION:
        # every branch's second element is a body member of the start's rule
        return frozenset(justification.choice[start].body)

    if be is _BE.STABLE:
        return _stable_values(frame, justification, start)

    values: set[Fact] = set(graph.sinks)
    defined_nodes = [n for n in graph.nodes if n in frame.defined]
    d_succ = {
        n: tuple(s for s in graph.successors[n] if s in frame.defined)
        for n in defined_nodes
    }
    if be is _BE.KRIPKE_KLEENE:
        if _has_cycle(defined_nodes, d_succ):
            values.add(UNKNOWN)
        return frozenset(values)

    # well-founded: sign-pure cycles give f/t, mixed components give u
    for negative, loop_value in ((False, FALSE), (True, TRUE)):
        side = [n for n in defined_nodes if n.negative == negative]
        side_succ = {
            n: tuple(s for s in d_succ[n] if s.negative == negative) for n in side
        }
        if _has_cycle(side, side_succ):
            values.add(loop_value)
    for comp in strongly_connected(defined_nodes, d_succ):
        nontrivial = len(comp) > 1 or comp[0] in d_succ.get(comp[0], ())
        if nontrivial and len({n.negative for n in comp}) == 2:
            values.add(UNKNOWN)
            break
    return frozenset(values)


def _stable_values(
    frame: JustificationFrame, justification: Justification, start: Fact
) -> frozenset[Fact]:
    # walk the same-sign defined region; anything else met is a value
    assert isinstance(start, Literal)
    polarity = start.negative
    values: set[Fact] = set()
    region: set[Literal] = {start}
    frontier = [start]
    succ_in_region: dict[Fact, tuple[Fact, ...]] = {}
    while frontier:
        node = frontier.pop()
        body = justification.choice[node].body
        inside = []
        for s in sorted(body, key=fact_key):
            if isinstance(s, Literal) and s in frame.defined and s.negative == polarity:
                inside.append(s)
                if s not in region:
                    region.add(s)
                    frontier.append(s)
            else:
                values.add(s)  # sign switch or branch end: the branch's value
        succ_in_region[node] = tuple(inside)
    if _has_cycle(region, succ_in_region):
        values.add(FALSE if not polarity else TRUE)
    return frozenset(values)


# ------------------------------------------------------- prefix enumeration

def enumerate_branch_prefixes(
    frame: JustificationFrame,
    justification: Justification,
    start: Fact,
    max_len: int,
) -> tuple[BranchPrefix, ...]:
    """All maximal directed paths from ``start``, cut at ``max_len``
    nodes; depth-first, successors in fact order.  Requires local
    completeness, like ``branch_values``."""
    graph = _reach(frame, justification, start)
    if graph.holes:
        names = ", ".join(frame.symbols.fact_text(h) for h in graph.holes)
        raise NotLocallyCompleteError(f"unmapped defined facts reachable: {names}")
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    out: list[BranchPrefix] = []
    stack: list[tuple[Fact, ...]] = [(start,)]
    while stack:
        path = stack.pop()
        node = path[-1]
        if node not in frame.defined:
            out.append(BranchPrefix(path, True))
            continue
        if len(path) == max_len:
            out.append(BranchPrefix(path, False))
            continue
        succ = sorted(justification.choice[node].body, key=fact_key)
        for s in reversed(succ):
            stack.append(path + (s,))
    return tuple(out)


# ------------------------------------------------------- brute-force search

def supports_bruteforce(
    frame: JustificationFrame,
    be: BranchEvaluation,
    interpretation: Iterable[Fact],
    x: Fact,
    *,
    max_steps: int = 1_000_000,
) -> tuple[bool, Optional[Justification]]:
    """Search justifications directly for one that supports ``x`` in the
    interpretation; returns the first witness in deterministic order
    (facts by id, rules by declaration).

    The search prunes on constraints that persist under any extension
    of a partial choice, so pruning never costs a witness.  Raises
    ``SearchSpaceTooLargeError`` past ``max_steps`` rule assignments.
    """
    if x not in frame.defined:
        raise NotDefinedError(f"{frame.symbols.fact_text(x)} is not defined")
    I = frozenset(interpretation)
    choice: dict[Literal, Rule] = {}
    steps = 0

    def next_pending() -> Optional[Literal]:
        seen: set[Fact] = {x}
        frontier: list[Fact] = [x]
        pending: list[Literal] = []
        while frontier:
            node = frontier.pop()
            if node not in frame.defined:
                continue
            rule = choice.get(node)
            if rule is None:
                pending.append(node)
                continue
            for s in rule.body:
                if s not in seen:
                    seen.add(s)
                    frontier.append(s)
        return min(pending, key=fact_key) if pending else None

    def viable() -> bool:
        # check only constraints every extension inherits
        if be is _BE.COMPLETION:
            rule = choice.get(x)
            return rule is None or rule.body <= I
        if be is _BE.STABLE:
            assert isinstance(x, Literal)
            polarity = x.negative
            region: set[Literal] = {x}
            frontier = [x]
            region_succ: dict[Fact, tuple[Fact, ...]] = {}
            while frontier:
                node = frontier.pop()
                rule = choice.get(node)
                if rule is None:
                    continue
                inside = []
                for s in rule.body:
                    if (
                        isinstance(s, Literal)
                        and s in frame.defined
                        and s.negative == polarity
                    ):
                        inside.append(s)
                        if s not in region:
                            region.add(s)
                            frontier.append(s)
                    elif s not in I:
                        return False
                region_succ[node] = tuple(inside)
            if _has_cycle(region, region_succ):
                if (FALSE if not polarity else TRUE) not in I:
                    return False
            return True
        # well-founded / Kripke-Kleene
        seen: set[Fact] = {x}
        frontier = [x]
        defined_nodes: list[Literal] = []
        d_succ: dict[Fact, tuple[Fact, ...]] = {}
        while frontier:
            node = frontier.pop()
            if node not in frame.defined:
                if node not in I:
                    return False  # a sink outside I stays reachable forever
                continue
            defined_nodes.append(node)
            rule = choice.get(node)
            if rule is None:
                continue
            d_succ[node] = tuple(s for s in rule.body if s in frame.defined)
            for s in rule.body:
                if s not in seen:
                    seen.add(s)
                    frontier.append(s)
        if be is _BE.KRIPKE_KLEENE:
            return UNKNOWN in I or not _has_cycle(defined_nodes, d_succ)
        for negative, loop_value in ((False, FALSE), (True, TRUE)):
            if loop_value in I:
                continue
            side = [n for n in defined_nodes if n.negative == negative]
            side_succ = {
                n: tuple(s for s in d_succ.get(n, ()) if isinstance(s, Literal) and s.negative == negative)
                for n in side
            }
            if _has_cycle(side, side_succ):
                return False
        if UNKNOWN not in I:
            for comp in strongly_connected(defined_nodes, d_succ):
                nontrivial = len(comp) > 1 or comp[0] in d_succ.get(comp[0], ())
                if nontrivial and len({n.negative for n in comp}) == 2:
                    return False
        return True

    def search() -> Optional[Justification]:
        nonlocal steps
        fact = next_pending()
        if fact is None:
            candidate = Justification(dict(choice))
            if branch_values(frame, candidate, be, x) <= I:
                return candidate
            return None
        for rule in frame.rules_for(fact):
            steps += 1
            if steps > max_steps:
                raise SearchSpaceTooLargeError(
                    f"gave up after {max_steps} rule assignments"
                )
            choice[fact] = rule
            if viable():
                found = search()
                if found is not None:
                    return found
            del choice[fact]
        return None

    witness = search()
    return witness is not None, witness


# ------------------------------------------------------------ fixpoint path

def support_set(
    frame: JustificationFrame,
    be: BranchEvaluation,
    interpretation: Iterable[Fact],
) -> frozenset[Literal]:
    """Every defined fact supported in the interpretation.

    Computed by per-sign fixpoints rather than justification search:
    a least fixpoint where loops of a sign are inadmissible (their loop
    value is outside I), a greatest fixpoint where they are admissible.
    """
    I = frozenset(interpretation)
    if be is _BE.COMPLETION:
        return frozenset(
            h for h in frame.defined if any(r.body <= I for r in frame.rules_for(h))
        )
    if be is _BE.STABLE:
        out: set[Literal] = set()
        for negative, loop_value in ((False, FALSE), (True, TRUE)):
            out |= _sign_fixpoint(frame, I, negative, loop_value in I, cross=None)
        return frozenset(out)
    if be is _BE.KRIPKE_KLEENE:
        return _kk_fixpoint(frame, I)
    return _wf_fixpoint(frame, I)


def supports(
    frame: JustificationFrame,
    be: BranchEvaluation,
    interpretation: Iterable[Fact],
    x: Fact,
) -> bool:
    """Whether some locally complete justification maps every branch
    from ``x`` into the interpretation."""
    if x not in frame.defined:
        raise NotDefinedError(f"{frame.symbols.fact_text(x)} is not defined")
    return x in support_set(frame, be, interpretation)


def _sign_fixpoint(
    frame: JustificationFrame,
    I: frozenset[Fact],
    negative: bool,
    loops_allowed: bool,
    cross: Optional[set[Literal]],
) -> set[Literal]:
    """Fixpoint over the defined facts of one polarity.

    A body member of the same polarity is tested against the evolving
    set; every other member is tested against ``cross`` when it is a
    defined fact and a cross-set is given, and against I otherwise.
    Greatest fixpoint when same-sign loops are admissible, least when
    they are not.
    """
    members = [d for d in frame.defined_sorted() if d.negative == negative]

    def rule_ok(rule: Rule, current: set[Literal]) -> bool:
        for s in rule.body:
            if isinstance(s, Literal) and s in frame.defined:
                if s.negative == negative:
                    if s not in current:
                        return False
                elif cross is not None:
                    if s not in cross:
                        return False
                elif s not in I:
                    return False
            elif s not in I:
                return False
        return True

    if loops_allowed:
        current: set[Literal] = set(members)
        changed = True
        while changed:
            changed = False
            for y in members:
                if y in current and not any(
                    rule_ok(r, current) for r in frame.rules_for(y)
                ):
                    current.discard(y)
                    changed = True
        return current
    current = set()
    changed = True
    while changed:
        changed = False
        for y in members:
            if y not in current and any(
                rule_ok(r, current) for r in frame.rules_for(y)
            ):
                current.add(y)
                changed = True
    return current


def _kk_fixpoint(frame: JustificationFrame, I: frozenset[Fact]) -> frozenset[Literal]:
    members = frame.defined_sorted()
    loops_allowed = UNKNOWN in I

    def rule_ok(rule: Rule, current: set[Literal]) -> bool:
        return all(
            (s in current) if s in frame.defined else (s in I) for s in rule.body
        )

    if loops_allowed:
        current = set(members)
        changed = True
        while changed:
            changed = False
            for y in members:
                if y in current and not any(
                    rule_ok(r, current) for r in frame.rules_for(y)
                ):
                    current.discard(y)
                    changed = True
        return frozenset(current)
    current = set()
    changed = True
    while changed:
        changed = False
        for y in members:
            if y not in current and any(rule_ok(r, current) for r in frame.rules_for(y)):
                current.add(y)
                changed = True
    return frozenset(current)


def _wf_fixpoint(frame: JustificationFrame, I: frozenset[Fact]) -> frozenset[Literal]:
    # Mixed loops evaluate to u: admissible iff u is in I.  When they
    # are, cross-sign recursion may lean on any candidate still alive
    # (greatest fixpoint over both signs together); when not, a branch
    # may only cross signs into facts already settled in an earlier
    # stage, so the combined set grows as a least fixpoint of stages.
    if UNKNOWN in I:
        combined: set[Literal] = set(frame.defined)
        while True:
            nxt = _sign_fixpoint(frame, I, False, FALSE in I, cross=combined) | (
                _sign_fixpoint(frame, I, True, TRUE in I, cross=combined)
            )
            if nxt == combined:
                return frozenset(combined)
            combined = nxt
    settled: set[Literal] = set()
    while True:
        nxt = settled | _sign_fixpoint(frame, I, False, FALSE in I, cross=settled) | (
            _sign_fixpoint(frame, I, True, TRUE in I, cross=settled)
        )
        if nxt == settled:
            return frozenset(settled)
        settled = nxt
