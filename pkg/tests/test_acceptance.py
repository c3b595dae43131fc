"""Acceptance runs: golden examples plus the big property sweeps.

Every test prints one [PASS]/[FAIL] line naming its criterion, then
asserts, so a full run shows the scorecard inline.
"""
import random
import time

import pytest

from jfy.branching import BranchEvaluation
from jfy.explain import (
    Answer,
    answerable_opens,
    explain,
    export_dot,
    new_session,
    session_step,
)
from jfy.facts import FALSE, TRUE, UNKNOWN, INCONSISTENT, Literal, negate
from jfy.frame import resolve_fact
from jfy.fuzz import fuzz_check, random_program
from jfy.justification import (
    Justification,
    branch_values,
    supports,
    supports_bruteforce,
)
from jfy.branching import value_of_finite, value_of_lasso
from jfy.program import Program, atom_text, to_frame
from jfy.semantics import stable_models, wf_model

from conftest import FULL_EDGES, frame_of, make_path_frame

BE = BranchEvaluation
ALL_BE = tuple(BE)


def verdict(name: str, ok: bool) -> bool:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}")
    return ok


@pytest.fixture(scope="module")
def fuzz_corpus():
    return fuzz_check(seed=2024, count=500, max_atoms=6, max_rules=12, max_body=3)


# ------------------------------------------------------------ golden examples

def test_path_reproduction():
    started = time.perf_counter()
    frame = make_path_frame()
    assignment = {resolve_fact(frame, n): v for n, v in FULL_EDGES.items()}
    I = {TRUE} | {f if v else negate(f) for f, v in assignment.items()}
    e = explain(frame, BE.WELL_FOUNDED, I, resolve_fact(frame, "path(a,c)"))

    nodes_ok = set(e.node_names()) == {
        "path(a,c)", "path(a,b)", "path(b,c)", "edge(a,b)", "edge(b,c)",
    }
    edges_ok = set(e.edge_names()) == {
        ("path(a,c)", "path(a,b)"),
        ("path(a,c)", "path(b,c)"),
        ("path(a,b)", "edge(a,b)"),
        ("path(b,c)", "edge(b,c)"),
    }

    def fresh_dot():
        frame2 = make_path_frame()
        I2 = {TRUE} | {
            resolve_fact(frame2, n) if v else negate(resolve_fact(frame2, n))
            for n, v in FULL_EDGES.items()
        }
        return export_dot(
            explain(frame2, BE.WELL_FOUNDED, I2, resolve_fact(frame2, "path(a,c)"))
        )

    dot_ok = fresh_dot() == fresh_dot() == export_dot(e)

    model = wf_model(frame, assignment)
    true_paths = {f"path({x},{y})" for x, y in (("a", "b"), ("b", "c"), ("a", "c"))}
    model_ok = all(
        model[f"path({x},{y})"] == ("true" if f"path({x},{y})" in true_paths else "false")
        for x in "abc"
        for y in "abc"
    )
    elapsed = time.perf_counter() - started
    ok = nodes_ok and edges_ok and dot_ok and model_ok and elapsed < 1.0
    assert verdict("path example: 5-node explanation and well-founded model", ok), (
        nodes_ok, edges_ok, dot_ok, model_ok, elapsed,
    )


def test_negative_loop_values_and_models():
    started = time.perf_counter()
    frame = frame_of("p :- not p.\n")
    p = frame.symbols.literal("p")
    j = Justification(
        {
            p: frame.rules_for(p)[0],
            negate(p): frame.rules_for(negate(p))[0],
        }
    )
    values_ok = (
        branch_values(frame, j, BE.WELL_FOUNDED, p) == {UNKNOWN}
        and branch_values(frame, j, BE.STABLE, p) == {negate(p)}
    )
    model_ok = wf_model(frame) == {"p": "unknown"} and stable_models(frame) == []
    elapsed = time.perf_counter() - started
    ok = values_ok and model_ok and elapsed < 1.0
    assert verdict("self-negating atom: branch values, no stable model", ok), (
        values_ok, model_ok, elapsed,
    )


# ------------------------------------------------------------ fuzz corpus

def test_oracle_equivalence(fuzz_corpus):
    disagreements = [e for e in fuzz_corpus.entries if not e["agree"]]
    ok = len(fuzz_corpus.entries) == 2000 and not disagreements
    assert verdict(
        "engine matches the four classical oracles on 500 random programs", ok
    ), disagreements[:3]


def test_non_defectiveness(fuzz_corpus):
    defective = [e for e in fuzz_corpus.entries if e["defects"]]
    ok = fuzz_corpus.defect_count() == 0 and not defective
    assert verdict(
        "no fact is ever supported together with its negation", ok
    ), defective[:3]


# ------------------------------------------------------------ checker sweep

def _random_interpretation(rng, frame):
    I = set()
    for f in frame.literal_facts():
        if rng.random() < 0.5:
            I.add(f)
    if rng.random() < 0.8:
        I.add(TRUE)
    if rng.random() < 0.25:
        I.add(UNKNOWN)
    if rng.random() < 0.1:
        I.add(FALSE)
    if rng.random() < 0.05:
        I.add(INCONSISTENT)
    return I


def test_checker_equivalence():
    rng = random.Random(424242)
    checked = 0
    mismatches = []
    while checked < 1000:
        frame = to_frame(
            random_program(
                rng,
                max_atoms=rng.randint(2, 4),
                max_rules=rng.randint(3, 6),
                max_body=2,
            )
        )
        if not frame.defined:
            continue
        I = _random_interpretation(rng, frame)
        x = rng.choice(frame.defined_sorted())
        be = rng.choice(ALL_BE)
        brute, _ = supports_bruteforce(frame, be, I, x)
        if supports(frame, be, I, x) != brute:
            mismatches.append((frame.describe(), sorted(map(str, I)), x, be))
        checked += 1
    ok = checked >= 1000 and not mismatches
    assert verdict(
        "fixpoint support checker agrees with brute force on 1000 instances", ok
    ), mismatches[:3]


# ------------------------------------------------------------ branch values

def _enumerate_paths(frame, justification, start, budget):
    """All maximal paths, cut at the first revisit; None past the budget."""
    finished = []
    stack = [(start,)]
    steps = 0
    while stack:
        path = stack.pop()
        steps += 1
        if steps > budget:
            return None
        node = path[-1]
        if not (isinstance(node, Literal) and node in frame.defined):
            finished.append(("finite", path, 0))
            continue
        earlier = path[:-1]
        if node in earlier:
            finished.append(("lasso", earlier, earlier.index(node)))
            continue
        for member in justification.choice[node].sorted_body():
            stack.append(path + (member,))
    return finished


def _path_values(be, paths):
    values = set()
    for kind, nodes, loop_start in paths:
        if kind == "finite":
            values.add(value_of_finite(be, nodes))
        else:
            values.add(value_of_lasso(be, nodes, loop_start))
    return values


def test_branch_value_soundness():
    rng = random.Random(777)
    validated = 0
    mismatches = []
    while validated < 500:
        frame = to_frame(random_program(rng, max_atoms=4, max_rules=6, max_body=2))
        if not frame.defined:
            continue
        justification = Justification(
            {head: rng.choice(frame.rules_for(head)) for head in frame.defined_sorted()}
        )
        complete = True
        for start in frame.defined_sorted():
            paths = _enumerate_paths(frame, justification, start, 200_000)
            if paths is None:
                complete = False
                break
            for be in ALL_BE:
                expected = _path_values(be, paths)
                got = branch_values(frame, justification, be, start)
                if got != expected:
                    mismatches.append((frame.describe(), start, be, expected, got))
        if complete:
            validated += 1
    ok = validated >= 500 and not mismatches
    assert verdict(
        "branch values equal exhaustive path enumeration on 500 justifications", ok
    ), mismatches[:3]


# ------------------------------------------------------------ sessions

def _open_frame(rng, max_opens):
    """Random ground frame with 1..max_opens answerable opens."""
    for _ in range(200):
        program = random_program(rng, max_atoms=5, max_rules=8, max_body=2)
        names = sorted({atom_text(r.head) for r in program.rules})
        if not names:
            continue
        opened = frozenset(n for n in names if rng.random() < 0.4)
        if not opened:
            continue
        kept = tuple(r for r in program.rules if atom_text(r.head) not in opened)
        frame = to_frame(Program(kept, frozenset((n, 0) for n in opened)))
        k = len(answerable_opens(frame))
        if frame.defined and 1 <= k <= max_opens:
            return frame
    raise AssertionError("could not generate an open frame")


def _drive_session(rng, frame, be, ok_so_far):
    queries = [rng.choice(frame.defined_sorted()) for _ in range(rng.randint(1, 2))]
    state = new_session(frame, be, queries)
    ok = ok_so_far
    for _ in range(len(answerable_opens(frame)) + 4):
        statuses = {v.fact: v.status for v in state.views}
        relevant_by_query = {v.fact: set(v.relevant) for v in state.views}
        open_views = [v for v in state.views if v.status == "open"]
        unanswered = [
            o for o in answerable_opens(frame) if o not in state.answered_map()
        ]
        everywhere_irrelevant = [
            o
            for o in unanswered
            if all(o not in relevant_by_query[v.fact] for v in state.views)
        ]
        if everywhere_irrelevant and rng.random() < 0.6:
            probe = rng.choice(everywhere_irrelevant)
            state = session_step(state, Answer(probe, rng.random() < 0.5))
            # an irrelevant answer must leave every verdict alone
            ok = ok and all(v.status == statuses[v.fact] for v in state.views)
            continue
        if not open_views:
            break
        target = open_views[0]
        if not target.relevant:
            return False  # open with nothing left to ask: property broken
        pick = rng.choice(target.relevant)
        state = session_step(state, Answer(pick, rng.random() < 0.5))
    return ok and all(v.status != "open" for v in state.views)


def test_relevance_property():
    rng = random.Random(31337)
    ok = True
    for i in range(200):
        if i % 4 == 3:
            be = rng.choice((BE.STABLE, BE.COMPLETION))
            frame = _open_frame(rng, max_opens=5)
        else:
            be = rng.choice((BE.WELL_FOUNDED, BE.KRIPKE_KLEENE))
            frame = _open_frame(rng, max_opens=10 if i % 10 == 0 else 7)
        ok = _drive_session(rng, frame, be, ok)
        if not ok:
            break
    assert verdict(
        "sessions: irrelevant answers never move verdicts; answering all "
        "relevant opens decides every query",
        ok,
    )
