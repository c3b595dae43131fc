"""Differential fuzzing: the engine against the classical oracles.

Random propositional programs go through both computation paths — the
justification engine on one side, reduct/operator oracles on the other
— under all four semantics.  Mismatches and defects are report content,
not exceptions; a clean run is the expected outcome.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import DefectDetectedError
from .oracles import oracle_models
from .program import BodyLit, PredAtom, Program, ProgramRule, pretty
from .semantics import (
    kk_model,
    stable_models,
    supported_models,
    true_atom_names,
    wf_model,
)

SEMANTICS = ("wf", "stable", "kk", "sp")

# complementing a head multiplies its body sizes; 8 rules of <= 3
# literals stay well under the dual-body cap
_MAX_RULES_PER_HEAD = 8


def random_program(
    rng: random.Random, max_atoms: int = 4, max_rules: int = 8, max_body: int = 3
) -> Program:
    """A random ground propositional program, no opens."""
    n_atoms = rng.randint(1, max_atoms)
    names = [f"p{i}" for i in range(1, n_atoms + 1)]
    n_rules = rng.randint(0, max_rules)
    rules: list[ProgramRule] = []
    per_head: dict[str, int] = {}
    for _ in range(n_rules):
        head = rng.choice(names)
        if per_head.get(head, 0) >= _MAX_RULES_PER_HEAD:
            continue
        per_head[head] = per_head.get(head, 0) + 1
        body: list[BodyLit] = []
        for _ in range(rng.randint(1, max_body)):
            roll = rng.random()
            negated = rng.random() < 0.5
            if roll < 0.06:
                body.append(BodyLit(True, negated))
            elif roll < 0.12:
                body.append(BodyLit(False, negated))
            else:
                body.append(BodyLit(PredAtom(rng.choice(names)), negated))
        rules.append(ProgramRule(PredAtom(head), tuple(body)))
    return Program(tuple(rules), frozenset())


def _engine_result(program: Program, semantics: str):
    from .program import to_frame

    frame = to_frame(program)
    if semantics == "stable":
        return [list(true_atom_names(frame, m)) for m in stable_models(frame)]
    if semantics == "sp":
        return [list(true_atom_names(frame, m)) for m in supported_models(frame)]
    if semantics == "wf":
        return wf_model(frame)
    return kk_model(frame)


def _oracle_result(program: Program, semantics: str):
    result = oracle_models(program, semantics)
    if semantics in ("stable", "sp"):
        return [list(m) for m in result]
    return result


@dataclass
class FuzzReport:
    """One entry per (program, semantics) pair, in generation order."""

    config: dict
    entries: list[dict] = field(default_factory=list)

    def agreements(self) -> dict[str, tuple[int, int]]:
        out: dict[str, list[int]] = {s: [0, 0] for s in SEMANTICS}
        for e in self.entries:
            pair = out[e["semantics"]]
            pair[1] += 1
            if e["agree"]:
                pair[0] += 1
        return {s: (a, t) for s, (a, t) in out.items()}

    def defect_count(self) -> int:
        return sum(1 for e in self.entries if e["defects"])

    def clean(self) -> bool:
        return self.defect_count() == 0 and all(e["agree"] for e in self.entries)


def fuzz_check(
    seed: int = 0,
    count: int = 100,
    max_atoms: int = 4,
    max_rules: int = 8,
    max_body: int = 3,
) -> FuzzReport:
    """Generate ``count`` programs from ``seed`` and compare both paths
    under every semantics.  Deterministic for a given configuration."""
    rng = random.Random(seed)
    report = FuzzReport(
        {
            "count": count,
            "max_atoms": max_atoms,
            "max_body": max_body,
            "max_rules": max_rules,
            "seed": seed,
        }
    )
    for _ in range(count):
        program = random_program(rng, max_atoms, max_rules, max_body)
        text = pretty(program)
        for semantics in SEMANTICS:
            defects: list[str] = []
            engine = None
            try:
                engine = _engine_result(program, semantics)
            except DefectDetectedError as exc:
                defects = list(exc.facts)
            oracle = _oracle_result(program, semantics)
            report.entries.append(
                {
                    "agree": engine == oracle,
                    "defects": defects,
                    "engine_result": engine,
                    "oracle_result": oracle,
                    "program": text,
                    "semantics": semantics,
                }
            )
    return report
