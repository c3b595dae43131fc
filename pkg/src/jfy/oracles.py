"""Classical oracles over ground programs, for differential checking.

These work on :class:`~jfy.program.Program` values directly — no
frames, no justifications — so they share nothing with the engine's
computation path:

* stable models by Gelfond-Lifschitz reduct over all candidates,
* the well-founded model by the alternating fixpoint,
* the Kripke-Kleene model by iterating the three-valued one-step
  operator from everywhere-unknown,
* supported models as fixpoints of the two-valued one-step operator.

Atoms are canonical ground-atom strings; three-valued results map atom
to "true"/"false"/"unknown"; two-valued model sets hold the true atoms.
"""
from __future__ import annotations

from itertools import combinations

from .program import BodyLit, Program, ProgramRule, atom_text


def atoms_of(program: Program) -> tuple[str, ...]:
    names: set[str] = set()
    for rule in program.rules:
        names.add(atom_text(rule.head))
        for lit in rule.body:
            if not isinstance(lit.item, bool):
                names.add(atom_text(lit.item))
    return tuple(sorted(names))


def _body_holds(body: tuple[BodyLit, ...], true_atoms: frozenset[str]) -> bool:
    for lit in body:
        if isinstance(lit.item, bool):
            value = lit.item
        else:
            value = atom_text(lit.item) in true_atoms
        if lit.negated:
            value = not value
        if not value:
            return False
    return True


def _least_model_of_reduct(program: Program, context: frozenset[str]) -> frozenset[str]:
    """Least model of the program reduced by ``context``: rules whose
    negative (and keyword) literals fail against it are dropped, the
    rest keep only their positive atoms."""
    kept: list[tuple[str, list[str]]] = []
    for rule in program.rules:
        positives: list[str] = []
        dead = False
        for lit in rule.body:
            if isinstance(lit.item, bool):
                if not (lit.item ^ lit.negated):
                    dead = True
                    break
            elif lit.negated:
                if atom_text(lit.item) in context:
                    dead = True
                    break
            else:
                positives.append(atom_text(lit.item))
        if not dead:
            kept.append((atom_text(rule.head), positives))
    derived: set[str] = set()
    changed = True
    while changed:
        changed = False
        for head, positives in kept:
            if head not in derived and all(p in derived for p in positives):
                derived.add(head)
                changed = True
    return frozenset(derived)


def _subsets(atoms: tuple[str, ...]):
    for r in range(len(atoms) + 1):
        for combo in combinations(atoms, r):
            yield frozenset(combo)


def gl_stable_models(program: Program) -> list[tuple[str, ...]]:
    """Stable models by reduct check over every candidate set."""
    atoms = atoms_of(program)
    models = []
    for candidate in _subsets(atoms):
        if _least_model_of_reduct(program, candidate) == candidate:
            models.append(tuple(sorted(candidate)))
    models.sort()
    return models


def alternating_wf_model(program: Program) -> dict[str, str]:
    """Well-founded model via the alternating fixpoint: iterate the
    squared reduct operator from below; what the single application
    cannot reach is false."""
    atoms = atoms_of(program)
    true_side: frozenset[str] = frozenset()
    while True:
        possible = _least_model_of_reduct(program, true_side)
        nxt = _least_model_of_reduct(program, possible)
        if nxt == true_side:
            break
        true_side = nxt
    possible = _least_model_of_reduct(program, true_side)
    out = {}
    for a in atoms:
        if a in true_side:
            out[a] = "true"
        elif a not in possible:
            out[a] = "false"
        else:
            out[a] = "unknown"
    return out


def _three_valued_body(
    body: tuple[BodyLit, ...], true_set: set[str], false_set: set[str]
) -> str:
    """Kleene conjunction of the body literals: "t", "f" or "u"."""
    value = "t"
    for lit in body:
        if isinstance(lit.item, bool):
            v = "t" if lit.item else "f"
        else:
            name = atom_text(lit.item)
            v = "t" if name in true_set else "f" if name in false_set else "u"
        if lit.negated:
            v = {"t": "f", "f": "t", "u": "u"}[v]
        if v == "f":
            return "f"
        if v == "u":
            value = "u"
    return value


def fitting_kk_model(program: Program) -> dict[str, str]:
    """Kripke-Kleene model: iterate the three-valued one-step operator
    from everywhere-unknown until it stops moving."""
    atoms = atoms_of(program)
    rules_for: dict[str, list[ProgramRule]] = {a: [] for a in atoms}
    for rule in program.rules:
        rules_for[atom_text(rule.head)].append(rule)
    true_set: set[str] = set()
    false_set: set[str] = set()
    while True:
        next_true: set[str] = set()
        next_false: set[str] = set()
        for a in atoms:
            values = [
                _three_valued_body(r.body, true_set, false_set) for r in rules_for[a]
            ]
            if any(v == "t" for v in values):
                next_true.add(a)
            elif all(v == "f" for v in values):  # vacuously false without rules
                next_false.add(a)
        if next_true == true_set and next_false == false_set:
            break
        true_set, false_set = next_true, next_false
    return {
        a: "true" if a in true_set else "false" if a in false_set else "unknown"
        for a in atoms
    }


def tp_supported_models(program: Program) -> list[tuple[str, ...]]:
    """Fixpoints of the two-valued one-step operator."""
    atoms = atoms_of(program)
    models = []
    for candidate in _subsets(atoms):
        step = frozenset(
            atom_text(rule.head)
            for rule in program.rules
            if _body_holds(rule.body, candidate)
        )
        if step == candidate:
            models.append(tuple(sorted(candidate)))
    models.sort()
    return models


def oracle_models(program: Program, semantics: str):
    """Dispatch by CLI semantics name; shapes match the engine adapters."""
    if semantics == "stable":
        return gl_stable_models(program)
    if semantics == "wf":
        return alternating_wf_model(program)
    if semantics == "kk":
        return fitting_kk_model(program)
    if semantics == "sp":
        return tp_supported_models(program)
    raise ValueError(f"unknown semantics {semantics!r}")
