"""Command-line interface.

Exit codes: 0 on success, 1 on a semantic failure (unsupported fact,
differential mismatch, bad opens), 2 on usage or parse errors.
"""
from __future__ import annotations

import json
import sys
from typing import Optional

import click

from .branching import BranchEvaluation
from .errors import JfyError, ParseError
from .explain import answerable_opens, explain, export_dot, export_json
from .frame import resolve_fact, resolve_open_assignment
from .fuzz import fuzz_check
from .program import constants_of, ground, parse, parse_ground_atom, pretty, to_frame
from .reporting import report_jsonl, summary_lines, write_report
from .semantics import (
    extended_lfp,
    kk_model,
    opens_interpretation,
    stable_models,
    supported_models,
    true_atom_names,
    wf_model,
)

_SEMANTICS = click.Choice([be.value for be in BranchEvaluation])


def _fail_parse(exc: ParseError) -> None:
    for line, col, msg in exc.errors:
        click.echo(f"error: {line}:{col}: {msg}", err=True)
    sys.exit(2)


def _fail(exc: JfyError) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(1)


def _load_program(source: str):
    with open(source, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        return parse(text)
    except ParseError as exc:
        _fail_parse(exc)


def _load_opens(path: Optional[str]) -> dict:
    if path is None:
        return {}
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            click.echo(f"error: {path}: {exc}", err=True)
            sys.exit(2)
    if not isinstance(data, dict):
        click.echo(f"error: {path}: expected an object of fact -> bool", err=True)
        sys.exit(2)
    return data


def _unassigned(frame, assignment) -> list[str]:
    """Opens left out of the base interpretation in both polarities."""
    return [
        frame.symbols.fact_text(o)
        for o in answerable_opens(frame)
        if o not in assignment
    ]


def _build_frame(program, domain: Optional[str], opens_names) -> object:
    constants = set(constants_of(program))
    if domain:
        constants.update(c.strip() for c in domain.split(",") if c.strip())
    for name in opens_names:
        try:
            constants.update(parse_ground_atom(name).args)
        except ParseError as exc:
            _fail_parse(exc)
    try:
        return to_frame(ground(program, domain=sorted(constants)))
    except JfyError as exc:
        _fail(exc)


@click.group()
def main() -> None:
    """Logic-program semantics through justification graphs."""


@main.command("ground")
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.option("--domain", default=None, help="Comma-separated extra constants.")
def ground_cmd(source: str, domain: Optional[str]) -> None:
    """Print the ground instantiation of SOURCE."""
    program = _load_program(source)
    constants = set(constants_of(program))
    if domain:
        constants.update(c.strip() for c in domain.split(",") if c.strip())
    try:
        click.echo(pretty(ground(program, domain=sorted(constants))), nl=False)
    except JfyError as exc:
        _fail(exc)


@main.command("models")
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.option("--semantics", type=_SEMANTICS, required=True)
@click.option("--opens", "opens_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--domain", default=None, help="Comma-separated extra constants.")
def models_cmd(
    source: str, semantics: str, opens_path: Optional[str], fmt: str, domain: Optional[str]
) -> None:
    """Models of SOURCE under the chosen semantics."""
    program = _load_program(source)
    opens_names = _load_opens(opens_path)
    frame = _build_frame(program, domain, opens_names.keys())
    try:
        assignment = resolve_open_assignment(frame, opens_names)
        unassigned = _unassigned(frame, assignment)
        if semantics in ("wf", "kk"):
            model = wf_model(frame, assignment) if semantics == "wf" else kk_model(
                frame, assignment
            )
            if fmt == "json":
                payload = {
                    "atoms": model,
                    "semantics": semantics,
                    "unassigned_opens": unassigned,
                }
                click.echo(json.dumps(payload, indent=2, sort_keys=True))
            else:
                if unassigned:
                    click.echo(f"# unassigned opens: {', '.join(unassigned)}")
                for atom in sorted(model):
                    click.echo(f"{atom}: {model[atom]}")
        else:
            finder = stable_models if semantics == "stable" else supported_models
            models = finder(frame, assignment)
            names = [list(true_atom_names(frame, m)) for m in models]
            if fmt == "json":
                payload = {
                    "count": len(names),
                    "models": names,
                    "semantics": semantics,
                    "unassigned_opens": unassigned,
                }
                click.echo(json.dumps(payload, indent=2, sort_keys=True))
            else:
                if unassigned:
                    click.echo(f"# unassigned opens: {', '.join(unassigned)}")
                click.echo(f"{len(names)} model" + ("" if len(names) == 1 else "s"))
                for model in names:
                    click.echo("{" + ", ".join(model) + "}")
    except JfyError as exc:
        _fail(exc)


@main.command("explain")
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.option("--fact", "fact_name", required=True)
@click.option("--semantics", type=_SEMANTICS, default="wf", show_default=True)
@click.option("--opens", "opens_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["dot", "json"]), default="dot")
@click.option("--domain", default=None, help="Comma-separated extra constants.")
def explain_cmd(
    source: str,
    fact_name: str,
    semantics: str,
    opens_path: Optional[str],
    fmt: str,
    domain: Optional[str],
) -> None:
    """Explanation graph for --fact, or exit 1 if it is unsupported."""
    program = _load_program(source)
    opens_names = _load_opens(opens_path)
    frame = _build_frame(program, domain, opens_names.keys())
    be = BranchEvaluation.from_name(semantics)
    try:
        assignment = resolve_open_assignment(frame, opens_names)
        fact = resolve_fact(frame, fact_name)
        interpretation = extended_lfp(
            frame, be, opens_interpretation(frame, assignment)
        )
        explanation = explain(frame, be, interpretation, fact)
    except JfyError as exc:
        _fail(exc)
    unassigned = _unassigned(frame, assignment)
    if fmt == "dot":
        if unassigned:
            click.echo(f"// unassigned opens: {', '.join(unassigned)}")
        click.echo(export_dot(explanation), nl=False)
    else:
        if unassigned:
            click.echo(f"note: unassigned opens: {', '.join(unassigned)}", err=True)
        click.echo(export_json(explanation))


@main.command("check")
@click.option("--seed", default=0, show_default=True)
@click.option("--count", default=100, show_default=True)
@click.option("--max-atoms", default=4, show_default=True)
@click.option("--max-rules", default=8, show_default=True)
@click.option("--max-body", default=3, show_default=True)
@click.option(
    "--report",
    "report_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="Write JSONL here and render a PNG summary alongside.",
)
def check_cmd(
    seed: int, count: int, max_atoms: int, max_rules: int, max_body: int,
    report_path: Optional[str],
) -> None:
    """Differential check of the engine against the classical oracles."""
    report = fuzz_check(
        seed=seed,
        count=count,
        max_atoms=max_atoms,
        max_rules=max_rules,
        max_body=max_body,
    )
    if report_path:
        figure = write_report(report, report_path)
        click.echo(f"report: {report_path}")
        click.echo(f"figure: {figure}")
    else:
        click.echo(report_jsonl(report), nl=False)
    for line in summary_lines(report):
        click.echo(line, err=report_path is None)
    if not report.clean():
        sys.exit(1)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
@click.option(
    "--state-dir",
    type=click.Path(file_okay=False),
    default=None,
    help="Persist sessions here and restore them on demand.",
)
def serve_cmd(host: str, port: int, state_dir: Optional[str]) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(state_dir), host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
