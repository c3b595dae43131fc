"""HTTP face of the engine: decision sessions plus stateless model checks.

Bodies are parsed by hand rather than through response-model machinery
so malformed input maps to the intended status codes: 400 for bad JSON
or bad facts, 404 for unknown sessions, 422 for source text that does
not parse (with 1-based positions).
"""
from __future__ import annotations

import json
import threading
import uuid
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .branching import BranchEvaluation
from .errors import JfyError, ParseError
from .explain import (
    AddQuery,
    Answer,
    Retract,
    SessionState,
    answerable_opens,
    explanation_payload,
    new_session,
)
from .frame import resolve_fact, resolve_open_assignment
from .program import constants_of, ground, parse, parse_ground_atom, to_frame
from .semantics import (
    kk_model,
    stable_models,
    supported_models,
    true_atom_names,
    wf_model,
)

_SEMANTICS = tuple(be.value for be in BranchEvaluation)


def _error(status: int, message: str, positions=None) -> JSONResponse:
    payload: dict = {"error": message}
    if positions is not None:
        payload["positions"] = positions
    return JSONResponse(payload, status_code=status)


def _parse_positions(exc: ParseError) -> list[dict]:
    return [
        {"column": col, "line": line, "message": msg} for line, col, msg in exc.errors
    ]


def _frame_of(program_text: str, domain: Optional[list[str]], opens_names=None):
    parsed = parse(program_text)
    constants = set(constants_of(parsed))
    if domain:
        constants.update(str(c) for c in domain)
    for name in opens_names or ():
        constants.update(parse_ground_atom(name).args)
    return to_frame(ground(parsed, domain=sorted(constants)))


def _view(session_id: str, record: dict) -> dict:
    state: SessionState = record["state"]
    frame = state.frame
    queries = []
    for view in state.views:
        queries.append(
            {
                "explanation": (
                    explanation_payload(view.explanation) if view.explanation else None
                ),
                "fact": frame.symbols.fact_text(view.fact),
                "relevant_opens": [
                    frame.symbols.fact_text(o) for o in view.relevant
                ],
                "status": view.status,
            }
        )
    return {
        "answered": {
            frame.symbols.fact_text(fact): value for fact, value in state.answered
        },
        "opens": [frame.symbols.fact_text(o) for o in answerable_opens(frame)],
        "queries": queries,
        "semantics": state.evaluation.value,
        "session_id": session_id,
    }


def create_app(state_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="jfy", docs_url=None, redoc_url=None)
    sessions: dict[str, dict] = {}
    store = Path(state_dir) if state_dir else None
    if store:
        store.mkdir(parents=True, exist_ok=True)
    registry_lock = threading.Lock()

    def _persist(session_id: str, record: dict) -> None:
        if not store:
            return
        state: SessionState = record["state"]
        frame = state.frame
        payload = {
            "answered": {
                frame.symbols.fact_text(fact): value
                for fact, value in state.answered
            },
            "domain": record["domain"],
            "program": record["program"],
            "queries": [frame.symbols.fact_text(q) for q in state.queries],
            "semantics": state.evaluation.value,
        }
        (store / f"{session_id}.json").write_text(
            json.dumps(payload, sort_keys=True, indent=2), encoding="utf-8"
        )

    def _restore(session_id: str) -> Optional[dict]:
        if not store:
            return None
        path = store / f"{session_id}.json"
        if not path.exists():
            return None
        payload = json.loads(path.read_text(encoding="utf-8"))
        record = _build_record(
            payload["program"],
            payload["semantics"],
            payload.get("domain"),
            payload.get("answered", {}),
            payload.get("queries", []),
        )
        with registry_lock:
            sessions[session_id] = record
        return record

    def _build_record(
        program_text: str,
        semantics: str,
        domain: Optional[list[str]],
        answered_names: dict,
        query_names: list,
    ) -> dict:
        frame = _frame_of(program_text, domain, answered_names.keys())
        evaluation = BranchEvaluation.from_name(semantics)
        answered = resolve_open_assignment(frame, answered_names)
        queries = [resolve_fact(frame, str(name)) for name in query_names]
        state = new_session(frame, evaluation, queries, answered)
        return {
            "domain": list(domain) if domain else None,
            "lock": threading.Lock(),
            "program": program_text,
            "state": state,
        }

    def _get_record(session_id: str) -> Optional[dict]:
        with registry_lock:
            record = sessions.get(session_id)
        if record is None:
            record = _restore(session_id)
        return record

    async def _body(request: Request) -> dict:
        content_type = request.headers.get("content-type", "")
        if content_type.split(";")[0].strip().lower() != "application/json":
            raise ValueError("content type must be application/json")
        try:
            data = json.loads(await request.body())
        except (json.JSONDecodeError, UnicodeDecodeError):
            raise ValueError("request body is not valid JSON")
        if not isinstance(data, dict):
            raise ValueError("request body must be a JSON object")
        return data

    @app.post("/sessions")
    async def create_session(request: Request):
        try:
            data = await _body(request)
        except ValueError as exc:
            return _error(400, str(exc))
        program_text = data.get("program")
        if not isinstance(program_text, str):
            return _error(400, "missing or non-string 'program'")
        semantics = data.get("semantics", "wf")
        if semantics not in _SEMANTICS:
            return _error(400, f"semantics must be one of {', '.join(_SEMANTICS)}")
        opens = data.get("opens", {})
        if not isinstance(opens, dict):
            return _error(400, "'opens' must be an object of fact -> bool")
        queries = data.get("queries", [])
        if not isinstance(queries, list):
            return _error(400, "'queries' must be a list of fact names")
        domain = data.get("domain")
        if domain is not None and not isinstance(domain, list):
            return _error(400, "'domain' must be a list of constants")
        try:
            record = _build_record(program_text, semantics, domain, opens, queries)
        except ParseError as exc:
            return _error(422, "program does not parse", _parse_positions(exc))
        except JfyError as exc:
            return _error(400, str(exc))
        session_id = uuid.uuid4().hex[:12]
        with registry_lock:
            sessions[session_id] = record
        _persist(session_id, record)
        return JSONResponse(_view(session_id, record), status_code=201)

    @app.get("/sessions/{session_id}")
    async def get_session(session_id: str):
        record = _get_record(session_id)
        if record is None:
            return _error(404, f"no session {session_id!r}")
        return JSONResponse(_view(session_id, record))

    def _step(session_id: str, record: dict, action) -> JSONResponse:
        from .explain import session_step

        with record["lock"]:
            record["state"] = session_step(record["state"], action)
        _persist(session_id, record)
        return JSONResponse(_view(session_id, record))

    @app.post("/sessions/{session_id}/answers")
    async def post_answer(session_id: str, request: Request):
        record = _get_record(session_id)
        if record is None:
            return _error(404, f"no session {session_id!r}")
        try:
            data = await _body(request)
        except ValueError as exc:
            return _error(400, str(exc))
        name = data.get("fact")
        value = data.get("value")
        if not isinstance(name, str) or not isinstance(value, bool):
            return _error(400, "need 'fact' (string) and 'value' (boolean)")
        frame = record["state"].frame
        try:
            fact = resolve_fact(frame, name)
            return _step(session_id, record, Answer(fact, value))
        except JfyError as exc:
            return _error(400, str(exc))

    @app.delete("/sessions/{session_id}/answers/{fact_name:path}")
    async def delete_answer(session_id: str, fact_name: str):
        record = _get_record(session_id)
        if record is None:
            return _error(404, f"no session {session_id!r}")
        frame = record["state"].frame
        try:
            fact = resolve_fact(frame, fact_name)
            return _step(session_id, record, Retract(fact))
        except JfyError as exc:
            return _error(400, str(exc))

    @app.post("/sessions/{session_id}/queries")
    async def post_query(session_id: str, request: Request):
        record = _get_record(session_id)
        if record is None:
            return _error(404, f"no session {session_id!r}")
        try:
            data = await _body(request)
        except ValueError as exc:
            return _error(400, str(exc))
        name = data.get("fact")
        if not isinstance(name, str):
            return _error(400, "need 'fact' (string)")
        frame = record["state"].frame
        try:
            fact = resolve_fact(frame, name)
            return _step(session_id, record, AddQuery(fact))
        except JfyError as exc:
            return _error(400, str(exc))

    @app.get("/models")
    async def get_models(request: Request):
        params = request.query_params
        program_text = params.get("program")
        semantics = params.get("semantics")
        if not program_text or not semantics:
            return _error(400, "need 'program' and 'semantics' query parameters")
        if semantics not in _SEMANTICS:
            return _error(400, f"semantics must be one of {', '.join(_SEMANTICS)}")
        opens_raw = params.get("opens")
        opens_names: dict = {}
        if opens_raw:
            try:
                opens_names = json.loads(opens_raw)
            except json.JSONDecodeError:
                return _error(400, "'opens' must be JSON")
            if not isinstance(opens_names, dict):
                return _error(400, "'opens' must be an object of fact -> bool")
        domain_raw = params.get("domain")
        domain = [c.strip() for c in domain_raw.split(",")] if domain_raw else None
        try:
            frame = _frame_of(program_text, domain, opens_names.keys())
            assignment = resolve_open_assignment(frame, opens_names)
        except ParseError as exc:
            return _error(422, "program does not parse", _parse_positions(exc))
        except JfyError as exc:
            return _error(400, str(exc))
        try:
            if semantics == "wf":
                payload: dict = {"atoms": wf_model(frame, assignment)}
            elif semantics == "kk":
                payload = {"atoms": kk_model(frame, assignment)}
            else:
                finder = stable_models if semantics == "stable" else supported_models
                models = finder(frame, assignment)
                payload = {
                    "count": len(models),
                    "models": [list(true_atom_names(frame, m)) for m in models],
                }
        except JfyError as exc:
            return _error(400, str(exc))
        payload["semantics"] = semantics
        return JSONResponse(payload)

    return app
