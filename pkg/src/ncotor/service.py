"""In-memory mutation sessions over HTTP.

Endpoints:

    POST /sessions                     create (explicit, "empty", "random-closed", or snapshot)
    GET  /sessions/{id}                full view incl. replayable history
    POST /sessions/{id}/mutate         {"diagonals": [[a,b],...], "direction": "backward"}
    POST /sessions/{id}/undo           step back one mutation
    GET  /specs/{n}/{m}/closed         paged enumeration (?page=&pageSize=&kind=)
    GET  /sessions/{id}/render         SVG of the current configuration

Sessions always hold a closed configuration; every write path re-asserts
that.  Error bodies are {"code", "message", "offending": [[a,b],...]} (plus
"suggestion" where one exists).  Setting NCOTOR_DEBUG=1 replays the whole
history after each mutation and compares against the live state.
"""

from __future__ import annotations

import os
import random
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from .closure import Configuration, closed_sets, cluster_tilting_sets, nc_closure
from .errors import NcotorError, VerificationFailure
from .formats import FORMAT_VERSION
from .mutation import MutationRecord, MutationStep, movement_map, mutate
from .polygon import DiagSet, PolygonSpec
from .render import HIGHLIGHTS, render_svg

RANDOM_DRAW_CAP = 4096
PAGE_SIZE_DEFAULT = 50
PAGE_SIZE_MAX = 500


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class Session:
    id: str
    spec: PolygonSpec
    initial: DiagSet
    current: Configuration
    history: list[MutationRecord] = field(default_factory=list)
    created_at: str = field(default_factory=_now)
    updated_at: str = field(default_factory=_now)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)


_sessions: dict[str, Session] = {}
_sessions_lock = threading.Lock()

app = FastAPI(title="ncotor sessions", version="1")
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)


def _error(status: int, code: str, message: str, offending=None, suggestion=None) -> JSONResponse:
    body = {"code": code, "message": message, "offending": offending or []}
    if suggestion is not None:
        body["suggestion"] = suggestion
    return JSONResponse(status_code=status, content=body)


def _envelope(s: DiagSet) -> dict:
    return {
        "version": FORMAT_VERSION,
        "spec": {"n": s.spec.n, "m": s.spec.m},
        "diagonals": [[d.a, d.b] for d in s],
    }


def _view(session: Session) -> dict:
    cfg = session.current
    return {
        "id": session.id,
        "createdAt": session.created_at,
        "updatedAt": session.updated_at,
        "spec": {"n": session.spec.n, "m": session.spec.m},
        "members": _envelope(cfg.members),
        "nc": _envelope(cfg.nc_set),
        "frame": _envelope(cfg.frame_set),
        "initial": _envelope(session.initial),
        "steps": [
            {"cut": [[d.a, d.b] for d in rec.step.cut], "direction": rec.step.direction}
            for rec in session.history
        ],
    }


def _assert_closed(session: Session) -> None:
    if not session.current.closed:  # pragma: no cover - invariant guard
        raise VerificationFailure(f"session {session.id} left in a non-closed state")


def _replay_check(session: Session) -> None:
    if os.environ.get("NCOTOR_DEBUG", "") in ("", "0"):
        return
    cfg = Configuration(session.initial)
    for rec in session.history:
        cfg = mutate(cfg, rec.step).after
    if cfg.members != session.current.members:  # pragma: no cover - invariant guard
        raise VerificationFailure(f"session {session.id} diverged from its replay")


def _get_session(sid: str) -> Session | None:
    with _sessions_lock:
        return _sessions.get(sid)


@app.post("/sessions")
async def create_session(request: Request):
    data = await request.json()
    if not isinstance(data, dict):
        return _error(422, "bad_request", "body must be a JSON object")
    initial = data.get("initial", data.get("diagonals"))
    if isinstance(initial, dict):
        # a saved view/document envelope; unwrap so GET output restores verbatim
        if "spec" not in data:
            data = {**data, "spec": initial.get("spec")}
        initial = initial.get("diagonals")
    spec_obj = data.get("spec")
    if not isinstance(spec_obj, dict) or "n" not in spec_obj or "m" not in spec_obj:
        return _error(422, "bad_spec", "spec must be an object with integer n and m")
    try:
        spec = PolygonSpec(spec_obj["n"], spec_obj["m"])
    except NcotorError as e:
        return _error(422, "bad_spec", str(e))

    steps = data.get("steps", [])
    try:
        if initial == "empty" or (initial is None and not steps):
            start = nc_closure(DiagSet.empty(spec))
        elif initial == "random-closed":
            seed = data.get("seed", 0)
            pool = list(closed_sets(spec, limit=RANDOM_DRAW_CAP))
            start = random.Random(seed).choice(pool)
        elif isinstance(initial, list):
            start = DiagSet.from_diagonals(spec, [tuple(p) for p in initial])
        else:
            return _error(422, "bad_request",
                          "initial must be a list of pairs, \"empty\", or \"random-closed\"")
    except NcotorError as e:
        return _error(422, "bad_diagonals", str(e))

    cfg = Configuration(start)
    if not cfg.closed:
        closure_set = nc_closure(start)
        return _error(
            422,
            "not_closed",
            "initial configuration is not closed; its closure is suggested",
            offending=[[d.a, d.b] for d in closure_set - start],
            suggestion=[[d.a, d.b] for d in closure_set],
        )

    session = Session(
        id=uuid.uuid4().hex[:12],
        spec=spec,
        initial=start,
        current=cfg,
    )

    # optional snapshot restore: replay recorded steps on top of the initial set
    try:
        for step_obj in steps:
            cut = DiagSet.from_diagonals(spec, [tuple(p) for p in step_obj["cut"]])
            record = mutate(session.current,
                            MutationStep(cut=cut, direction=step_obj["direction"]))
            session.history.append(record)
            session.current = record.after
    except (NcotorError, KeyError, TypeError) as e:
        return _error(422, "bad_snapshot", f"snapshot replay failed: {e}")

    _assert_closed(session)
    with _sessions_lock:
        _sessions[session.id] = session
    return JSONResponse(status_code=201, content=_view(session))


@app.get("/sessions/{sid}")
async def get_session(sid: str):
    session = _get_session(sid)
    if session is None:
        return _error(404, "unknown_session", f"no session {sid}")
    with session.lock:
        return _view(session)


@app.get("/sessions/{sid}/frame")
async def list_frame(sid: str):
    session = _get_session(sid)
    if session is None:
        return _error(404, "unknown_session", f"no session {sid}")
    with session.lock:
        return _envelope(session.current.frame_set)


@app.post("/sessions/{sid}/mutate")
async def mutate_session(sid: str, request: Request):
    session = _get_session(sid)
    if session is None:
        return _error(404, "unknown_session", f"no session {sid}")
    data = await request.json()
    raw = data.get("diagonals", [])
    direction = data.get("direction", "backward")
    with session.lock:
        try:
            cut = DiagSet.from_diagonals(session.spec, [tuple(p) for p in raw])
        except NcotorError as e:
            return _error(422, "bad_diagonals", str(e), offending=raw)
        stray = cut - session.current.frame_set
        if len(stray):
            return _error(
                422,
                "not_in_frame",
                "cut members must belong to the current frame",
                offending=[[d.a, d.b] for d in stray],
            )
        try:
            record = mutate(session.current, MutationStep(cut=cut, direction=direction))
        except NcotorError as e:
            return _error(422, "bad_mutation", str(e))
        moves = movement_map(session.current.members, cut, direction)
        session.history.append(record)
        session.current = record.after
        session.updated_at = _now()
        _assert_closed(session)
        _replay_check(session)
        body = _view(session)
        body["moved"] = [
            {"from": [src.a, src.b], "to": [dst.a, dst.b]}
            for src, dst in sorted(moves.items())
        ]
        return body


@app.post("/sessions/{sid}/undo")
async def undo_session(sid: str):
    session = _get_session(sid)
    if session is None:
        return _error(404, "unknown_session", f"no session {sid}")
    with session.lock:
        undone = False
        if session.history:
            record = session.history.pop()
            session.current = record.before
            session.updated_at = _now()
            undone = True
        _assert_closed(session)
        body = _view(session)
        body["undone"] = undone
        return body


@app.get("/specs/{n}/{m}/closed")
async def enumerate_endpoint(n: int, m: int, page: int = 0,
                             pageSize: int = PAGE_SIZE_DEFAULT,
                             kind: str = "closed"):
    try:
        spec = PolygonSpec(n, m)
    except NcotorError as e:
        return _error(422, "bad_spec", str(e))
    if kind not in ("closed", "cluster-tilting"):
        return _error(422, "bad_request", f"kind must be closed or cluster-tilting, got {kind!r}")
    if page < 0 or not 1 <= pageSize <= PAGE_SIZE_MAX:
        return _error(422, "bad_request",
                      f"page must be >= 0 and pageSize in 1..{PAGE_SIZE_MAX}")
    stream = cluster_tilting_sets(spec) if kind == "cluster-tilting" else closed_sets(spec)
    start = page * pageSize
    items = []
    total = 0
    for s in stream:
        if start <= total < start + pageSize:
            items.append([[d.a, d.b] for d in s])
        total += 1
    return {
        "spec": {"n": n, "m": m},
        "kind": kind,
        "page": page,
        "pageSize": pageSize,
        "total": total,
        "items": items,
        "hasMore": start + pageSize < total,
    }


@app.get("/sessions/{sid}/render")
async def render_session(sid: str, format: str = "svg", highlight: str | None = "frame"):
    session = _get_session(sid)
    if session is None:
        return _error(404, "unknown_session", f"no session {sid}")
    if format != "svg":
        return _error(422, "bad_request", f"only svg is supported, got {format!r}")
    if highlight not in (None, "", *HIGHLIGHTS):
        return _error(422, "bad_request", f"highlight must be one of {HIGHLIGHTS}")
    with session.lock:
        svg = render_svg(session.current.members, highlight=highlight or None)
    return Response(content=svg, media_type="image/svg+xml")
