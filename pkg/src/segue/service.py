"""HTTP API over analysis sessions.

All bodies are JSON. Engine errors map to 400, unknown ids to 404; a layout
request carrying a stale version gets 409 together with the current version
so clients can refetch.
"""

from __future__ import annotations

import itertools
import threading

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse, PlainTextResponse

from .errors import SegueError, TimeRangeError, UnknownIdError
from .session import Session, create_session


class SessionRegistry:
    """In-memory session store; ids are process-unique."""

    def __init__(self):
        self._sessions: dict[str, Session] = {}
        self._counter = itertools.count(1)
        self._lock = threading.Lock()

    def create(self, document) -> Session:
        with self._lock:
            session_id = f"s{next(self._counter)}"
        session = create_session(document, session_id=session_id)
        with self._lock:
            self._sessions[session_id] = session
        return session

    def get(self, session_id: str) -> Session:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise UnknownIdError(f"unknown session {session_id!r}") from None


def create_app(
    registry: SessionRegistry | None = None, ui_dir: str | None = None
) -> FastAPI:
    registry = registry or SessionRegistry()
    app = FastAPI(title="segue", version="0.1.0")
    app.state.registry = registry
    # the browser UI is served from another origin (or file://); open CORS
    # is fine for a desk-scale, single-user tool
    from fastapi.middleware.cors import CORSMiddleware

    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(SegueError)
    async def _segue_error(request: Request, exc: SegueError):
        status = 404 if isinstance(exc, (UnknownIdError, TimeRangeError)) else 400
        return JSONResponse(status_code=status, content={"error": str(exc)})

    @app.post("/sessions")
    async def create(request: Request):
        document = await request.json()
        session = registry.create(document)
        return {"session_id": session.id, "layout_version": session.layout_version}

    @app.get("/sessions/{sid}/meta")
    async def meta(sid: str):
        session = registry.get(sid)
        net = session.network
        return {
            "session_id": session.id,
            "num_time_steps": net.num_time_steps,
            "time_labels": list(net.time_labels),
            "attribute_values": list(net.attribute_values),
            "nodes": [
                {"id": n.id, "label": n.label, "attribute": n.attribute}
                for n in net.nodes
            ],
            "metric": session.metric,
            "layout_version": session.layout_version,
            "event_types": session.event_types_document(),
        }

    @app.get("/sessions/{sid}/layout")
    async def layout(sid: str, version: int | None = None):
        session = registry.get(sid)
        doc = session.layout_document()
        if version is not None and version != doc["layout_version"]:
            return JSONResponse(
                status_code=409,
                content={
                    "error": "stale layout version",
                    "requested": version,
                    "layout_version": doc["layout_version"],
                },
            )
        return doc

    @app.post("/sessions/{sid}/event-types")
    async def add_event_type(sid: str, request: Request):
        session = registry.get(sid)
        spec = await request.json()
        event_type_id, version = session.add_event_type(spec)
        return {"event_type_id": event_type_id, "layout_version": version}

    @app.delete("/sessions/{sid}/event-types/{etid}")
    async def remove_event_type(sid: str, etid: str):
        session = registry.get(sid)
        version = session.remove_event_type(etid)
        return {"layout_version": version}

    @app.get("/sessions/{sid}/event-types")
    async def list_event_types(sid: str):
        session = registry.get(sid)
        return {
            "event_types": session.event_types_document(),
            "layout_version": session.layout_version,
        }

    @app.post("/sessions/{sid}/metric")
    async def set_metric(sid: str, request: Request):
        session = registry.get(sid)
        body = await request.json()
        version = session.set_metric(body.get("metric"))
        return {"metric": session.metric, "layout_version": version}

    @app.post("/sessions/{sid}/preview")
    async def preview(sid: str, request: Request):
        session = registry.get(sid)
        body = await request.json()
        focals = body.pop("focals", None)
        events = session.preview(body, focals)
        return {
            "events": {focal: [[s, d] for s, d in spans] for focal, spans in events.items()}
        }

    @app.get("/sessions/{sid}/egos/{focal}/timeline")
    async def timeline(sid: str, focal: str):
        return registry.get(sid).get_timeline_data(focal)

    @app.get("/sessions/{sid}/egos/{focal}/pixels")
    async def pixels(sid: str, focal: str):
        session = registry.get(sid)
        data = session.get_pixel_display(focal)
        by_id = {et.id: et for et in session.event_types}
        return {
            "focal": data.focal,
            "rows": [
                {
                    "event_type_id": etid,
                    "name": by_id[etid].name,
                    "kind": "value_range"
                    if by_id[etid].kind == "value-range"
                    else "slope_range",
                    "color_index": by_id[etid].color_index,
                    "spans": [[s, d] for s, d in spans],
                }
                for etid, spans in data.rows
            ],
        }

    @app.get("/sessions/{sid}/egos/{focal}/series")
    async def series(sid: str, focal: str, type: str = "size"):
        return {"focal": focal, "series": type, "values": registry.get(sid).get_series(focal, type)}

    @app.get("/sessions/{sid}/egos/{focal}/snapshots/{t}")
    async def snapshot(sid: str, focal: str, t: int):
        snap, attrs = registry.get(sid).get_snapshot(focal, t)
        return {
            "focal": snap.focal,
            "t": snap.t,
            "alters": sorted(snap.alters),
            "edges": [[u, v] for u, v in sorted(snap.edges)],
            "attributes": attrs,
        }

    @app.get("/sessions/{sid}/stats")
    async def stats(sid: str, series: str = "size", bins: int = 20):
        st = registry.get(sid).get_stats(series, bins)
        return {
            "series": series,
            "min": st.min,
            "max": st.max,
            "histogram": [[edge, count] for edge, count in st.histogram],
        }

    @app.get("/sessions/{sid}/layout/radial")
    async def radial(sid: str, center: str):
        session = registry.get(sid)
        return session.layout_document(session.radial(center))

    @app.get("/sessions/{sid}/layout/density")
    async def density(sid: str, epsilon: float = 0.0):
        overlay = registry.get(sid).density(epsilon)
        return {"points": [[x, y, w] for x, y, w in overlay.points]}

    @app.get("/sessions/{sid}/layout/jitter")
    async def jittered(sid: str, seed: int = 0, radius: float = 0.0):
        session = registry.get(sid)
        return session.layout_document(session.jittered(seed, radius))

    @app.get("/sessions/{sid}/edges")
    async def edges_at(sid: str, t: int):
        session = registry.get(sid)
        return {"t": t, "edges": [[u, v] for u, v in sorted(session.network.edges_at(t))]}

    @app.get("/sessions/{sid}/export/{what}")
    async def export(sid: str, what: str, format: str = "json") -> Response:
        text = registry.get(sid).export_text(what, format)
        media = "text/csv" if format == "csv" else "application/json"
        if what == "sequences":
            media = "application/jsonl"
        return PlainTextResponse(content=text, media_type=media)

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


app = create_app()
