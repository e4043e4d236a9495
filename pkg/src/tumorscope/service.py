"""HTTP facade for the interactive review workflow.

A session holds one uploaded volume. The reviewer browses slice renders,
triggers segmentation, and picks the best candidate cluster; the selection
runs the overlap step and returns the per-hemisphere area report. All
numerics happen in the library modules; this layer only caches and serves
their results.

Endpoints (JSON errors are ``{code, message}``):

* ``POST /api/v1/sessions`` (octet-stream body) -> ``{session_id, slices}``
* ``GET  /api/v1/sessions/{id}/slices/{i}.png``
* ``POST /api/v1/sessions/{id}/slices/{i}/segment`` -> candidates + centroids
* ``GET  /api/v1/sessions/{id}/slices/{i}/clusters/{k}.png``
* ``POST /api/v1/sessions/{id}/slices/{i}/select`` -> ``{left, right}``
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from .atlas import GRID_HEIGHT, GRID_WIDTH, Atlas, Hemisphere, load_atlas, overlap_detect
from .errors import NiftiError
from .fcm import FcmParams, cluster_mask, fcm, hard_labels
from .imaging import encode_mask_png, encode_slice_png
from .nifti import Slice, extract_axial_slices, normalize_intensities, parse_nifti, resample_to_grid


@dataclass(frozen=True)
class ServiceConfig:
    atlas_manifest: Path
    gap_mm: float = 10.0
    upload_cap_bytes: int = 256 * 1024 * 1024
    session_ttl_seconds: float = 3600.0
    static_dir: Path | None = None


class SegmentRequest(BaseModel):
    c: int = 5
    m: float = 2.0
    epsilon: float = 1e-5
    max_iter: int = 100
    seed: int = 0

    def key(self) -> tuple:
        return (self.c, self.m, self.epsilon, self.max_iter, self.seed)


class SelectRequest(BaseModel):
    k: int


@dataclass
class _Segmentation:
    params_key: tuple
    c: int
    mask_pngs: list[bytes]
    masks: list
    payload: dict


@dataclass
class _Session:
    session_id: str
    slices: list[Slice]
    last_access: float
    lock: threading.Lock = field(default_factory=threading.Lock)
    prepared: dict[int, Slice] = field(default_factory=dict)
    slice_pngs: dict[int, bytes] = field(default_factory=dict)
    seg_cache: dict[tuple, _Segmentation] = field(default_factory=dict)
    latest_seg: dict[int, _Segmentation] = field(default_factory=dict)
    selected: dict[int, int] = field(default_factory=dict)

    def prepared_slice(self, index: int) -> Slice:
        with self.lock:
            if index not in self.prepared:
                s = normalize_intensities(self.slices[index])
                self.prepared[index] = resample_to_grid(s, GRID_WIDTH, GRID_HEIGHT)
            return self.prepared[index]


class _SessionStore:
    """In-memory sessions with idle-TTL eviction. No persistence."""

    def __init__(self, ttl_seconds: float):
        self._ttl = ttl_seconds
        self._sessions: dict[str, _Session] = {}
        self._lock = threading.Lock()

    def create(self, slices: list[Slice]) -> _Session:
        session = _Session(session_id=secrets.token_hex(16), slices=slices,
                           last_access=time.monotonic())
        with self._lock:
            self._purge()
            self._sessions[session.session_id] = session
        return session

    def get(self, session_id: str) -> _Session | None:
        with self._lock:
            self._purge()
            session = self._sessions.get(session_id)
            if session is not None:
                session.last_access = time.monotonic()
            return session

    def _purge(self) -> None:
        now = time.monotonic()
        dead = [sid for sid, s in self._sessions.items()
                if now - s.last_access > self._ttl]
        for sid in dead:
            del self._sessions[sid]


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


def create_app(cfg: ServiceConfig) -> FastAPI:
    """Build the application. The atlas loads once, at startup."""
    atlas: Atlas = load_atlas(cfg.atlas_manifest)
    store = _SessionStore(cfg.session_ttl_seconds)
    app = FastAPI(title="tumorscope review service")

    @app.exception_handler(RequestValidationError)
    async def _validation_handler(request: Request, exc: RequestValidationError):
        return _error(422, "ValidationError", str(exc.errors()))

    @app.post("/api/v1/sessions", status_code=201)
    async def create_session(request: Request):
        declared = request.headers.get("content-length")
        if declared is not None and declared.isdigit() and int(declared) > cfg.upload_cap_bytes:
            return _error(413, "TooLarge", f"upload cap is {cfg.upload_cap_bytes} bytes")
        body = await request.body()
        if len(body) > cfg.upload_cap_bytes:
            return _error(413, "TooLarge", f"upload cap is {cfg.upload_cap_bytes} bytes")
        try:
            volume = parse_nifti(body)
            slices = extract_axial_slices(volume, cfg.gap_mm)
        except NiftiError as e:
            return _error(400, type(e).__name__, str(e))
        session = store.create(slices)
        return JSONResponse(status_code=201, content={
            "session_id": session.session_id,
            "slices": len(slices),
        })

    def _lookup(session_id: str, index: int) -> _Session | JSONResponse:
        session = store.get(session_id)
        if session is None:
            return _error(404, "UnknownSession", session_id)
        if not 0 <= index < len(session.slices):
            return _error(404, "UnknownSlice", f"slice {index} of {len(session.slices)}")
        return session

    @app.get("/api/v1/sessions/{session_id}/slices/{index}.png")
    def get_slice_image(session_id: str, index: int):
        session = _lookup(session_id, index)
        if isinstance(session, JSONResponse):
            return session
        with session.lock:
            png = session.slice_pngs.get(index)
        if png is None:
            png = encode_slice_png(session.prepared_slice(index).pixels)
            with session.lock:
                session.slice_pngs[index] = png
        return Response(content=png, media_type="image/png")

    @app.post("/api/v1/sessions/{session_id}/slices/{index}/segment")
    def segment_slice(session_id: str, index: int, req: SegmentRequest):
        session = _lookup(session_id, index)
        if isinstance(session, JSONResponse):
            return session
        try:
            params = FcmParams(c=req.c, m=req.m, epsilon=req.epsilon,
                               max_iter=req.max_iter, seed=req.seed)
        except ValueError as e:
            return _error(422, "InvalidParams", str(e))

        key = (index, *req.key())
        prepared = session.prepared_slice(index)
        # Coalesce: concurrent identical requests compute the clustering once.
        with session.lock:
            seg = session.seg_cache.get(key)
            if seg is None:
                seg = _segment(session.session_id, index, prepared, params)
                session.seg_cache[key] = seg
            session.latest_seg[index] = seg
        return JSONResponse(content=seg.payload)

    @app.get("/api/v1/sessions/{session_id}/slices/{index}/clusters/{k}.png")
    def get_cluster_mask(session_id: str, index: int, k: int):
        session = _lookup(session_id, index)
        if isinstance(session, JSONResponse):
            return session
        with session.lock:
            seg = session.latest_seg.get(index)
        if seg is None or not 0 <= k < seg.c:
            return _error(404, "UnknownCluster", f"cluster {k} of slice {index}")
        return Response(content=seg.mask_pngs[k], media_type="image/png")

    @app.post("/api/v1/sessions/{session_id}/slices/{index}/select")
    def select_cluster(session_id: str, index: int, req: SelectRequest):
        session = _lookup(session_id, index)
        if isinstance(session, JSONResponse):
            return session
        with session.lock:
            seg = session.latest_seg.get(index)
        if seg is None:
            return _error(409, "NotSegmented", f"segment slice {index} first")
        if not 0 <= req.k < seg.c:
            return _error(422, "BadIndex", f"cluster {req.k} outside [0, {seg.c})")

        report = overlap_detect(seg.masks[req.k], atlas, index)
        with session.lock:
            session.selected[index] = req.k

        grouped = {"left": [], "right": []}
        for hit in report.hits:
            side = "left" if hit.hemisphere is Hemisphere.LEFT else "right"
            grouped[side].append({
                "area": hit.area_id,
                "name": hit.name,
                "pixels": hit.pixels,
                "fraction": hit.fraction,
            })
        return JSONResponse(content=grouped)

    if cfg.static_dir is not None and Path(cfg.static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=cfg.static_dir, html=True), name="webui")

    return app


def _segment(session_id: str, index: int, prepared: Slice, params: FcmParams) -> _Segmentation:
    model = fcm(prepared.pixels.ravel(), params)
    labels = hard_labels(model.membership)
    masks = [cluster_mask(labels, k, GRID_WIDTH, GRID_HEIGHT, params.c)
             for k in range(params.c)]
    base = f"/api/v1/sessions/{session_id}/slices/{index}/clusters"
    payload = {
        "candidates": [f"{base}/{k}.png" for k in range(params.c)],
        "centroids": [float(v) for v in model.centroids],
        "iterations": model.iterations,
        "converged": model.converged,
    }
    return _Segmentation(
        params_key=(index, params.c, params.m, params.epsilon, params.max_iter, params.seed),
        c=params.c,
        mask_pngs=[encode_mask_png(m) for m in masks],
        masks=masks,
        payload=payload,
    )
