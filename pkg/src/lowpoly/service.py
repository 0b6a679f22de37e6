"""HTTP facade over the pipeline for the interactive tuner UI.

Uploads are content-addressed (same bytes -> same id) and triangulation
responses are cached by (image id, config); the pipeline is deterministic,
so a cache hit returns the byte-identical response of the first run.
"""

from __future__ import annotations

import base64
import hashlib
import json
import threading
from collections import OrderedDict
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request, Response, UploadFile
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .errors import DecodeError, LowpolyError, ParameterError
from .pipeline import PipelineConfig, run_pipeline
from .raster import GrayImage, decode_image, encode_gray, encode_image

_PLACEHOLDER_PAGE = """<!doctype html>
<html><head><title>lowpoly service</title></head>
<body><h1>lowpoly triangulation service</h1>
<p>No tuner UI bundle found. Build the frontend and pass --static-dir,
or use the JSON API directly: POST /images, POST /triangulate.</p>
</body></html>"""


class TriangulateRequest(BaseModel):
    image_id: str
    threshold: int = Field(50, ge=0, le=255)
    density: int = Field(60, ge=1)
    seed: int = Field(0, ge=0)
    random_points: int | None = Field(None, ge=3)
    include_frame: bool = True
    include_stages: bool = False

    def cache_key(self) -> str:
        doc = json.dumps(self.model_dump(), sort_keys=True)
        return hashlib.sha256(doc.encode()).hexdigest()[:24]


class _ByteBudgetLRU:
    """Thread-safe LRU of byte blobs bounded by a total byte budget."""

    def __init__(self, budget_bytes: int):
        self.budget = budget_bytes
        self._items: OrderedDict[str, dict] = OrderedDict()
        self._size = 0
        self._lock = threading.Lock()

    def get(self, key: str) -> dict | None:
        with self._lock:
            entry = self._items.get(key)
            if entry is not None:
                self._items.move_to_end(key)
            return entry

    def put(self, key: str, entry: dict, size: int) -> None:
        with self._lock:
            if key in self._items:
                return
            self._items[key] = entry
            self._size += size
            entry["_size"] = size
            while self._size > self.budget and len(self._items) > 1:
                _, evicted = self._items.popitem(last=False)
                self._size -= evicted["_size"]


def _default_static_dir() -> Path | None:
    candidates = [
        Path(__file__).resolve().parent / "static",
        Path.cwd() / "frontend" / "dist",
    ]
    for c in candidates:
        if (c / "index.html").is_file():
            return c
    return None


def create_app(
    cache_mb: int = 256,
    max_upload_mb: int = 32,
    static_dir: Path | str | None = None,
) -> FastAPI:
    app = FastAPI(title="lowpoly triangulation service")
    uploads: dict[str, dict] = {}
    results = _ByteBudgetLRU(cache_mb * 1024 * 1024)
    max_upload = max_upload_mb * 1024 * 1024

    @app.post("/images")
    async def upload_image(file: UploadFile):
        data = await file.read()
        if len(data) > max_upload:
            raise HTTPException(413, f"upload exceeds {max_upload_mb} MB cap")
        try:
            img = decode_image(data)
        except DecodeError as e:
            raise HTTPException(415, str(e))
        image_id = hashlib.sha256(data).hexdigest()[:16]
        uploads.setdefault(
            image_id,
            {
                "bytes": data,
                "width": img.width,
                "height": img.height,
                "media_type": "image/png" if data[:4] == b"\x89PNG" else "image/jpeg",
            },
        )
        return {
            "image_id": image_id,
            "width": img.width,
            "height": img.height,
        }

    @app.get("/images/{image_id}")
    def get_image(image_id: str):
        entry = uploads.get(image_id)
        if entry is None:
            raise HTTPException(404, f"unknown image id {image_id!r}")
        return Response(content=entry["bytes"], media_type=entry["media_type"])

    @app.post("/triangulate")
    def triangulate_image(req: TriangulateRequest):
        if req.image_id not in uploads:
            raise HTTPException(404, f"unknown image id {req.image_id!r}")
        key = req.cache_key()
        cached = results.get(key)
        if cached is not None:
            return Response(content=cached["body"], media_type="application/json")

        img = decode_image(uploads[req.image_id]["bytes"])
        try:
            cfg = PipelineConfig(
                threshold=req.threshold,
                density=req.density,
                seed=req.seed,
                random_mode=req.random_points,
                include_frame=req.include_frame,
                dump_stages=req.include_stages,
            )
            result = run_pipeline(img, cfg)
        except ParameterError as e:
            raise HTTPException(422, str(e))
        except LowpolyError as e:
            stage = getattr(e, "stage", "validate")
            raise HTTPException(500, {"message": str(e), "stage": stage})

        stage_blobs: dict[str, bytes] = {}
        stage_urls: dict[str, str] = {}
        if req.include_stages:
            stages = result.stages
            stage_blobs = {
                "gray": encode_gray(stages.gray),
                "sharp": encode_gray(stages.sharp),
                "sobel": encode_gray(GrayImage(stages.edges.magnitudes)),
                "wire": encode_image(stages.wireframe),
            }
            stage_urls = {name: f"/stages/{key}/{name}.png" for name in stage_blobs}

        png = encode_image(result.image)
        doc = {
            "image_id": req.image_id,
            "config": cfg.to_dict(),
            "width": img.width,
            "height": img.height,
            "image_png_base64": base64.b64encode(png).decode("ascii"),
            "mesh": result.triangulation.to_json_dict(),
            "stats": result.stats.to_dict(),
            "stages": stage_urls,
        }
        body = json.dumps(doc, separators=(",", ":")).encode()
        results.put(
            key,
            {"body": body, "stages": stage_blobs},
            size=len(body) + sum(len(b) for b in stage_blobs.values()),
        )
        return Response(content=body, media_type="application/json")

    @app.get("/stages/{key}/{stage}.png")
    def get_stage(key: str, stage: str):
        entry = results.get(key)
        if entry is None or stage not in entry["stages"]:
            raise HTTPException(404, "stage image not cached; re-run /triangulate")
        return Response(content=entry["stages"][stage], media_type="image/png")

    resolved_static = Path(static_dir) if static_dir else _default_static_dir()
    if resolved_static and (resolved_static / "index.html").is_file():
        app.mount("/", StaticFiles(directory=resolved_static, html=True), name="ui")
    else:

        @app.get("/")
        def index():
            return Response(content=_PLACEHOLDER_PAGE, media_type="text/html")

    return app
