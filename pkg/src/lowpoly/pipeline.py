"""End-to-end triangulation pipeline and the parameter-sweep experiment mode.

Stage order: grayscale -> sharpen -> sobel -> threshold -> subsample (or
random points) -> frame corners -> Delaunay -> centroid colors -> rasterize.
Every stage is deterministic in (image, config), so the final PNG bytes are
reproducible run-to-run.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import NamedTuple

from . import backends
from .delaunay import Triangulation, triangulate
from .errors import ImageSizeError, ParameterError, TooFewPointsError
from .filters import EdgeMap, sharpen, sobel, threshold_pixels
from .raster import MIN_DIMENSION, GrayImage, RasterImage, to_grayscale
from .render import rasterize, render_wireframe, triangle_colors
from .rng import RNG_ALGORITHM
from .sampling import SamplerConfig, add_frame_points, random_points, subsample_uniform

DEFAULT_THRESHOLD = 50
DEFAULT_DENSITY = 60


@dataclass
class PipelineConfig:
    """Pipeline parameters; the defaults are threshold 50, density 60."""

    threshold: int = DEFAULT_THRESHOLD
    density: int = DEFAULT_DENSITY
    seed: int = 0
    random_mode: int | None = None
    include_frame: bool = True
    dump_stages: bool = False

    def __post_init__(self):
        if not 0 <= self.threshold <= 255:
            raise ParameterError(f"threshold must be in [0, 255], got {self.threshold}")
        if self.density < 1:
            raise ParameterError(f"density must be >= 1, got {self.density}")
        if self.seed < 0:
            raise ParameterError("seed must be non-negative")
        if self.random_mode is not None and self.random_mode < 3:
            raise ParameterError("random_mode needs at least 3 points")

    def to_dict(self) -> dict:
        return {
            "threshold": self.threshold,
            "density": self.density,
            "seed": self.seed,
            "random_mode": self.random_mode,
            "include_frame": self.include_frame,
        }


@dataclass
class RunStats:
    """Counts and per-stage wall times for one pipeline run."""

    edge_pixel_count: int
    vertex_count: int
    triangle_count: int
    timings_ms: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "edge_pixel_count": self.edge_pixel_count,
            "vertex_count": self.vertex_count,
            "triangle_count": self.triangle_count,
            "timings_ms": {k: round(v, 3) for k, v in self.timings_ms.items()},
            "rng": RNG_ALGORITHM,
            "backend": backends.active_backend_name(),
        }


@dataclass
class StageImages:
    """Intermediate images kept when dump_stages is enabled."""

    gray: GrayImage
    sharp: GrayImage
    edges: EdgeMap
    wireframe: RasterImage


class PipelineResult(NamedTuple):
    image: RasterImage
    triangulation: Triangulation
    stats: RunStats
    stages: StageImages | None


def _staged(timings: dict, name: str):
    class _Timer:
        def __enter__(self):
            self.t0 = time.perf_counter()

        def __exit__(self, exc_type, exc, tb):
            timings[name] = (time.perf_counter() - self.t0) * 1000.0
            if exc is not None and not hasattr(exc, "stage"):
                exc.stage = name
            return False

    return _Timer()


def run_pipeline(img: RasterImage, cfg: PipelineConfig) -> PipelineResult:
    """Run the full triangulation pipeline on a decoded image.

    Raises the underlying stage error (annotated with a `.stage` attribute)
    when a stage fails; a too-sparse vertex set names the offending
    threshold/density combination.
    """
    if img.width < MIN_DIMENSION or img.height < MIN_DIMENSION:
        raise ImageSizeError(
            f"image must be at least {MIN_DIMENSION}x{MIN_DIMENSION}, "
            f"got {img.width}x{img.height}"
        )
    timings: dict[str, float] = {}
    with _staged(timings, "grayscale"):
        gray = to_grayscale(img)
    with _staged(timings, "sharpen"):
        sharp = sharpen(gray)
    with _staged(timings, "sobel"):
        edges = sobel(sharp)
    with _staged(timings, "threshold"):
        pixels = threshold_pixels(edges, cfg.threshold)
    with _staged(timings, "sample"):
        if cfg.random_mode is not None:
            points = random_points(img.width, img.height, cfg.random_mode, cfg.seed)
        else:
            try:
                points = subsample_uniform(
                    pixels,
                    SamplerConfig(
                        density=cfg.density,
                        seed=cfg.seed,
                        include_frame=cfg.include_frame,
                    ),
                )
            except TooFewPointsError as e:
                raise TooFewPointsError(
                    f"threshold={cfg.threshold} and density={cfg.density} leave "
                    f"too few vertices: {e}"
                ) from e
        if cfg.include_frame:
            points = add_frame_points(points, img.width, img.height)
    with _staged(timings, "triangulate"):
        tri = triangulate(points)
    with _staged(timings, "color"):
        colors = triangle_colors(tri, img)
    with _staged(timings, "rasterize"):
        final = rasterize(tri, colors, img.width, img.height)
    stages = None
    if cfg.dump_stages:
        with _staged(timings, "wireframe"):
            wire = render_wireframe(tri, img.width, img.height)
        stages = StageImages(gray=gray, sharp=sharp, edges=edges, wireframe=wire)
    stats = RunStats(
        edge_pixel_count=len(pixels),
        vertex_count=tri.vertex_count,
        triangle_count=tri.triangle_count,
        timings_ms=timings,
    )
    return PipelineResult(final, tri, stats, stages)


def sweep(
    img: RasterImage,
    t_values: list[int],
    d_values: list[int],
    seed: int = 0,
    include_frame: bool = True,
) -> list[dict]:
    """Run the pipeline over the (threshold x density) grid.

    Returns one row per cell with the counts compared in parameter studies;
    a failing cell records its error and the sweep continues.
    """
    if not t_values or not d_values:
        raise ParameterError("sweep needs at least one threshold and one density")
    rows = []
    for t in t_values:
        for d in d_values:
            row = {
                "threshold": t,
                "density": d,
                "seed": seed,
                "edge_pixels": None,
                "vertices": None,
                "triangles": None,
                "total_ms": None,
                "error": None,
            }
            t0 = time.perf_counter()
            try:
                cfg = PipelineConfig(
                    threshold=t, density=d, seed=seed, include_frame=include_frame
                )
                res = run_pipeline(img, cfg)
            except Exception as e:  # noqa: BLE001 - per-cell errors are data
                row["error"] = f"{type(e).__name__}: {e}"
            else:
                row["edge_pixels"] = res.stats.edge_pixel_count
                row["vertices"] = res.stats.vertex_count
                row["triangles"] = res.stats.triangle_count
            row["total_ms"] = round((time.perf_counter() - t0) * 1000.0, 3)
            rows.append(row)
    return rows
