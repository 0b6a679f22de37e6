"""Sparsify edge pixels into triangulation vertices.

Every operation is a pure function of (inputs, seed): sampling runs on
SplitMix64 and selected points are canonicalized into (y, x) order, so
downstream stages never depend on incidental input ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, TooFewPointsError
from .filters import ThresholdedPixels
from .rng import RNG_ALGORITHM, SplitMix64

PROVENANCE_EDGE = "edge"
PROVENANCE_RANDOM = "random"
PROVENANCE_FRAME = "frame"


@dataclass
class SamplerConfig:
    """density >= 1 keeps floor(|S| / density) of the edge pixels."""

    density: int = 60
    seed: int = 0
    include_frame: bool = True
    random_count: int | None = None

    def __post_init__(self):
        if self.density < 1:
            raise ParameterError(f"density must be >= 1, got {self.density}")
        if self.seed < 0:
            raise ParameterError("seed must be non-negative")
        if self.random_count is not None and self.random_count < 1:
            raise ParameterError("random_count must be positive")


@dataclass(eq=False)
class PointSet:
    """Vertex coordinates in original-image space with per-point provenance.

    `points` has shape (n, 2) with columns (x, y); rows are unique.
    """

    points: np.ndarray
    provenance: list[str]
    seed: int
    rng: str = RNG_ALGORITHM

    def __post_init__(self):
        self.points = np.ascontiguousarray(self.points, dtype=np.int64)
        if self.points.ndim != 2 or self.points.shape[1] != 2:
            raise ValueError("points must have shape (n, 2)")
        if len(self.provenance) != len(self.points):
            raise ValueError("provenance must tag every point")

    def __len__(self) -> int:
        return len(self.points)


def _sort_yx(coords: np.ndarray) -> np.ndarray:
    order = np.lexsort((coords[:, 0], coords[:, 1]))
    return coords[order]


def subsample_uniform(pixels: ThresholdedPixels, cfg: SamplerConfig) -> PointSet:
    """Draw floor(|S| / density) edge pixels uniformly without replacement.

    Selection is seeded, Fisher-Yates based, and performed over the (y, x)
    sorted pixel list; the chosen points are returned in (y, x) order.
    """
    n = len(pixels)
    k = n // cfg.density
    if k < 3 and not cfg.include_frame:
        raise TooFewPointsError(
            f"floor({n} / {cfg.density}) = {k} sampled points; need at least 3 "
            "(or frame corners enabled)"
        )
    coords = _sort_yx(pixels.coords)
    if k == n:
        chosen = coords
    elif k == 0:
        chosen = coords[:0]
    else:
        gen = SplitMix64(cfg.seed)
        idx = gen.sample_indices(n, k)
        # coords is (y, x) sorted, so selecting sorted indices keeps it so
        chosen = coords[np.array(sorted(idx), dtype=np.int64)]
    return PointSet(chosen, [PROVENANCE_EDGE] * len(chosen), seed=cfg.seed)


def random_points(img_width: int, img_height: int, count: int, seed: int = 0) -> PointSet:
    """`count` unique pixel coordinates, uniform over the image rectangle.

    Duplicates are resolved by rejection, so the draw stays uniform over
    distinct coordinate sets for a given seed.
    """
    if count < 3:
        raise ParameterError(f"need at least 3 random points, got {count}")
    if count > img_width * img_height:
        raise ParameterError(
            f"cannot place {count} unique points on a {img_width}x{img_height} image"
        )
    gen = SplitMix64(seed)
    seen: set[tuple[int, int]] = set()
    pts = []
    while len(pts) < count:
        x = gen.below(img_width)
        y = gen.below(img_height)
        if (x, y) not in seen:
            seen.add((x, y))
            pts.append((x, y))
    coords = _sort_yx(np.array(pts, dtype=np.int64))
    return PointSet(coords, [PROVENANCE_RANDOM] * count, seed=seed)


def add_frame_points(ps: PointSet, img_width: int, img_height: int) -> PointSet:
    """Append the 4 canvas corners (skipping duplicates) so the convex hull
    spans the full image."""
    corners = [
        (0, 0),
        (img_width - 1, 0),
        (0, img_height - 1),
        (img_width - 1, img_height - 1),
    ]
    have = {(int(x), int(y)) for x, y in ps.points}
    extra = [c for c in corners if c not in have]
    if not extra:
        return ps
    points = np.vstack([ps.points, np.array(extra, dtype=np.int64)])
    provenance = list(ps.provenance) + [PROVENANCE_FRAME] * len(extra)
    return PointSet(points, provenance, seed=ps.seed, rng=ps.rng)
