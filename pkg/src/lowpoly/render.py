"""Fill triangles with centroid-sampled colors; draw wireframe previews.

Rasterization samples each pixel at its center (x + 0.5, y + 0.5) with the
vertices embedded at their own pixel centers, so the half-pixel offsets
cancel and every edge test is exact integer arithmetic on raw coordinates.
Centers that land exactly on a shared edge or vertex are resolved by the
top-left rule; centers on the hull boundary that every tie rejects fall
back to the incident triangle with the smallest index triple. The result
partitions the closed hull: no pixel painted twice, none missed, and the
image is independent of triangle order. With frame corners in the vertex
set the closed hull spans the full canvas.
"""

from __future__ import annotations

import numpy as np

from . import backends
from .delaunay import Triangulation, centroid
from .errors import ParameterError
from .raster import RasterImage

BLACK = (0, 0, 0)
WHITE = (255, 255, 255)


def triangle_color(
    tri: tuple[int, int, int], verts: np.ndarray, original: RasterImage
) -> tuple[int, int, int]:
    """Color of the original image at the triangle's rounded centroid."""
    c = centroid(tri, verts, width=original.width, height=original.height)
    return original.pixel(c.x, c.y)


def triangle_colors(tri: Triangulation, original: RasterImage) -> np.ndarray:
    """Per-triangle centroid colors as an (m, 3) uint8 array.

    Vectorized equivalent of calling `triangle_color` per triangle; vertex
    coordinates are non-negative so the tie rule reduces to (2s + 3) // 6.
    """
    if tri.triangle_count == 0:
        return np.zeros((0, 3), dtype=np.uint8)
    sums = tri.vertices[tri.triangles].sum(axis=1)
    cx = np.clip((2 * sums[:, 0] + 3) // 6, 0, original.width - 1)
    cy = np.clip((2 * sums[:, 1] + 3) // 6, 0, original.height - 1)
    return original.pixels[cy, cx]


def rasterize(
    tri: Triangulation,
    colors: np.ndarray,
    canvas_w: int,
    canvas_h: int,
    background: tuple[int, int, int] = BLACK,
) -> RasterImage:
    """Paint each triangle onto a canvas under the top-left fill rule.

    Pixels outside the convex hull keep the background color; with frame
    corners in the point set the hull is the full canvas.
    """
    if len(colors) != tri.triangle_count:
        raise ParameterError("need exactly one color per triangle")
    img = backends.get_backend().fill_triangles(
        np.ascontiguousarray(tri.vertices, dtype=np.int64),
        np.ascontiguousarray(tri.triangles, dtype=np.int32),
        np.ascontiguousarray(colors, dtype=np.uint8),
        canvas_w,
        canvas_h,
        background,
    )
    return RasterImage(img)


def _line_pixels(x0: int, y0: int, x1: int, y1: int) -> tuple[np.ndarray, np.ndarray]:
    """Integer midpoint traversal of the segment, endpoints included.

    Steps along the major axis; the minor coordinate is the rounded ideal
    offset (2 i ady + adx) // (2 adx), which is exact integer arithmetic.
    """
    dx, dy = x1 - x0, y1 - y0
    adx, ady = abs(dx), abs(dy)
    sx = 1 if dx >= 0 else -1
    sy = 1 if dy >= 0 else -1
    if adx == 0 and ady == 0:
        return np.array([x0]), np.array([y0])
    if adx >= ady:
        i = np.arange(adx + 1)
        xs = x0 + sx * i
        ys = y0 + sy * ((2 * i * ady + adx) // (2 * adx))
    else:
        i = np.arange(ady + 1)
        ys = y0 + sy * i
        xs = x0 + sx * ((2 * i * adx + ady) // (2 * ady))
    return xs, ys


def render_wireframe(tri: Triangulation, canvas_w: int, canvas_h: int) -> RasterImage:
    """White canvas with every triangulation edge drawn 1 pixel wide in black.

    Shared edges are drawn once; endpoints are ordered by vertex index so
    the traversal is direction-independent and deterministic.
    """
    img = np.full((canvas_h, canvas_w, 3), 255, dtype=np.uint8)
    verts = tri.vertices
    edges = set()
    for a, b, c in tri.triangles:
        for u, v in ((a, b), (b, c), (c, a)):
            edges.add((min(u, v), max(u, v)))
    for u, v in sorted(edges):
        xs, ys = _line_pixels(
            int(verts[u][0]), int(verts[u][1]), int(verts[v][0]), int(verts[v][1])
        )
        img[ys, xs] = 0
    return RasterImage(img)
