"""Benchmark the compiled kernels against the NumPy fallback.

Run with:  python -m lowpoly.bench [--size N] [--repeats K]

Times the three hot kernels and the full pipeline on a synthetic image and
prints one table row per (operation, backend). Outputs are also compared so
a speed win can never hide a semantic drift.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from . import backends
from .delaunay import triangulate
from .filters import LAPLACIAN, SOBEL_X
from .pipeline import PipelineConfig, run_pipeline
from .raster import RasterImage, to_grayscale
from .render import triangle_colors
from .sampling import PointSet


def synthetic_image(size: int) -> RasterImage:
    x = np.arange(size)[np.newaxis, :]
    y = np.arange(size)[:, np.newaxis]
    r = 40 + 170 * ((x // 64 + y // 64) % 2) + 10 * np.sin(x / 9.0)
    g = 128 + 90 * np.sin((x + 2 * y) / 37.0)
    b = 100 + 100 * np.cos((2 * x - y) / 53.0)
    return RasterImage(np.clip(np.stack([r, g, b], axis=2), 0, 255).astype(np.uint8))


def _time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=1024)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args(argv)

    img = synthetic_image(args.size)
    gray = np.ascontiguousarray(to_grayscale(img).values, dtype=np.int32)
    lap = LAPLACIAN.as_array()
    sob = SOBEL_X.as_array()

    rng_pts = np.unique(
        np.vstack([
            np.stack(np.divmod(np.arange(0, args.size * args.size, 9973), args.size), axis=1)[:, ::-1],
            [[0, 0], [args.size - 1, 0], [0, args.size - 1], [args.size - 1, args.size - 1]],
        ]),
        axis=0,
    )
    tri = triangulate(PointSet(rng_pts, ["edge"] * len(rng_pts), seed=0))
    colors = triangle_colors(tri, img)
    verts = np.ascontiguousarray(tri.vertices, np.int64)
    tris = np.ascontiguousarray(tri.triangles, np.int32)

    rows = []
    # python first so the compiled rows can print their speedup against it
    names = sorted(backends.available_backends(), key=lambda n: n != "python")
    for name in names:
        k = backends.get_backend(name)
        rows.append((f"convolve3x3 {args.size}^2", name,
                     _time(lambda: k.convolve3x3(gray, lap, True, 1), args.repeats)))
        gx = k.convolve3x3(gray, sob, False, 1)
        rows.append((f"gradient_magnitude {args.size}^2", name,
                     _time(lambda: k.gradient_magnitude(gx, gx, 1), args.repeats)))
        rows.append((f"fill_triangles {tri.triangle_count} tris", name,
                     _time(lambda: k.fill_triangles(verts, tris, colors, img.width, img.height, (0, 0, 0)),
                           args.repeats)))
        backends.set_backend(name)
        try:
            rows.append((f"full pipeline {args.size}^2", name,
                         _time(lambda: run_pipeline(img, PipelineConfig()), max(1, args.repeats // 2))))
        finally:
            backends.set_backend(None)

    # cross-check once: identical outputs across backends
    if len(names) == 2:
        a, b = (backends.get_backend(n) for n in names)
        assert np.array_equal(a.convolve3x3(gray, lap, True, 1), b.convolve3x3(gray, lap, True, 1))
        assert np.array_equal(
            a.fill_triangles(verts, tris, colors, img.width, img.height, (0, 0, 0)),
            b.fill_triangles(verts, tris, colors, img.width, img.height, (0, 0, 0)),
        )
        print("outputs bit-identical across backends\n")

    width = max(len(r[0]) for r in rows)
    print(f"{'operation':<{width}}  {'backend':<8} {'best (ms)':>10}")
    base: dict[str, float] = {}
    for op, name, secs in rows:
        note = ""
        if name == "python":
            base[op] = secs
        elif op in base and secs > 0:
            note = f"  ({base[op] / secs:.1f}x vs python)"
        print(f"{op:<{width}}  {name:<8} {secs * 1000:>10.2f}{note}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
