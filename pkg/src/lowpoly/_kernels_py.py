"""NumPy implementations of the hot kernels.

This is the fallback backend selected when the compiled extension is not
available. Every function here must produce bit-identical output to its
counterpart in `_kernels_c`; all arithmetic is integer except the Sobel
square root, whose rounding is pinned to floor(x + 0.5).
"""

from __future__ import annotations

import numpy as np

NAME = "python"

_KEY_SHIFT = 21  # vertex indices fit in 21 bits; packed triple fits in int64
_NO_KEY = np.iinfo(np.int64).max


def convolve3x3(src: np.ndarray, kernel: np.ndarray, clamp: bool, num_threads: int = 1):
    """Valid-mode 3x3 cross-correlation of an int32 grid.

    out[y, x] = sum_{dy, dx in 0..2} src[y+dy, x+dx] * kernel[dy, dx].
    Returns uint8 clamped to [0, 255] when `clamp`, else the raw int32 grid.
    """
    h, w = src.shape
    oh, ow = h - 2, w - 2
    out = np.zeros((oh, ow), dtype=np.int32)
    for dy in range(3):
        for dx in range(3):
            kw = int(kernel[dy, dx])
            if kw:
                out += kw * src[dy : dy + oh, dx : dx + ow]
    if clamp:
        return np.clip(out, 0, 255).astype(np.uint8)
    return out


def gradient_magnitude(gx: np.ndarray, gy: np.ndarray, num_threads: int = 1) -> np.ndarray:
    """round(sqrt(gx^2 + gy^2)) clamped to 255, as uint8.

    gx^2 + gy^2 is an exact integer, so sqrt never lands on a .5 tie and the
    floor(x + 0.5) rounding is unambiguous.
    """
    s = gx.astype(np.int64) ** 2 + gy.astype(np.int64) ** 2
    m = np.floor(np.sqrt(s.astype(np.float64)) + 0.5)
    return np.minimum(m, 255.0).astype(np.uint8)


def _top_left(dx: int, dy: int) -> bool:
    # Directed edge with the triangle interior on its positive side:
    # "top" edges run rightward (dy == 0, dx > 0), "left" edges run upward.
    # Accepting ties on exactly these edges equals sampling at an
    # (eps, eps^2)-perturbed point, which makes the claims a partition.
    return dy < 0 or (dy == 0 and dx > 0)


def fill_triangles(
    verts: np.ndarray,
    tris: np.ndarray,
    colors: np.ndarray,
    width: int,
    height: int,
    background: tuple[int, int, int],
) -> np.ndarray:
    """Paint each triangle with its color; every covered sample exactly once.

    Vertices are embedded at their pixel centers, so sampling pixel (x, y)
    at its own center reduces every edge test to exact integer arithmetic
    on the raw coordinates. Two claims per sample:

    1. strict top-left rule (a partition of the interior, so at most one
       triangle ever claims a sample);
    2. samples inside a closed triangle that nothing claimed (hull-boundary
       ties all rejected) go to the incident triangle with the smallest
       sorted index triple, which keeps the result independent of triangle
       order.
    """
    img = np.empty((height, width, 3), dtype=np.uint8)
    img[:, :] = np.asarray(background, dtype=np.uint8)
    claimed = np.zeros((height, width), dtype=bool)
    fb_key = np.full((height, width), _NO_KEY, dtype=np.int64)
    fb_tri = np.full((height, width), -1, dtype=np.int32)
    v = verts.astype(np.int64)
    for t in range(len(tris)):
        ia, ib, ic = (int(i) for i in tris[t])
        ax, ay = v[ia]
        bx, by = v[ib]
        cx, cy = v[ic]
        px0 = max(0, int(min(ax, bx, cx)))
        px1 = min(width - 1, int(max(ax, bx, cx)))
        py0 = max(0, int(min(ay, by, cy)))
        py1 = min(height - 1, int(max(ay, by, cy)))
        if px1 < px0 or py1 < py0:
            continue
        qx = np.arange(px0, px1 + 1, dtype=np.int64)
        qy = np.arange(py0, py1 + 1, dtype=np.int64)[:, np.newaxis]
        claim = None
        closed = None
        for (ex0, ey0, ex1, ey1) in ((ax, ay, bx, by), (bx, by, cx, cy), (cx, cy, ax, ay)):
            e = (ex1 - ex0) * (qy - ey0) - (ey1 - ey0) * (qx - ex0)
            acc = (e > 0) | ((e == 0) & _top_left(int(ex1 - ex0), int(ey1 - ey0)))
            closed_e = e >= 0
            claim = acc if claim is None else (claim & acc)
            closed = closed_e if closed is None else (closed & closed_e)
        win = (slice(py0, py1 + 1), slice(px0, px1 + 1))
        img[win][claim] = colors[t]
        claimed[win] |= claim
        lo, mid, hi = sorted((ia, ib, ic))
        key = ((lo << _KEY_SHIFT) | mid) << _KEY_SHIFT | hi
        upd = closed & (key < fb_key[win])
        fb_key[win][upd] = key
        fb_tri[win][upd] = t
    leftover = ~claimed & (fb_tri >= 0)
    img[leftover] = colors[fb_tri[leftover]]
    return img
