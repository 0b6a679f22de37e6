# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled implementations of the hot kernels.

Must stay bit-identical to `_kernels_py`: integer arithmetic throughout,
and the Sobel magnitude pinned to floor(sqrt(s) + 0.5) in IEEE doubles.
Row loops may run under OpenMP; every output element depends only on the
input, so the thread count cannot change the result.
"""

import numpy as np

cimport numpy as cnp
from cython.parallel cimport prange
from libc.math cimport floor, sqrt

NAME = "cython"

DEF KEY_SHIFT = 21
cdef long long NO_KEY = 0x7FFFFFFFFFFFFFFF


def convolve3x3(cnp.int32_t[:, ::1] src, cnp.int32_t[:, ::1] kernel, bint clamp,
                int num_threads=1):
    """Valid-mode 3x3 cross-correlation; see `_kernels_py.convolve3x3`."""
    cdef Py_ssize_t h = src.shape[0], w = src.shape[1]
    cdef Py_ssize_t oh = h - 2, ow = w - 2
    cdef cnp.int32_t k00 = kernel[0, 0], k01 = kernel[0, 1], k02 = kernel[0, 2]
    cdef cnp.int32_t k10 = kernel[1, 0], k11 = kernel[1, 1], k12 = kernel[1, 2]
    cdef cnp.int32_t k20 = kernel[2, 0], k21 = kernel[2, 1], k22 = kernel[2, 2]
    out = np.empty((oh, ow), dtype=np.int32)
    cdef cnp.int32_t[:, ::1] o = out
    cdef Py_ssize_t x, y
    cdef int nt = num_threads if num_threads > 0 else 1
    for y in prange(oh, nogil=True, schedule="static", num_threads=nt):
        for x in range(ow):
            o[y, x] = (k00 * src[y, x] + k01 * src[y, x + 1] + k02 * src[y, x + 2]
                       + k10 * src[y + 1, x] + k11 * src[y + 1, x + 1] + k12 * src[y + 1, x + 2]
                       + k20 * src[y + 2, x] + k21 * src[y + 2, x + 1] + k22 * src[y + 2, x + 2])
    if clamp:
        return np.clip(out, 0, 255).astype(np.uint8)
    return out


def gradient_magnitude(cnp.int32_t[:, ::1] gx, cnp.int32_t[:, ::1] gy,
                       int num_threads=1):
    """round(sqrt(gx^2 + gy^2)) clamped to 255; see `_kernels_py`."""
    cdef Py_ssize_t h = gx.shape[0], w = gx.shape[1]
    out = np.empty((h, w), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] o = out
    cdef Py_ssize_t x, y
    cdef long long s
    cdef double m
    cdef int nt = num_threads if num_threads > 0 else 1
    for y in prange(h, nogil=True, schedule="static", num_threads=nt):
        for x in range(w):
            s = (<long long> gx[y, x]) * gx[y, x] + (<long long> gy[y, x]) * gy[y, x]
            m = floor(sqrt(<double> s) + 0.5)
            o[y, x] = <cnp.uint8_t> (255 if m > 255 else <long long> m)
    return out


cdef inline bint _top_left(long long dx, long long dy) nogil:
    # "top" edges run rightward (dy == 0, dx > 0), "left" edges run upward.
    return dy < 0 or (dy == 0 and dx > 0)


def fill_triangles(cnp.int64_t[:, ::1] verts, cnp.int32_t[:, ::1] tris,
                   cnp.uint8_t[:, ::1] colors, int width, int height,
                   background):
    """Two-pass triangle fill; see `_kernels_py.fill_triangles`."""
    img = np.empty((height, width, 3), dtype=np.uint8)
    img[:, :] = np.asarray(background, dtype=np.uint8)
    claimed_arr = np.zeros((height, width), dtype=np.uint8)
    fb_key_arr = np.full((height, width), NO_KEY, dtype=np.int64)
    fb_tri_arr = np.full((height, width), -1, dtype=np.int32)
    cdef cnp.uint8_t[:, :, ::1] im = img
    cdef cnp.uint8_t[:, ::1] claimed = claimed_arr
    cdef cnp.int64_t[:, ::1] fb_key = fb_key_arr
    cdef cnp.int32_t[:, ::1] fb_tri = fb_tri_arr
    cdef Py_ssize_t t, n = tris.shape[0]
    cdef long long ia, ib, ic, lo, mid, hi, tmp, key
    cdef long long ax, ay, bx, by, cx, cy
    cdef long long eab, ebc, eca
    cdef bint tab, tbc, tca, claim
    cdef Py_ssize_t px, py, px0, px1, py0, py1
    for t in range(n):
        ia = tris[t, 0]
        ib = tris[t, 1]
        ic = tris[t, 2]
        ax = verts[ia, 0]
        ay = verts[ia, 1]
        bx = verts[ib, 0]
        by = verts[ib, 1]
        cx = verts[ic, 0]
        cy = verts[ic, 1]
        px0 = max(0, <Py_ssize_t> min(ax, min(bx, cx)))
        px1 = min(width - 1, <Py_ssize_t> max(ax, max(bx, cx)))
        py0 = max(0, <Py_ssize_t> min(ay, min(by, cy)))
        py1 = min(height - 1, <Py_ssize_t> max(ay, max(by, cy)))
        if px1 < px0 or py1 < py0:
            continue
        tab = _top_left(bx - ax, by - ay)
        tbc = _top_left(cx - bx, cy - by)
        tca = _top_left(ax - cx, ay - cy)
        lo = min(ia, min(ib, ic))
        hi = max(ia, max(ib, ic))
        mid = ia + ib + ic - lo - hi
        key = ((lo << KEY_SHIFT) | mid) << KEY_SHIFT | hi
        for py in range(py0, py1 + 1):
            for px in range(px0, px1 + 1):
                eab = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
                if eab < 0:
                    continue
                ebc = (cx - bx) * (py - by) - (cy - by) * (px - bx)
                if ebc < 0:
                    continue
                eca = (ax - cx) * (py - cy) - (ay - cy) * (px - cx)
                if eca < 0:
                    continue
                # sample is in the closed triangle from here on
                claim = ((eab > 0 or tab) and (ebc > 0 or tbc) and (eca > 0 or tca))
                if claim:
                    im[py, px, 0] = colors[t, 0]
                    im[py, px, 1] = colors[t, 1]
                    im[py, px, 2] = colors[t, 2]
                    claimed[py, px] = 1
                elif key < fb_key[py, px]:
                    fb_key[py, px] = key
                    fb_tri[py, px] = <cnp.int32_t> t
    for py in range(height):
        for px in range(width):
            if claimed[py, px] == 0 and fb_tri[py, px] >= 0:
                t = fb_tri[py, px]
                im[py, px, 0] = colors[t, 0]
                im[py, px, 1] = colors[t, 1]
                im[py, px, 2] = colors[t, 2]
    return img
