"""3x3 convolution, Laplacian sharpening, Sobel magnitude and thresholding.

Convolution uses the cross-correlation convention: kernels are applied as
written, never flipped. One pass shrinks each dimension by exactly 2 since
boundary pixels are not mapped, so the sharpen -> sobel composition leaves a
grid 4 smaller than the original on each axis, offset by (2, 2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backends
from .errors import ImageSizeError, ParameterError
from .raster import GrayImage


@dataclass(frozen=True)
class Kernel3x3:
    """3x3 integer kernel; row index is the y offset, column index the x."""

    weights: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if len(self.weights) != 3 or any(len(r) != 3 for r in self.weights):
            raise ParameterError("kernel must be a 3x3 grid")

    def as_array(self) -> np.ndarray:
        return np.array(self.weights, dtype=np.int32)


LAPLACIAN = Kernel3x3(((0, -1, 0), (-1, 5, -1), (0, -1, 0)))
SOBEL_X = Kernel3x3(((1, 0, -1), (2, 0, -2), (1, 0, -1)))
SOBEL_Y = Kernel3x3(((1, 2, 1), (0, 0, 0), (-1, -2, -1)))


@dataclass(eq=False)
class EdgeMap:
    """Sobel magnitude grid plus the offset back to original coordinates.

    EdgeMap coordinate (x, y) maps to original-image pixel
    (x + offset[0], y + offset[1]); (2, 2) under the default pipeline.
    """

    magnitudes: np.ndarray
    offset: tuple[int, int]

    def __post_init__(self):
        self.magnitudes = np.ascontiguousarray(self.magnitudes, dtype=np.uint8)
        if self.magnitudes.ndim != 2:
            raise ValueError("magnitudes must have shape (height, width)")

    @property
    def width(self) -> int:
        return self.magnitudes.shape[1]

    @property
    def height(self) -> int:
        return self.magnitudes.shape[0]


@dataclass(eq=False)
class ThresholdedPixels:
    """Edge pixels at or above the threshold, in original-image coordinates.

    `coords` has shape (n, 2) with columns (x, y), rows sorted by (y, x).
    """

    coords: np.ndarray
    threshold_used: int

    def __post_init__(self):
        self.coords = np.ascontiguousarray(self.coords, dtype=np.int64)
        if self.coords.ndim != 2 or self.coords.shape[1] != 2:
            raise ValueError("coords must have shape (n, 2)")

    def __len__(self) -> int:
        return len(self.coords)


def convolve3x3(img: GrayImage, kernel: Kernel3x3, clamp: bool = True):
    """Convolve a grayscale image, dropping the one-pixel boundary.

    Output pixel (x, y) is the weighted sum of the 3x3 neighborhood of input
    pixel (x+1, y+1). With `clamp` the result is a GrayImage limited to
    [0, 255]; without it the raw signed grid (int32 ndarray) is returned,
    which the Sobel stage needs for its two gradients.
    """
    if img.width < 3 or img.height < 3:
        raise ImageSizeError(
            f"image {img.width}x{img.height} too small for a 3x3 convolution"
        )
    src = np.ascontiguousarray(img.values, dtype=np.int32)
    out = backends.get_backend().convolve3x3(
        src, kernel.as_array(), clamp, backends.num_threads()
    )
    if clamp:
        return GrayImage(out, origin=(img.origin[0] + 1, img.origin[1] + 1))
    return out


def sharpen(img: GrayImage) -> GrayImage:
    """Laplacian sharpening, clamped to [0, 255]; shrinks by 2 per axis."""
    return convolve3x3(img, LAPLACIAN, clamp=True)


def sobel(img: GrayImage) -> EdgeMap:
    """Sobel gradient magnitude, rounded and clamped to an 8-bit grid.

    Gradients are computed unclamped (signed); the magnitude is
    round(sqrt(gx^2 + gy^2)) capped at 255.
    """
    gx = convolve3x3(img, SOBEL_X, clamp=False)
    gy = convolve3x3(img, SOBEL_Y, clamp=False)
    mag = backends.get_backend().gradient_magnitude(gx, gy, backends.num_threads())
    return EdgeMap(mag, offset=(img.origin[0] + 1, img.origin[1] + 1))


def threshold_pixels(edges: EdgeMap, t: int = 50) -> ThresholdedPixels:
    """Keep pixels with magnitude >= t, translated to original coordinates."""
    if not 0 <= t <= 255:
        raise ParameterError(f"threshold must be in [0, 255], got {t}")
    ys, xs = np.nonzero(edges.magnitudes >= t)
    coords = np.empty((len(xs), 2), dtype=np.int64)
    coords[:, 0] = xs + edges.offset[0]
    coords[:, 1] = ys + edges.offset[1]
    return ThresholdedPixels(coords, threshold_used=t)
