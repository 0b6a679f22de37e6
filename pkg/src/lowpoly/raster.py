"""Image decoding/encoding, pixel addressing and grayscale conversion.

Coordinate convention used across the package: x is the column index and
grows rightward, y is the row index and grows downward, both 0-based.
Arrays are stored row-major, so ``pixels[y, x]`` addresses pixel (x, y).
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import DecodeError

# Two 3x3 convolution passes each shrink the image by 2; anything smaller
# than this leaves no pixels for the Sobel stage.
MIN_DIMENSION = 5


class PixelCoord(NamedTuple):
    x: int
    y: int


@dataclass(eq=False)
class RasterImage:
    """RGB pixel grid; `pixels` has shape (height, width, 3), dtype uint8."""

    pixels: np.ndarray

    def __post_init__(self):
        self.pixels = np.ascontiguousarray(self.pixels, dtype=np.uint8)
        if self.pixels.ndim != 3 or self.pixels.shape[2] != 3:
            raise ValueError("pixels must have shape (height, width, 3)")

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def pixel(self, x: int, y: int) -> tuple[int, int, int]:
        r, g, b = self.pixels[y, x]
        return int(r), int(g), int(b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RasterImage):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)


@dataclass(eq=False)
class GrayImage:
    """Single-channel grid, shape (height, width), dtype uint8.

    `origin` is the translation from this image's coordinates back to the
    image it was derived from; each convolution pass adds (1, 1).
    """

    values: np.ndarray
    origin: tuple[int, int] = (0, 0)

    def __post_init__(self):
        self.values = np.ascontiguousarray(self.values, dtype=np.uint8)
        if self.values.ndim != 2:
            raise ValueError("values must have shape (height, width)")

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def height(self) -> int:
        return self.values.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.origin == other.origin and np.array_equal(self.values, other.values)


def decode_image(data: bytes) -> RasterImage:
    """Decode a PNG or JPEG byte stream into an RGB image.

    Alpha, when present, is composited over white. Size is not gated here;
    the pipeline rejects images smaller than 5x5 before convolving.
    """
    try:
        img = Image.open(io.BytesIO(data))
        img.load()
    except (UnidentifiedImageError, OSError, ValueError) as e:
        raise DecodeError(f"cannot decode image: {e}") from e
    if img.mode in ("RGBA", "LA", "PA") or (img.mode == "P" and "transparency" in img.info):
        rgba = img.convert("RGBA")
        canvas = Image.new("RGB", rgba.size, (255, 255, 255))
        canvas.paste(rgba, mask=rgba.getchannel("A"))
        img = canvas
    else:
        img = img.convert("RGB")
    return RasterImage(np.asarray(img, dtype=np.uint8))


def encode_image(img: RasterImage) -> bytes:
    """Encode to lossless PNG; decode_image(encode_image(img)) == img."""
    out = io.BytesIO()
    Image.fromarray(img.pixels, mode="RGB").save(out, format="PNG")
    return out.getvalue()


def encode_gray(img: GrayImage) -> bytes:
    """Encode a single-channel grid as an RGB PNG (channels replicated)."""
    rgb = np.repeat(img.values[:, :, np.newaxis], 3, axis=2)
    return encode_image(RasterImage(rgb))


def to_grayscale(img: RasterImage) -> GrayImage:
    """Luma conversion: round(0.299 R + 0.587 G + 0.114 B) per pixel.

    Computed in exact integer arithmetic as (299R + 587G + 114B + 500) // 1000,
    which is round-to-nearest with ties away from zero and therefore
    platform-independent.
    """
    p = img.pixels.astype(np.int32)
    c = (299 * p[:, :, 0] + 587 * p[:, :, 1] + 114 * p[:, :, 2] + 500) // 1000
    return GrayImage(c.astype(np.uint8), origin=(0, 0))
