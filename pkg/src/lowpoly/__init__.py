"""Edge-guided low-poly image triangulation.

Converts a raster image into triangulated artwork: grayscale, Laplacian
sharpening and Sobel edge detection pick out structure; thresholded edge
pixels are sparsified into vertices; their Delaunay triangulation is filled
with the original image's centroid colors.
"""

from .backends import active_backend_name, available_backends, set_backend
from .delaunay import Triangle, Triangulation, centroid, in_circumcircle, triangulate
from .errors import (
    DecodeError,
    DegenerateInputError,
    ImageSizeError,
    LowpolyError,
    ParameterError,
    TooFewPointsError,
)
from .filters import (
    LAPLACIAN,
    SOBEL_X,
    SOBEL_Y,
    EdgeMap,
    Kernel3x3,
    ThresholdedPixels,
    convolve3x3,
    sharpen,
    sobel,
    threshold_pixels,
)
from .pipeline import PipelineConfig, PipelineResult, RunStats, run_pipeline, sweep
from .raster import (
    GrayImage,
    PixelCoord,
    RasterImage,
    decode_image,
    encode_image,
    to_grayscale,
)
from .render import rasterize, render_wireframe, triangle_color, triangle_colors
from .sampling import PointSet, SamplerConfig, add_frame_points, random_points, subsample_uniform

__version__ = "0.1.0"

__all__ = [
    "DecodeError",
    "DegenerateInputError",
    "EdgeMap",
    "GrayImage",
    "ImageSizeError",
    "Kernel3x3",
    "LAPLACIAN",
    "LowpolyError",
    "ParameterError",
    "PipelineConfig",
    "PipelineResult",
    "PixelCoord",
    "PointSet",
    "RasterImage",
    "RunStats",
    "SOBEL_X",
    "SOBEL_Y",
    "SamplerConfig",
    "ThresholdedPixels",
    "TooFewPointsError",
    "Triangle",
    "Triangulation",
    "active_backend_name",
    "add_frame_points",
    "available_backends",
    "centroid",
    "convolve3x3",
    "decode_image",
    "encode_image",
    "in_circumcircle",
    "random_points",
    "rasterize",
    "render_wireframe",
    "run_pipeline",
    "set_backend",
    "sharpen",
    "sobel",
    "subsample_uniform",
    "sweep",
    "threshold_pixels",
    "to_grayscale",
    "triangle_color",
    "triangle_colors",
    "triangulate",
]
