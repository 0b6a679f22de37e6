"""Exception hierarchy shared by the library, CLI and service."""


class LowpolyError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(LowpolyError):
    """A caller-supplied parameter is out of its documented range."""


class DegenerateInputError(LowpolyError):
    """Input is structurally unusable (collinear points, empty set, ...)."""


class TooFewPointsError(DegenerateInputError):
    """Fewer than three vertices would reach the triangulation stage."""


class ImageSizeError(DegenerateInputError):
    """Image too small to survive the two convolution passes."""


class DecodeError(LowpolyError):
    """Byte stream is not a decodable PNG/JPEG image."""
