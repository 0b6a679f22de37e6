"""Kernel backend selection.

The compiled extension (`lowpoly._kernels_c`) is preferred when importable;
otherwise the NumPy fallback (`lowpoly._kernels_py`) is used. Override with
the LOWPOLY_BACKEND environment variable ("cython" or "python") or
`set_backend()`. Both backends are bit-identical; only speed differs.

LOWPOLY_THREADS sets the OpenMP thread count for the compiled row loops
(default 1). Results do not depend on it.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py
from .errors import ParameterError

try:
    from . import _kernels_c
except ImportError:
    _kernels_c = None

_BACKENDS = {"python": _kernels_py}
if _kernels_c is not None:
    _BACKENDS["cython"] = _kernels_c

_active: ModuleType | None = None


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def get_backend(name: str | None = None) -> ModuleType:
    """Resolve a backend module by name, or the active default."""
    if name is None:
        return _default()
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ParameterError(
            f"unknown backend {name!r}; available: {available_backends()}"
        ) from None


def set_backend(name: str | None) -> None:
    """Force the active backend; None restores automatic selection."""
    global _active
    _active = None if name is None else get_backend(name)


def active_backend_name() -> str:
    return _default().NAME


def num_threads() -> int:
    raw = os.environ.get("LOWPOLY_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _default() -> ModuleType:
    global _active
    if _active is None:
        env = os.environ.get("LOWPOLY_BACKEND")
        if env:
            _active = get_backend(env)
        elif _kernels_c is not None:
            _active = _kernels_c
        else:
            _active = _kernels_py
    return _active
