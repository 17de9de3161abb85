"""Kernel backend selection.

The environment variable NFPLS_BACKEND picks the implementation of the hot
numeric kernels at import time: "numba" (default when numba imports cleanly)
or "numpy" (pure-numpy fallback).  `use()` switches at runtime, which the
benchmark and the backend tests rely on.
"""

import os

from . import _kernels_np

_IMPLS = {"numpy": _kernels_np}

try:
    from . import _kernels_nb

    _IMPLS["numba"] = _kernels_nb
    _DEFAULT = "numba"
except ImportError:  # pragma: no cover - numba is a declared dependency
    _DEFAULT = "numpy"

_requested = os.environ.get("NFPLS_BACKEND", _DEFAULT).strip().lower()
if _requested not in _IMPLS:
    raise ValueError(
        f"NFPLS_BACKEND={_requested!r} not available; "
        f"choose one of {sorted(_IMPLS)}"
    )
_active = _requested


def available():
    """Names of the kernel implementations present in this install."""
    return tuple(sorted(_IMPLS))


def active():
    """Name of the backend currently serving kernel calls."""
    return _active


def use(name):
    """Switch the kernel backend; returns the previously active name."""
    global _active
    if name not in _IMPLS:
        raise ValueError(f"unknown backend {name!r}; choose one of {sorted(_IMPLS)}")
    previous = _active
    _active = name
    return previous


def implementation(name=None):
    """The kernel module for `name` (default: the active backend)."""
    return _IMPLS[name or _active]


def channel_entries(*args):
    return _IMPLS[_active].channel_entries(*args)


def quad_double_sum(*args):
    return _IMPLS[_active].quad_double_sum(*args)


def quad_single_sum(*args):
    return _IMPLS[_active].quad_single_sum(*args)
