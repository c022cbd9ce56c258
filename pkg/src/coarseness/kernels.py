"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``COARSENESS_PURE_PYTHON`` is set to a non-empty value
other than ``0``, the pure-Python reference implementation is used.  Both
return identical results.
"""
import os

from . import _fallback

_impl = _fallback
if os.environ.get("COARSENESS_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _kernels as _impl  # noqa: F811
    except ImportError:  # extension not built
        _impl = _fallback

BACKEND = _impl.BACKEND
halfplane_scan = _impl.halfplane_scan
wedge_scan = _impl.wedge_scan
local_search_d1 = _impl.local_search_d1


def compiled_available() -> bool:
    try:
        from . import _kernels  # noqa: F401
    except ImportError:
        return False
    return True


def backend_module(name: str):
    """Return the kernel module named ``"python"`` or ``"cython"``."""
    if name == "python":
        return _fallback
    if name == "cython":
        from . import _kernels
        return _kernels
    raise ValueError(f"unknown backend {name!r}")
