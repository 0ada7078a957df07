"""Kernel backend selection, done once at import.

The compiled extension is preferred when present; the pure-Python module
is the drop-in fallback. METACOMMUTE_BACKEND=python|cython forces a
choice (cython fails loudly if the extension is missing).
"""
import os

_requested = os.environ.get("METACOMMUTE_BACKEND", "auto")
if _requested not in ("auto", "cython", "python"):
    raise ImportError(f"METACOMMUTE_BACKEND must be auto, cython or python, not {_requested!r}")

if _requested == "python":
    from metacommute import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from metacommute import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        if _requested == "cython":
            raise
        from metacommute import _kernels_py as _impl

        BACKEND = "python"

COORD_LIMIT = _impl.COORD_LIMIT
mul = _impl.mul
norm = _impl.norm
right_divmod = _impl.right_divmod
gcrd = _impl.gcrd
canonical_min = _impl.canonical_min


def kernel_backend() -> str:
    """Name of the kernel implementation in use ("cython" or "python")."""
    return BACKEND
