"""Float kernel selection: the compiled extension when built, numpy otherwise.

Set ``CKPIERCE_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("CKPIERCE_PURE_PYTHON") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

segment_distances = _impl.segment_distances
region_members = _impl.region_members
