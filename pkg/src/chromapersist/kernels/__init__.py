"""Hot counting kernels behind the brute-force oracle.

The numba backend is the default; set CHROMAPERSIST_NO_NUMBA=1 (or any truthy
value) to force the pure-numpy fallback, which gives identical results. Either
way the module exposes count_proper_colorings and count_acyclic_orientations
with the same signatures, plus BACKEND naming the active implementation.
"""

from __future__ import annotations

import os

_disabled = os.environ.get("CHROMAPERSIST_NO_NUMBA", "").strip().lower() not in ("", "0", "false")

if _disabled:
    from . import _numpy_impl as _impl
else:
    try:
        from . import _numba_impl as _impl
    except ImportError:
        from . import _numpy_impl as _impl

BACKEND = _impl.BACKEND
MAX_ORIENTATION_EDGES = _impl.MAX_ORIENTATION_EDGES
count_proper_colorings = _impl.count_proper_colorings
count_acyclic_orientations = _impl.count_acyclic_orientations

__all__ = [
    "BACKEND",
    "MAX_ORIENTATION_EDGES",
    "count_acyclic_orientations",
    "count_proper_colorings",
]
